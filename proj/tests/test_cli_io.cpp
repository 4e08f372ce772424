#include "golden.hpp"

#include "rlpbwt/errors.hpp"
#include "rlpbwt/index_file.hpp"
#include "rlpbwt/panel_io.hpp"
#include "rlpbwt/reference.hpp"

#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace rlpbwt;
namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& name)
{
    return fs::temp_directory_path() / ("rlpbwt_test_" + std::to_string(::getpid()) + "_" + name);
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

// Flips one byte without fixing the checksum.
std::vector<std::uint8_t> corrupt_byte(std::vector<std::uint8_t> b, std::size_t at)
{
    b.at(at) ^= 0x5a;
    return b;
}

} // namespace

TEST_CASE("digit panels")
{
    const LoadedPanel lp = parse_panel("01\n10\n00\n", PanelFormat::automatic, false);
    CHECK(lp.syntax == SymbolSyntax::digits);
    const PanelReport rep = validate_panel(lp.panel);
    CHECK(rep.h == 3);
    CHECK(rep.w == 2);
    CHECK(rep.sigma == 2);
    CHECK(lp.panel.rows[1] == Haplotype{1, 0});
    // CRLF line endings and trailing blank lines.
    CHECK(parse_panel("01\r\n10\r\n\n\n", PanelFormat::digits, false).panel.rows.size() == 2);
}

TEST_CASE("token panels")
{
    const LoadedPanel lp = parse_panel("#h=2 w=3 sigma=4\n3 0 1\n1 2 0\n", PanelFormat::automatic, false);
    CHECK(lp.syntax == SymbolSyntax::tokens);
    CHECK(lp.panel.sigma == 4);
    CHECK(lp.panel.rows == std::vector<Haplotype>{{3, 0, 1}, {1, 2, 0}});
    const LoadedPanel big = parse_panel("12 400\n7 9\n", PanelFormat::tokens, false);
    CHECK(big.panel.rows[0] == Haplotype{12, 400});
    // A header sigma above 10 selects tokens even for single-symbol rows.
    CHECK(parse_panel("#sigma=20\n5\n17\n", PanelFormat::automatic, false).syntax == SymbolSyntax::tokens);
}

TEST_CASE("ragged rows need the ragged flag")
{
    CHECK_THROWS_WITH_AS(parse_panel("01\n100\n", PanelFormat::automatic, false), doctest::Contains("--ragged"),
                         validation_error);
    const LoadedPanel lp = parse_panel("01\n100\n", PanelFormat::automatic, true);
    CHECK(lp.panel.ragged);
    CHECK(validate_panel(lp.panel).w == 3);
}

TEST_CASE("malformed panels")
{
    CHECK_THROWS_WITH_AS(parse_panel("01\n1x\n", PanelFormat::digits, false), doctest::Contains("<input>:2"),
                         validation_error);
    CHECK_THROWS_AS(parse_panel("0 1\n1 -2\n", PanelFormat::tokens, false), validation_error);
    CHECK_THROWS_AS(parse_panel("0 1\n1 99999999999\n", PanelFormat::tokens, false), validation_error);
    CHECK_THROWS_WITH_AS(parse_panel("#sigma=2\n01\n12\n", PanelFormat::automatic, false),
                         doctest::Contains("sigma"), validation_error);
    CHECK_THROWS_AS(parse_panel("#h=3\n01\n10\n", PanelFormat::automatic, false), validation_error);
    CHECK_THROWS_AS(parse_panel("#w=3\n01\n10\n", PanelFormat::automatic, false), validation_error);
    CHECK_THROWS_AS(parse_panel("#depth=3\n01\n", PanelFormat::automatic, false), validation_error);
    CHECK_THROWS_AS(parse_panel("01\n#h=1\n", PanelFormat::automatic, false), validation_error);
    CHECK_THROWS_AS(parse_panel("#sigma=12\n01\n", PanelFormat::digits, false), validation_error);
    CHECK_THROWS_AS(parse_panel("\n\n", PanelFormat::automatic, false), validation_error);
    CHECK_THROWS_AS(parse_panel("0 1\n1 0\n", PanelFormat::digits, false), validation_error);
}

TEST_CASE("missing panel file is an I/O error")
{
    CHECK_THROWS_AS(load_panel(temp_path("does_not_exist"), PanelFormat::automatic, false), io_error);
    const fs::path p = temp_path("panel.txt");
    write_file(p, "01\n10\n00\n");
    CHECK(load_panel(p, PanelFormat::automatic, false).panel.rows.size() == 3);
    fs::remove(p);
}

TEST_CASE("patterns and haplotype formatting")
{
    CHECK(parse_pattern("010", SymbolSyntax::digits) == Haplotype{0, 1, 0});
    CHECK(parse_pattern("", SymbolSyntax::digits).empty());
    CHECK(parse_pattern(" 3 10 2 ", SymbolSyntax::tokens) == Haplotype{3, 10, 2});
    CHECK_THROWS_AS(parse_pattern("0a", SymbolSyntax::digits), validation_error);
    CHECK(format_haplotype(Haplotype{1, 0}, SymbolSyntax::digits) == "10");
    CHECK(format_haplotype(Haplotype{12, 0}, SymbolSyntax::tokens) == "12 0");
}

TEST_CASE("encode/decode round trip is byte-identical and preserves answers")
{
    reference::Rng rng(83);
    for (int k = 0; k < 100; ++k) {
        const bool ragged = k % 4 == 0;
        const Panel p = reference::random_panel(rng, {.max_h = 24, .max_w = 24, .max_sigma = 4, .ragged = ragged});
        const BuildOptions opts{.sorted = k % 3 == 0, .with_back = k % 2 == 0};
        const PanelIndex ix = PanelIndex::build(p, opts);
        const auto bytes = encode_index(ix);
        const PanelIndex back = decode_index(bytes);
        CHECK(encode_index(back) == bytes);
        CHECK(back.steps() == ix.steps());
        CHECK(back.sorted() == ix.sorted());
        CHECK(back.ragged() == ix.ragged());
        CHECK(back.sigma() == ix.sigma());
        const auto pats = reference::sample_patterns(rng, p, 25, validate_panel(p).sigma, 30);
        for (const auto& pat : pats) {
            CHECK(back.prefix_search(pat) == ix.prefix_search(pat));
            if (ix.sorted())
                CHECK(back.enumerate(pat).ids == ix.enumerate(pat).ids);
        }
        for (row_t i = 1; i <= p.height(); ++i)
            CHECK(back.extract(i) == p.rows[i - 1]);
    }
}

TEST_CASE("save and load through a file")
{
    const Panel p = golden::digits({"01", "10", "00"});
    const PanelIndex ix = PanelIndex::build(p, {.syntax = SymbolSyntax::tokens});
    const fs::path path = temp_path("index.bin");
    save_index(path, ix);
    const PanelIndex back = load_index(path);
    CHECK(back.syntax() == SymbolSyntax::tokens);
    CHECK(back.prefix_search(Haplotype{0, 0}) == PrefixResult{2, 1, 3});
    CHECK(back.extract(2) == Haplotype{1, 0});
    fs::remove(path);
    CHECK_THROWS_AS(load_index(path), io_error);
}

TEST_CASE("corrupt index files are rejected")
{
    const PanelIndex ix = PanelIndex::build(golden::digits({"01", "10", "00"}));
    const auto bytes = encode_index(ix);

    for (std::size_t cut : {std::size_t{0}, std::size_t{7}, std::size_t{30}, bytes.size() / 2, bytes.size() - 1})
        CHECK_THROWS_AS(decode_index(std::span(bytes).first(cut)), io_error);
    CHECK_THROWS_WITH_AS(decode_index(std::span(bytes).first(bytes.size() - 5)), doctest::Contains("checksum"),
                         io_error);

    auto bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK_THROWS_WITH_AS(decode_index(bad_magic), doctest::Contains("magic"), io_error);

    CHECK_THROWS_WITH_AS(decode_index(corrupt_byte(bytes, 40)), doctest::Contains("checksum"), io_error);
    CHECK_THROWS_AS(decode_index(corrupt_byte(bytes, bytes.size() - 2)), io_error);
}

TEST_CASE("version mismatch is rejected even with a valid checksum")
{
    // Layout: 8-byte magic, then the version; the last four bytes hold crc32
    // of everything before them.
    const PanelIndex ix = PanelIndex::build(golden::digits({"01", "10", "00"}));
    auto bytes = encode_index(ix);
    bytes[8] = static_cast<std::uint8_t>(kIndexFormatVersion + 1);
    bytes.resize(bytes.size() - 4);
    // Bitwise CRC-32 (IEEE), independent of zlib.
    std::uint32_t crc = 0xffffffffu;
    for (std::uint8_t b : bytes) {
        crc ^= b;
        for (int k = 0; k < 8; ++k)
            crc = (crc >> 1) ^ (0xedb88320u & (0u - (crc & 1u)));
    }
    crc ^= 0xffffffffu;
    for (int k = 0; k < 4; ++k)
        bytes.push_back(static_cast<std::uint8_t>(crc >> (8 * k)));
    CHECK_THROWS_WITH_AS(decode_index(bytes), doctest::Contains("version"), io_error);
}
