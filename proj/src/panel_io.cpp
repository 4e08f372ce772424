#include "rlpbwt/panel_io.hpp"

#include "rlpbwt/errors.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace rlpbwt {
namespace {

struct Header {
    std::optional<std::size_t> h, w;
    std::optional<symbol_t> sigma;
};

constexpr std::string_view kSpace = " \t\r";

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(kSpace);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(kSpace) - b + 1);
}

template <class T>
std::optional<T> parse_uint(std::string_view s)
{
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

Header parse_header(std::string_view line, const std::string& where)
{
    Header hd;
    std::istringstream in{std::string(line.substr(1))};
    std::string field;
    while (in >> field) {
        const auto eq = field.find('=');
        const std::string key = field.substr(0, eq);
        const auto value = eq == std::string::npos ? std::nullopt : parse_uint<std::size_t>(field.substr(eq + 1));
        if (!value)
            throw validation_error(where + ": malformed header field '" + field + "'");
        if (key == "h")
            hd.h = *value;
        else if (key == "w")
            hd.w = *value;
        else if (key == "sigma") {
            if (*value == 0 || *value > UINT32_MAX)
                throw validation_error(where + ": header sigma out of range");
            hd.sigma = static_cast<symbol_t>(*value);
        } else
            throw validation_error(where + ": unknown header field '" + key + "'");
    }
    return hd;
}

Haplotype parse_digits(std::string_view line, const std::string& where)
{
    Haplotype row;
    row.reserve(line.size());
    for (char c : line) {
        if (c < '0' || c > '9')
            throw validation_error(where + ": unexpected character '" + std::string(1, c) + "' in digit row");
        row.push_back(static_cast<symbol_t>(c - '0'));
    }
    return row;
}

Haplotype parse_tokens(std::string_view line, const std::string& where)
{
    Haplotype row;
    std::size_t pos = 0;
    while (true) {
        pos = line.find_first_not_of(kSpace, pos);
        if (pos == std::string_view::npos)
            break;
        auto end = line.find_first_of(kSpace, pos);
        if (end == std::string_view::npos)
            end = line.size();
        const auto tok = line.substr(pos, end - pos);
        const auto v = parse_uint<symbol_t>(tok);
        if (!v)
            throw validation_error(where + ": bad symbol token '" + std::string(tok) + "'");
        row.push_back(*v);
        pos = end;
    }
    return row;
}

} // namespace

LoadedPanel parse_panel(std::string_view text, PanelFormat fmt, bool ragged, std::string_view source)
{
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    Header hd;
    std::size_t lineno = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        const auto line = trim(raw);
        if (line.empty())
            continue;
        const std::string where = std::string(source) + ":" + std::to_string(lineno);
        if (line.front() == '#') {
            if (!lines.empty() || hd.h || hd.w || hd.sigma)
                throw validation_error(where + ": header must be the first line");
            hd = parse_header(line, where);
            continue;
        }
        lines.emplace_back(lineno, line);
    }

    SymbolSyntax syntax = SymbolSyntax::digits;
    if (fmt == PanelFormat::tokens)
        syntax = SymbolSyntax::tokens;
    else if (fmt == PanelFormat::automatic) {
        if (hd.sigma && *hd.sigma > 10)
            syntax = SymbolSyntax::tokens;
        for (const auto& [no, line] : lines)
            if (line.find_first_of(kSpace) != std::string_view::npos)
                syntax = SymbolSyntax::tokens;
    }
    if (syntax == SymbolSyntax::digits && hd.sigma && *hd.sigma > 10)
        throw validation_error(std::string(source) + ": digit format needs sigma <= 10");

    LoadedPanel out;
    out.syntax = syntax;
    out.panel.ragged = ragged;
    out.panel.sigma = hd.sigma.value_or(0);
    for (const auto& [no, line] : lines) {
        const std::string where = std::string(source) + ":" + std::to_string(no);
        Haplotype row = syntax == SymbolSyntax::digits ? parse_digits(line, where) : parse_tokens(line, where);
        if (hd.sigma) {
            for (symbol_t s : row)
                if (s >= *hd.sigma)
                    throw validation_error(where + ": symbol " + std::to_string(s) + " >= sigma " +
                                           std::to_string(*hd.sigma));
        }
        if (!ragged && !out.panel.rows.empty() && row.size() != out.panel.rows.front().size())
            throw validation_error(where + ": row length " + std::to_string(row.size()) + " differs from " +
                                   std::to_string(out.panel.rows.front().size()) + " (ragged input needs --ragged)");
        out.panel.rows.push_back(std::move(row));
    }
    if (out.panel.rows.empty())
        throw validation_error(std::string(source) + ": empty panel");

    const PanelReport rep = validate_panel(out.panel);
    if (hd.h && *hd.h != rep.h)
        throw validation_error(std::string(source) + ": header h=" + std::to_string(*hd.h) + " but " +
                               std::to_string(rep.h) + " rows");
    if (hd.w && *hd.w != rep.w)
        throw validation_error(std::string(source) + ": header w=" + std::to_string(*hd.w) + " but rows have " +
                               std::to_string(rep.w) + " columns");
    return out;
}

LoadedPanel load_panel(const std::filesystem::path& path, PanelFormat fmt, bool ragged)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open panel file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw io_error("read failed: " + path.string());
    return parse_panel(buf.str(), fmt, ragged, path.string());
}

Haplotype parse_pattern(std::string_view text, SymbolSyntax syntax)
{
    const auto t = trim(text);
    return syntax == SymbolSyntax::digits ? parse_digits(t, "pattern") : parse_tokens(t, "pattern");
}

std::string format_haplotype(std::span<const symbol_t> row, SymbolSyntax syntax)
{
    std::string s;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (syntax == SymbolSyntax::digits) {
            s += static_cast<char>('0' + row[k]);
        } else {
            if (k)
                s += ' ';
            s += std::to_string(row[k]);
        }
    }
    return s;
}

} // namespace rlpbwt
