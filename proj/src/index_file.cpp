#include "rlpbwt/index_file.hpp"

#include "rlpbwt/errors.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace rlpbwt {
namespace {

constexpr std::array<char, 8> kMagic{'R', 'L', 'P', 'B', 'W', 'T', 'I', 'X'};

enum Flag : std::uint32_t {
    kFlagSorted = 1u << 0,
    kFlagTerminator = 1u << 1,
    kFlagBack = 1u << 2,
    kFlagTokens = 1u << 3,
};

enum Tag : std::uint32_t { kFore = 1, kBackTag = 2, kPrefix = 3, kPerm = 4, kRetrieval = 5 };

class Writer {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u32(std::uint32_t v)
    {
        for (int k = 0; k < 4; ++k)
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
    }
    void u64(std::uint64_t v)
    {
        for (int k = 0; k < 8; ++k)
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
    }
    void u32s(std::span<const std::uint32_t> vs)
    {
        u64(vs.size());
        for (auto v : vs)
            u32(v);
    }
    void bytes(std::span<const std::uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
    void section(std::uint32_t tag, const Writer& payload)
    {
        u32(tag);
        u64(payload.buf_.size());
        bytes(payload.buf_);
    }
    std::vector<std::uint8_t>& buffer() { return buf_; }

private:
    std::vector<std::uint8_t> buf_;
};

[[noreturn]] void corrupt(const std::string& what)
{
    throw io_error("corrupt index: " + what);
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> b) : b_(b) {}

    std::uint8_t u8()
    {
        need(1);
        return b_[pos_++];
    }
    std::uint32_t u32()
    {
        need(4);
        std::uint32_t v = 0;
        for (int k = 0; k < 4; ++k)
            v |= static_cast<std::uint32_t>(b_[pos_++]) << (8 * k);
        return v;
    }
    std::uint64_t u64()
    {
        need(8);
        std::uint64_t v = 0;
        for (int k = 0; k < 8; ++k)
            v |= static_cast<std::uint64_t>(b_[pos_++]) << (8 * k);
        return v;
    }
    std::vector<std::uint32_t> u32s()
    {
        const std::uint64_t count = u64();
        if (count > remaining() / 4)
            corrupt("array length exceeds section");
        std::vector<std::uint32_t> out(count);
        for (auto& v : out)
            v = u32();
        return out;
    }
    std::span<const std::uint8_t> take(std::uint64_t len)
    {
        if (len > remaining())
            corrupt("section length exceeds file");
        auto s = b_.subspan(pos_, len);
        pos_ += len;
        return s;
    }
    std::size_t remaining() const noexcept { return b_.size() - pos_; }
    bool done() const noexcept { return pos_ == b_.size(); }

private:
    void need(std::size_t k) const
    {
        if (remaining() < k)
            corrupt("unexpected end of data");
    }
    std::span<const std::uint8_t> b_;
    std::size_t pos_ = 0;
};

void put_fore(Writer& w, const ForeStepColumn& c)
{
    w.u32(c.n);
    w.u32(static_cast<std::uint32_t>(c.starts.size()));
    for (std::size_t x = 0; x < c.starts.size(); ++x) {
        w.u32(c.starts[x]);
        w.u32(c.val_fore[x]);
    }
    w.u32(static_cast<std::uint32_t>(c.tuples.size()));
    for (const auto& list : c.tuples) {
        w.u8(static_cast<std::uint8_t>(list.size()));
        for (const auto& t : list) {
            w.u32(t.s_prime);
            w.u32(t.s_tilde);
            w.u32(t.s);
            w.u32(t.t);
            w.u32(t.lambda);
        }
    }
}

void put_back(Writer& w, const BackStepColumn& c)
{
    w.u32(c.n);
    w.u32(static_cast<std::uint32_t>(c.starts.size()));
    for (std::size_t x = 0; x < c.starts.size(); ++x) {
        w.u32(c.starts[x]);
        w.u32(c.val_back[x]);
    }
    w.u32(static_cast<std::uint32_t>(c.tuples.size()));
    for (const auto& list : c.tuples) {
        w.u8(static_cast<std::uint8_t>(list.size()));
        for (const auto& t : list) {
            w.u32(t.s_tilde);
            w.u32(t.t_tilde);
            w.u32(t.s);
            w.u32(t.lambda);
        }
    }
}

template <class Column>
void read_header(Reader& r, Column& c, std::vector<symbol_t>& vals)
{
    c.n = r.u32();
    const std::uint32_t rho = r.u32();
    if (rho > r.remaining() / 8)
        corrupt("sub-run count exceeds section");
    c.starts.resize(rho);
    vals.resize(rho);
    for (std::uint32_t x = 0; x < rho; ++x) {
        c.starts[x] = r.u32();
        vals[x] = r.u32();
    }
}

std::uint8_t list_size(Reader& r)
{
    const std::uint8_t k = r.u8();
    if (k > 3)
        corrupt("tuple list longer than three");
    return k;
}

ForeStepColumn get_fore(Reader& r)
{
    ForeStepColumn c;
    read_header(r, c, c.val_fore);
    const std::uint32_t lists = r.u32();
    if (lists != 0 && lists != c.starts.size())
        corrupt("fore tuple list count mismatch");
    c.tuples.resize(lists);
    for (auto& list : c.tuples) {
        const auto k = list_size(r);
        for (std::uint8_t t = 0; t < k; ++t) {
            ForeQuint q;
            q.s_prime = r.u32();
            q.s_tilde = r.u32();
            q.s = r.u32();
            q.t = r.u32();
            q.lambda = r.u32();
            list.push_back(q);
        }
    }
    return c;
}

BackStepColumn get_back(Reader& r)
{
    BackStepColumn c;
    read_header(r, c, c.val_back);
    const std::uint32_t lists = r.u32();
    if (lists != 0 && lists != c.starts.size())
        corrupt("back tuple list count mismatch");
    c.tuples.resize(lists);
    for (auto& list : c.tuples) {
        const auto k = list_size(r);
        for (std::uint8_t t = 0; t < k; ++t) {
            BackQuad q;
            q.s_tilde = r.u32();
            q.t_tilde = r.u32();
            q.s = r.u32();
            q.lambda = r.u32();
            list.push_back(q);
        }
    }
    return c;
}

std::uint32_t crc_of(std::span<const std::uint8_t> b)
{
    uLong crc = crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths; feed in chunks for very large files.
    std::size_t off = 0;
    while (off < b.size()) {
        const auto chunk = static_cast<uInt>(std::min<std::size_t>(b.size() - off, 1u << 30));
        crc = crc32(crc, b.data() + off, chunk);
        off += chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

} // namespace

std::vector<std::uint8_t> encode_index(const PanelIndex& ix)
{
    const StepIndex& st = ix.steps();
    const IndexDims& d = st.dims();
    Writer w;
    for (char c : kMagic)
        w.u8(static_cast<std::uint8_t>(c));
    w.u32(kIndexFormatVersion);
    std::uint32_t flags = 0;
    if (ix.sorted())
        flags |= kFlagSorted;
    if (d.terminator_mode)
        flags |= kFlagTerminator;
    if (st.has_back())
        flags |= kFlagBack;
    if (ix.syntax() == SymbolSyntax::tokens)
        flags |= kFlagTokens;
    w.u32(flags);
    w.u64(d.h);
    w.u64(d.w);
    w.u64(ix.sigma());
    w.u64(d.sigma);
    w.u64(d.r_tilde);

    Writer fore;
    for (const auto& c : st.fore_columns())
        put_fore(fore, c);
    w.section(kFore, fore);

    if (st.has_back()) {
        Writer back;
        for (const auto& c : st.back_columns())
            put_back(back, c);
        w.section(kBackTag, back);
    }

    const PrefixSearchIndex& px = ix.prefix_index();
    Writer prefix;
    for (std::size_t j = 1; j <= d.w; ++j) {
        const auto pa = px.s_pa(j);
        const auto cnt = px.s_count(j);
        prefix.u32(static_cast<std::uint32_t>(pa.size()));
        for (std::size_t x = 0; x < pa.size(); ++x) {
            prefix.u32(pa[x]);
            prefix.u32(cnt[x]);
        }
    }
    w.section(kPrefix, prefix);

    if (ix.sorted()) {
        Writer perm;
        perm.u32s(px.perm_inv());
        w.section(kPerm, perm);
    }

    Writer retr;
    retr.u32s(ix.retrieval().col1_starts());
    w.section(kRetrieval, retr);

    auto& buf = w.buffer();
    const std::uint32_t crc = crc_of(buf);
    w.u32(crc);
    return std::move(buf);
}

PanelIndex decode_index(std::span<const std::uint8_t> bytes)
{
    constexpr std::size_t header = 8 + 4 + 4 + 5 * 8;
    if (bytes.size() >= kMagic.size() &&
        !std::equal(kMagic.begin(), kMagic.end(), bytes.begin(),
                    [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; }))
        throw io_error("not an index file (bad magic)");
    if (bytes.size() < header + 4)
        corrupt("file too short");

    const auto body = bytes.first(bytes.size() - 4);
    Reader tail(bytes.last(4));
    if (tail.u32() != crc_of(body))
        throw io_error("index checksum mismatch (file truncated or damaged)");

    Reader r(body);
    r.take(kMagic.size());
    const std::uint32_t version = r.u32();
    if (version != kIndexFormatVersion)
        throw io_error("unsupported index version " + std::to_string(version) + " (expected " +
                       std::to_string(kIndexFormatVersion) + ")");
    const std::uint32_t flags = r.u32();
    if (flags & ~std::uint32_t{kFlagSorted | kFlagTerminator | kFlagBack | kFlagTokens})
        corrupt("unknown flags");

    IndexDims d;
    d.h = r.u64();
    d.w = r.u64();
    const std::uint64_t public_sigma = r.u64();
    const std::uint64_t internal_sigma = r.u64();
    d.r_tilde = r.u64();
    d.terminator_mode = (flags & kFlagTerminator) != 0;
    if (d.h == 0 || d.w == 0 || d.h > UINT32_MAX || internal_sigma > UINT32_MAX || public_sigma > UINT32_MAX)
        corrupt("bad dimensions");
    d.sigma = static_cast<symbol_t>(internal_sigma);

    auto expect = [&](std::uint32_t tag) {
        if (r.u32() != tag)
            corrupt("unexpected section tag");
        return Reader(r.take(r.u64()));
    };
    auto finish = [](const Reader& s) {
        if (!s.done())
            corrupt("trailing bytes in section");
    };

    Reader fs = expect(kFore);
    std::vector<ForeStepColumn> fore;
    for (std::size_t j = 0; j < d.w; ++j)
        fore.push_back(get_fore(fs));
    finish(fs);

    std::vector<BackStepColumn> back;
    if (flags & kFlagBack) {
        Reader bs = expect(kBackTag);
        for (std::size_t j = 0; j < d.w; ++j)
            back.push_back(get_back(bs));
        finish(bs);
    }

    Reader ps = expect(kPrefix);
    std::vector<std::vector<row_t>> s_pa(d.w), s_count(d.w);
    for (std::size_t j = 0; j < d.w; ++j) {
        const std::uint32_t rho = ps.u32();
        if (rho != fore[j].starts.size())
            corrupt("prefix arrays disagree with fore tables");
        s_pa[j].resize(rho);
        s_count[j].resize(rho);
        for (std::uint32_t x = 0; x < rho; ++x) {
            s_pa[j][x] = ps.u32();
            s_count[j][x] = ps.u32();
        }
    }
    finish(ps);

    std::vector<row_t> perm_inv;
    if (flags & kFlagSorted) {
        Reader pm = expect(kPerm);
        perm_inv = pm.u32s();
        finish(pm);
        if (perm_inv.size() != d.h)
            corrupt("permutation length mismatch");
    }

    Reader rs = expect(kRetrieval);
    const auto starts = rs.u32s();
    finish(rs);
    if (!r.done())
        corrupt("trailing data after sections");
    if (starts != fore[0].starts)
        corrupt("retrieval starts disagree with fore tables");

    try {
        auto steps = std::make_shared<const StepIndex>(d, std::move(back), std::move(fore));
        PrefixSearchIndex px(std::move(steps), std::move(s_pa), std::move(s_count), (flags & kFlagSorted) != 0,
                             std::move(perm_inv));
        return PanelIndex(static_cast<symbol_t>(public_sigma),
                          (flags & kFlagTokens) ? SymbolSyntax::tokens : SymbolSyntax::digits, std::move(px));
    } catch (const std::exception& e) {
        corrupt(e.what());
    }
}

void save_index(const std::filesystem::path& path, const PanelIndex& ix)
{
    const auto bytes = encode_index(ix);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw io_error("write failed: " + path.string());
}

PanelIndex load_index(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_index(bytes);
}

} // namespace rlpbwt
