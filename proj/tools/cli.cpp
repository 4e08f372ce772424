#include "cli.hpp"

#include "rlpbwt/bounds.hpp"
#include "rlpbwt/errors.hpp"
#include "rlpbwt/index_file.hpp"
#include "rlpbwt/panel_index.hpp"
#include "rlpbwt/panel_io.hpp"
#include "rlpbwt/reference.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <string>

namespace rlpbwt {
namespace {

enum Exit : int { kOk = 0, kUsage = 1, kIo = 2, kValidation = 3, kSelftest = 4 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, PanelFormat> kFormats{
    {"auto", PanelFormat::automatic}, {"digits", PanelFormat::digits}, {"tokens", PanelFormat::tokens}};

struct Options {
    std::string panel;
    std::string index;
    std::string output;
    std::string pattern;
    PanelFormat format = PanelFormat::automatic;
    bool sorted = false;
    bool ragged = false;
    bool fore_only = false;
    bool enumerate = false;
    bool csv = false;
    std::uint64_t row = 0;
    std::uint64_t seed = 1;
    std::size_t panels = 100;
};

std::string join_ids(const std::vector<row_t>& ids)
{
    std::string s;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(ids[k]);
    }
    return s;
}

int run_build(const Options& o, std::ostream& out)
{
    const LoadedPanel lp = load_panel(o.panel, o.format, o.ragged);
    BuildOptions bo;
    bo.sorted = o.sorted;
    bo.with_back = !o.fore_only;
    bo.syntax = lp.syntax;
    const PanelIndex ix = PanelIndex::build(lp.panel, bo);
    save_index(o.output, ix);
    const IndexDims& d = ix.steps().dims();
    out << "h=" << d.h << " w=" << d.w << " sigma=" << ix.sigma() << " r_tilde=" << d.r_tilde
        << " words=" << ix.steps().word_count() << " sorted=" << ix.sorted() << " ragged=" << ix.ragged()
        << " back=" << ix.has_back() << '\n';
    return kOk;
}

int run_prefix(const Options& o, std::ostream& out)
{
    const PanelIndex ix = load_index(o.index);
    if (o.enumerate && !ix.sorted())
        throw usage_error("--enumerate needs an index built with --sorted");
    const Haplotype pat = parse_pattern(o.pattern, ix.syntax());
    const PrefixResult r = ix.prefix_search(pat);
    out << "m'=" << r.matched << " occ=" << r.occ << " index=" << r.index;
    if (ix.sorted()) {
        const SortedPrefixResult s = ix.prefix_search_sorted(pat);
        out << " range=[" << s.first << ',' << s.last << ']';
    }
    out << '\n';
    if (o.enumerate)
        out << "ids=" << join_ids(ix.enumerate(pat).ids) << '\n';
    return kOk;
}

int run_extract(const Options& o, std::ostream& out)
{
    const PanelIndex ix = load_index(o.index);
    if (o.row < 1 || o.row > ix.height())
        throw validation_error("haplotype id " + std::to_string(o.row) + " outside [1," +
                               std::to_string(ix.height()) + "]");
    out << format_haplotype(ix.extract(static_cast<row_t>(o.row)), ix.syntax()) << '\n';
    return kOk;
}

int run_stats(const Options& o, std::ostream& out)
{
    const LoadedPanel lp = load_panel(o.panel, o.format, false);
    const BoundsReport r = compute_bounds(lp.panel);
    out << (o.csv ? format_report_csv(r) : format_report(r));
    return r.all_pass() ? kOk : kValidation;
}

int run_selftest(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto rep = reference::run_selftest(o.seed, o.panels, nullptr);
    for (const auto& f : rep.failures)
        err << "FAIL " << f << '\n';
    out << "selftest seed=" << o.seed << " panels=" << rep.panels << " checks=" << rep.checks
        << " failures=" << rep.failures.size() << '\n';
    return rep.ok() ? kOk : kSelftest;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Run-length PBWT index: build, prefix search, extraction, bounds"};
    app.name("rlpbwt");
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "Build an index from a panel file");
    build->add_option("panel", o.panel, "Panel file")->required();
    build->add_option("-o,--output", o.output, "Index file to write")->required();
    build->add_flag("--sorted", o.sorted, "Sort rows lexicographically (enables --enumerate)");
    build->add_flag("--ragged", o.ragged, "Allow rows of different lengths");
    build->add_flag("--fore-only", o.fore_only, "Omit the back-stepping tables");
    build->add_option("--format", o.format, "Panel syntax")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    auto* prefix = app.add_subcommand("prefix", "Longest prefix match of a pattern");
    prefix->add_option("index", o.index, "Index file")->required();
    prefix->add_option("pattern", o.pattern, "Pattern in the panel's symbol syntax")->required();
    prefix->add_flag("--enumerate", o.enumerate, "List matching haplotype ids (sorted index only)");

    auto* extract = app.add_subcommand("extract", "Print haplotype i");
    extract->add_option("index", o.index, "Index file")->required();
    extract->add_option("i", o.row, "Haplotype id (1-based)")->required();

    auto* stats = app.add_subcommand("stats", "Run-count bounds report for a panel");
    stats->add_option("panel", o.panel, "Panel file")->required();
    stats->add_flag("--csv", o.csv, "Per-column CSV instead of key=value lines");
    stats->add_option("--format", o.format, "Panel syntax")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    auto* selftest = app.add_subcommand("selftest", "Randomized comparison against the reference oracles");
    selftest->add_option("--seed", o.seed, "RNG seed");
    selftest->add_option("--panels", o.panels, "Number of random panels")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (build->parsed())
            return run_build(o, out);
        if (prefix->parsed())
            return run_prefix(o, out);
        if (extract->parsed())
            return run_extract(o, out);
        if (stats->parsed())
            return run_stats(o, out);
        return run_selftest(o, out, err);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const io_error& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
}

} // namespace rlpbwt
