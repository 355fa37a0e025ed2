#include "schreier/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schreier/partcomp.hpp"
#include "schreier/verify.hpp"

namespace schreier::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr Int kLargeBound = 30;
constexpr const char *kCorner = "ell/n";

std::optional<Int> parse_int(std::string_view s)
{
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntRange require_range(const std::string &text, const char *flag)
{
    auto r = parse_range(text);
    if (!r || r->empty())
        throw UsageError(std::string(flag) + ": expected a nonempty range a..b, got '" + text + "'");
    return *r;
}

// Partition and composition objects reachable from `enumerate`.
struct Listing {
    std::vector<std::vector<Int>> rows;
    char open = '{';
    char close = '}';
};

std::vector<Int> as_vector(std::span<const Int> xs) { return {xs.begin(), xs.end()}; }

std::string braced(const std::vector<Int> &xs, char open, char close)
{
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    os << close;
    return os.str();
}

struct Flags {
    std::string family;
    std::optional<Int> n, ell, k, q, m, v, s;
};

Int need(const std::optional<Int> &x, const char *name, const std::string &family)
{
    if (!x)
        throw UsageError("family " + family + " needs --" + name);
    return *x;
}

std::optional<Listing> partition_listing(const Flags &f)
{
    const std::string &fam = f.family;
    auto parts = [](std::vector<Partition> ps) {
        Listing l;
        for (auto &p : ps)
            l.rows.push_back(as_vector(p.parts().parts()));
        return l;
    };
    PartitionConstraint c;
    if (fam == "E" || fam == "E_k" || fam == "E_kq") {
        c = parts_at_least(need(f.ell, "ell", fam));
    } else if (fam == "E_distinct" || fam == "E_distinct_k" || fam == "E_distinct_kq") {
        c = distinct_parts_at_least(need(f.ell, "ell", fam));
    } else if (fam == "P" || fam == "P_k") {
        c = parts_at_least(1);
    } else if (fam == "G") {
        c = avoid_two_through(need(f.ell, "ell", fam));
    } else if (fam == "H") {
        c = avoid_two_through_and_large_evens(need(f.ell, "ell", fam));
    } else if (fam == "C") {
        Listing l;
        l.open = '(';
        l.close = ')';
        for (auto &comp : enum_compositions(need(f.n, "n", fam), need(f.v, "v", fam), need(f.s, "s", fam)))
            l.rows.push_back(as_vector(comp.parts()));
        return l;
    } else {
        return std::nullopt;
    }
    if (fam.ends_with("_k") || fam.ends_with("_kq"))
        c.num_parts = need(f.k, "k", fam);
    if (fam.ends_with("_kq"))
        c.top_gap = need(f.q, "q", fam);
    Int n = need(f.n, "n", fam);
    if (n < 0)
        throw UsageError("--n must be >= 0");
    return parts(enum_partitions(n, c));
}

// Counts without listing: DP for partitions, closed form for compositions.
Count count_for(const Flags &f)
{
    const std::string &fam = f.family;
    if (fam == "C")
        return count_c(need(f.n, "n", fam), need(f.v, "v", fam), need(f.s, "s", fam));
    PartitionConstraint c;
    if (fam == "E" || fam == "E_k" || fam == "E_kq")
        c = parts_at_least(need(f.ell, "ell", fam));
    else if (fam == "E_distinct" || fam == "E_distinct_k" || fam == "E_distinct_kq")
        c = distinct_parts_at_least(need(f.ell, "ell", fam));
    else if (fam == "P" || fam == "P_k")
        c = parts_at_least(1);
    else if (fam == "G")
        c = avoid_two_through(need(f.ell, "ell", fam));
    else if (fam == "H")
        c = avoid_two_through_and_large_evens(need(f.ell, "ell", fam));
    else {
        auto family = parse_family(fam);
        if (!family)
            throw UsageError("unknown family '" + fam + "'");
        return count_family(FamilyQuery{*family, need(f.n, "n", fam), f.ell, f.k, f.q, f.m});
    }
    if (fam.ends_with("_k") || fam.ends_with("_kq"))
        c.num_parts = need(f.k, "k", fam);
    if (fam.ends_with("_kq"))
        c.top_gap = need(f.q, "q", fam);
    Int n = need(f.n, "n", fam);
    if (n < 0)
        throw UsageError("--n must be >= 0");
    return count_partitions(n, c);
}

Listing listing_for(const Flags &f, ordered_json &params)
{
    if (f.n)
        params["n"] = *f.n;
    if (f.ell)
        params["ell"] = *f.ell;
    if (f.k)
        params["k"] = *f.k;
    if (f.q)
        params["q"] = *f.q;
    if (f.m)
        params["m"] = *f.m;
    if (f.v)
        params["v"] = *f.v;
    if (f.s)
        params["s"] = *f.s;

    if (auto l = partition_listing(f))
        return *l;
    auto fam = parse_family(f.family);
    if (!fam)
        throw UsageError("unknown family '" + f.family + "'");
    FamilyQuery q{*fam, need(f.n, "n", f.family), f.ell, f.k, f.q, f.m};
    Listing l;
    for (auto &set : enum_family(q))
        l.rows.push_back(as_vector(set.elements()));
    return l;
}

void emit_listing(std::ostream &out, const Flags &f, const Listing &l, const ordered_json &params, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::plain:
        for (auto &row : l.rows)
            out << braced(row, l.open, l.close) << '\n';
        out << "count: " << l.rows.size() << '\n';
        break;
    case OutputFormat::csv:
        for (auto &row : l.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i];
            out << '\n';
        }
        break;
    case OutputFormat::json: {
        ordered_json j;
        j["family"] = f.family;
        j["params"] = params;
        j["values"] = l.rows;
        j["count"] = l.rows.size();
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::bfile:
        throw UsageError("bfile output applies to `sequence` only");
    }
}

ordered_json report_json(const VerifyReport &r)
{
    ordered_json j;
    j["identity"] = identity_name(r.identity);
    j["status"] = r.passed() ? "pass" : "fail";
    j["lhs_method"] = r.lhs_method;
    j["rhs_method"] = r.rhs_method;
    j["bounds"] = {{"max_n", r.bounds.max_n}, {"max_ell", r.bounds.max_ell}, {"gf_degree", r.bounds.gf_degree}};
    j["checked"] = r.checked;
    auto failures = ordered_json::array();
    for (auto &f : r.failures) {
        ordered_json params = ordered_json::object();
        for (auto &[k, v] : f.params)
            params[k] = v;
        failures.push_back({{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"what", f.what}});
    }
    j["failures"] = failures;
    j["notes"] = r.notes;
    return j;
}

void report_plain(std::ostream &out, const VerifyReport &r)
{
    out << (r.passed() ? "PASS " : "FAIL ") << identity_name(r.identity) << "  checked=" << r.checked
        << "  failures=" << r.failures.size() << "  (" << std::fixed << std::setprecision(1) << r.elapsed_ms
        << " ms)\n";
    out << "    " << r.lhs_method << "  vs  " << r.rhs_method << '\n';
    for (auto &note : r.notes)
        out << "    " << note << '\n';
    constexpr std::size_t kShown = 10;
    for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) {
        auto &f = r.failures[i];
        out << "    mismatch:";
        for (auto &[k, v] : f.params)
            out << ' ' << k << '=' << v;
        out << "  lhs=" << f.lhs << " rhs=" << f.rhs << "  [" << f.what << "]\n";
    }
    if (r.failures.size() > kShown)
        out << "    ... " << r.failures.size() - kShown << " more\n";
}

std::string cell_string(Count c) { return std::to_string(c); }

} // namespace

std::optional<OutputFormat> parse_format(std::string_view s)
{
    if (s == "plain")
        return OutputFormat::plain;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    if (s == "bfile")
        return OutputFormat::bfile;
    return std::nullopt;
}

std::optional<IntRange> parse_range(std::string_view s)
{
    auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        auto v = parse_int(s);
        if (!v)
            return std::nullopt;
        return IntRange{*v, *v};
    }
    auto lo = parse_int(s.substr(0, dots));
    auto hi = parse_int(s.substr(dots + 2));
    if (!lo || !hi)
        return std::nullopt;
    return IntRange{*lo, *hi};
}

std::optional<CellCounter> sequence_counter(std::string_view family)
{
    static const std::map<std::string, CellCounter, std::less<>> partition_families{
        {"E", count_E},
        {"E_distinct", count_E_distinct},
        {"G", count_G},
        {"H", count_H},
    };
    if (auto it = partition_families.find(family); it != partition_families.end())
        return it->second;
    auto fam = parse_family(family);
    if (!fam)
        return std::nullopt;
    switch (*fam) {
    case Family::A:
    case Family::A_strong:
    case Family::B:
    case Family::F_script:
    case Family::F_script_strong:
        return CellCounter([f = *fam](Int n, Int ell) { return count_family(FamilyQuery{f, n, ell, {}, {}, {}}); });
    default:
        return std::nullopt;
    }
}

std::string format_table(const CountTable &t, std::string_view family, OutputFormat fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case OutputFormat::plain: {
        std::vector<std::size_t> width(t.ns.size() + 1, 0);
        width[0] = std::string_view(kCorner).size();
        for (Int ell : t.ells)
            width[0] = std::max(width[0], std::to_string(ell).size());
        for (std::size_t c = 0; c < t.ns.size(); ++c) {
            width[c + 1] = std::to_string(t.ns[c]).size();
            for (auto &row : t.values)
                width[c + 1] = std::max(width[c + 1], cell_string(row[c]).size());
        }
        os << std::setw(static_cast<int>(width[0])) << kCorner;
        for (std::size_t c = 0; c < t.ns.size(); ++c)
            os << ' ' << std::setw(static_cast<int>(width[c + 1])) << t.ns[c];
        os << '\n';
        for (std::size_t r = 0; r < t.ells.size(); ++r) {
            os << std::setw(static_cast<int>(width[0])) << t.ells[r];
            for (std::size_t c = 0; c < t.ns.size(); ++c)
                os << ' ' << std::setw(static_cast<int>(width[c + 1])) << t.values[r][c];
            os << '\n';
        }
        break;
    }
    case OutputFormat::csv:
        os << kCorner;
        for (Int n : t.ns)
            os << ',' << n;
        os << '\n';
        for (std::size_t r = 0; r < t.ells.size(); ++r) {
            os << t.ells[r];
            for (Count v : t.values[r])
                os << ',' << v;
            os << '\n';
        }
        break;
    case OutputFormat::json: {
        ordered_json j;
        j["family"] = family;
        j["params"] = {{"n", {t.ns.front(), t.ns.back()}}, {"ell", {t.ells.front(), t.ells.back()}}};
        j["values"] = t.values;
        j["count"] = t.ns.size() * t.ells.size();
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::bfile:
        throw ParamError("bfile output applies to single sequences only");
    }
    return os.str();
}

CountTable parse_csv_table(std::string_view text)
{
    auto split = [](std::string_view line) {
        std::vector<std::string_view> cells;
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return cells;
    };
    auto bad = [](const std::string &why) { return ParamError("malformed CSV table: " + why); };

    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }
    if (lines.empty())
        throw bad("empty input");
    CountTable t;
    auto header = split(lines[0]);
    if (header.empty() || header[0] != kCorner)
        throw bad("missing header");
    for (std::size_t i = 1; i < header.size(); ++i) {
        auto n = parse_int(header[i]);
        if (!n)
            throw bad("bad column label");
        t.ns.push_back(*n);
    }
    for (std::size_t li = 1; li < lines.size(); ++li) {
        auto cells = split(lines[li]);
        if (cells.size() != header.size())
            throw bad("ragged row");
        auto ell = parse_int(cells[0]);
        if (!ell)
            throw bad("bad row label");
        t.ells.push_back(*ell);
        auto &row = t.values.emplace_back();
        for (std::size_t c = 1; c < cells.size(); ++c) {
            Count v{};
            auto [ptr, ec] = std::from_chars(cells[c].data(), cells[c].data() + cells[c].size(), v);
            if (ec != std::errc{} || ptr != cells[c].data() + cells[c].size() || cells[c].empty())
                throw bad("bad cell");
            row.push_back(v);
        }
    }
    return t;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Schreier-type sets, restricted partitions and compositions"};
    app.require_subcommand(1);

    std::string format = "plain";
    auto add_format = [&format](CLI::App *sub, const std::string &allowed) {
        sub->add_option("--format", format, "Output format: " + allowed)->capture_default_str();
    };

    Flags flags;
    auto add_family_flags = [&flags](CLI::App *sub) {
        sub->add_option("--family", flags.family, "Family name")->required();
        sub->add_option("--n", flags.n, "Index n (u for compositions)");
        sub->add_option("--ell", flags.ell, "Strength ell (or least part)");
        sub->add_option("--k", flags.k, "Number of elements or parts");
        sub->add_option("--q", flags.q, "Required minimum (sets) or top gap (partitions)");
        sub->add_option("--m", flags.m, "Set size (B_sized) or required minimum (F_prop1)");
        sub->add_option("--v", flags.v, "Least part of a composition");
        sub->add_option("--s", flags.s, "Number of composition parts");
    };

    auto *enumerate = app.add_subcommand("enumerate", "List the members of a family");
    add_family_flags(enumerate);
    add_format(enumerate, "plain|csv|json");

    auto *count = app.add_subcommand("count", "Count the members of a family");
    add_family_flags(count);

    std::string family, n_text, ell_text;
    auto *table = app.add_subcommand("table", "Tabulate counts over n and ell");
    table->add_option("--family", family, "A, A_strong, B, F_script, F_script_strong, E, E_distinct, G, H")
        ->required();
    table->add_option("--n", n_text, "Range of n, a..b")->required();
    table->add_option("--ell", ell_text, "Range of ell, a..b")->required();
    add_format(table, "plain|csv|json");

    Int seq_ell = 0;
    auto *sequence = app.add_subcommand("sequence", "Emit one row (fixed ell) as a sequence in n");
    sequence->add_option("--family", family, "Family name")->required();
    sequence->add_option("--ell", seq_ell, "Fixed ell")->required();
    sequence->add_option("--n", n_text, "Range of n, a..b")->required();
    add_format(sequence, "plain|csv|json|bfile");

    bool all = false, large = false;
    std::string id_text;
    VerifyBounds bounds;
    auto *verify_cmd = app.add_subcommand("verify", "Check identities by independent computations");
    auto *all_opt = verify_cmd->add_flag("--all", all, "Run every identity");
    auto *id_opt = verify_cmd->add_option("--id", id_text, "Identity name, e.g. EQ1, PROP1, THM10");
    all_opt->excludes(id_opt);
    verify_cmd->add_option("--max-n", bounds.max_n, "Largest n swept")->capture_default_str();
    verify_cmd->add_option("--max-ell", bounds.max_ell, "Largest ell swept")->capture_default_str();
    verify_cmd->add_option("--gf-degree", bounds.gf_degree, "Series truncation degree")->capture_default_str();
    verify_cmd->add_option("--threads", bounds.threads, "Worker threads (0 = all cores)")->capture_default_str();
    verify_cmd->add_flag("--large", large, "Allow --max-n above 30");
    add_format(verify_cmd, "plain|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        auto fmt = parse_format(format);
        if (!fmt)
            throw UsageError("unknown format '" + format + "'");

        if (*enumerate || *count) {
            if (*count) {
                out << count_for(flags) << '\n';
                return kOk;
            }
            ordered_json params = ordered_json::object();
            emit_listing(out, flags, listing_for(flags, params), params, *fmt);
            return kOk;
        }

        if (*table) {
            auto cell = sequence_counter(family);
            if (!cell)
                throw UsageError("family '" + family + "' cannot be tabulated over (n, ell)");
            if (*fmt == OutputFormat::bfile)
                throw UsageError("bfile output applies to `sequence` only");
            auto t = count_table(*cell, require_range(n_text, "--n"), require_range(ell_text, "--ell"));
            out << format_table(t, family, *fmt);
            return kOk;
        }

        if (*sequence) {
            auto cell = sequence_counter(family);
            if (!cell)
                throw UsageError("family '" + family + "' is not a sequence family");
            IntRange ns = require_range(n_text, "--n");
            std::vector<Count> values;
            for (Int n : ns.values())
                values.push_back((*cell)(n, seq_ell));
            switch (*fmt) {
            case OutputFormat::plain:
                for (std::size_t i = 0; i < values.size(); ++i)
                    out << (i ? "," : "") << values[i];
                out << '\n';
                break;
            case OutputFormat::csv:
                out << "n,value\n";
                for (std::size_t i = 0; i < values.size(); ++i)
                    out << ns.lo + static_cast<Int>(i) << ',' << values[i] << '\n';
                break;
            case OutputFormat::bfile:
                for (std::size_t i = 0; i < values.size(); ++i)
                    out << ns.lo + static_cast<Int>(i) << ' ' << values[i] << '\n';
                break;
            case OutputFormat::json: {
                ordered_json j;
                j["family"] = family;
                j["params"] = {{"ell", seq_ell}, {"n", {ns.lo, ns.hi}}};
                j["values"] = values;
                j["count"] = values.size();
                out << j.dump(2) << '\n';
                break;
            }
            }
            return kOk;
        }

        if (*verify_cmd) {
            if (!all && id_text.empty())
                throw UsageError("verify needs --all or --id");
            if (*fmt != OutputFormat::plain && *fmt != OutputFormat::json)
                throw UsageError("verify supports plain and json output");
            if (bounds.max_n > kLargeBound && !large)
                throw UsageError("--max-n above " + std::to_string(kLargeBound) + " needs --large");
            std::vector<VerifyReport> reports;
            if (all) {
                reports = verify_all(bounds);
            } else {
                auto id = parse_identity(id_text);
                if (!id)
                    throw UsageError("unknown identity '" + id_text + "'");
                reports.push_back(verify(*id, bounds));
            }
            bool ok = std::all_of(reports.begin(), reports.end(), [](auto &r) { return r.passed(); });
            if (*fmt == OutputFormat::json) {
                ordered_json j;
                j["status"] = ok ? "pass" : "fail";
                j["reports"] = ordered_json::array();
                for (auto &r : reports)
                    j["reports"].push_back(report_json(r));
                out << j.dump(2) << '\n';
            } else {
                for (auto &r : reports)
                    report_plain(out, r);
                out << (ok ? "all identities pass" : "identity failures found") << '\n';
            }
            return ok ? kOk : kIdentityFailure;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParamError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OverflowError &e) {
        err << "overflow: " << e.what() << '\n';
        return kOverflow;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace schreier::cli
