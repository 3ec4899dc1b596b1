#include "airpockets/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "airpockets/bijections.hpp"
#include "airpockets/enumerator.hpp"
#include "airpockets/genfun.hpp"
#include "airpockets/recurrence.hpp"
#include "airpockets/riordan.hpp"
#include "airpockets/verify.hpp"

namespace airpockets {

namespace {

// Rejected input that is not a CLI11 parse error (bad class, bad path, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json, Bfile };

const std::map<std::string, Format> kFormats = {
    {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}, {"bfile", Format::Bfile}};

// Brute force materialises every prefix; beyond this length it is skipped by --check.
constexpr int kCheckBruteMax = 16;

int default_order()
{
    const char* env = std::getenv("AIRPOCKETS_ORDER");
    if (env == nullptr || *env == '\0') {
        return kDefaultOrder;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 2 || v > 100000) {
        throw UsageError("AIRPOCKETS_ORDER must be an integer >= 2, got '" + std::string(env) + "'");
    }
    return static_cast<int>(v);
}

Avoidance class_arg(const std::string& name)
{
    try {
        return parse_avoidance(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_restricted(Avoidance cls, const std::string& what)
{
    if (cls == Avoidance::Unrestricted) {
        throw UsageError(what + " is not available for class none");
    }
}

std::string json_array(const std::vector<Integer>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + v[i].get_str();
    }
    return out + "]";
}

void print_sequence(std::ostream& out, const std::vector<Integer>& terms, Format format, long offset,
                    const std::string& label)
{
    switch (format) {
    case Format::Table:
        for (std::size_t i = 0; i < terms.size(); ++i) {
            out << (i ? " " : "") << terms[i];
        }
        out << '\n';
        break;
    case Format::Csv:
        out << "index,value\n";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            out << offset + static_cast<long>(i) << ',' << terms[i] << '\n';
        }
        break;
    case Format::Json:
        out << "{\"series\":\"" << label << "\",\"offset\":" << offset << ",\"terms\":" << json_array(terms) << "}\n";
        break;
    case Format::Bfile:
        for (std::size_t i = 0; i < terms.size(); ++i) {
            out << offset + static_cast<long>(i) << ' ' << terms[i] << '\n';
        }
        break;
    }
}

void print_triangle(std::ostream& out, const Triangle& t, Format format, long offset, const std::string& label,
                    const std::optional<RiordanArray>& pair)
{
    const std::size_t rows = t.rows();
    std::vector<Integer> g_terms;
    std::vector<Integer> f_terms;
    if (pair) {
        for (std::size_t i = 0; i < rows; ++i) {
            g_terms.push_back(require_integral(pair->g()[static_cast<int>(i)], "g"));
            f_terms.push_back(require_integral(pair->f()[static_cast<int>(i)], "f"));
        }
    }
    auto pair_lines = [&](const char* prefix) {
        if (!pair) {
            return;
        }
        out << prefix << "g:";
        for (const Integer& c : g_terms) {
            out << ' ' << c;
        }
        out << '\n' << prefix << "f:";
        for (const Integer& c : f_terms) {
            out << ' ' << c;
        }
        out << '\n';
    };

    switch (format) {
    case Format::Table: {
        std::size_t width = 1;
        for (std::size_t n = 0; n < rows; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                width = std::max(width, t.at(n, k).get_str().size());
            }
        }
        for (std::size_t n = 0; n < rows; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                out << (k ? " " : "") << std::setw(static_cast<int>(width)) << t.at(n, k).get_str();
            }
            out << '\n';
        }
        pair_lines("");
        break;
    }
    case Format::Csv:
        for (std::size_t n = 0; n < rows; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                out << (k ? "," : "") << t.at(n, k);
            }
            out << '\n';
        }
        pair_lines("# ");
        break;
    case Format::Json:
        out << "{\"triangle\":\"" << label << "\",\"rows\":[";
        for (std::size_t n = 0; n < rows; ++n) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k <= n; ++k) {
                row.push_back(t.at(n, k));
            }
            out << (n ? "," : "") << json_array(row);
        }
        out << "]";
        if (pair) {
            out << ",\"riordan\":{\"g\":" << json_array(g_terms) << ",\"f\":" << json_array(f_terms) << "}";
        }
        out << "}\n";
        break;
    case Format::Bfile: {
        long index = offset;
        for (std::size_t n = 0; n < rows; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                out << index++ << ' ' << t.at(n, k) << '\n';
            }
        }
        pair_lines("# ");
        break;
    }
    }
}

// ---------------------------------------------------------------- count

using Row = std::vector<Integer>;

Row row_of(const Triangle& t, int n)
{
    Row out;
    for (int k = 0; k <= n; ++k) {
        out.push_back(t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)));
    }
    return out;
}

Row engine_row(const std::string& method, Avoidance cls, int n)
{
    const auto un = static_cast<std::size_t>(n);
    if (method == "brute") {
        return row_of(count_table_brute(un, cls).totals(), n);
    }
    if (method == "dp") {
        return row_of(count_table_dp(un, cls).totals(), n);
    }
    require_restricted(cls, "method " + method);
    if (method == "series") {
        return row_of(series_triangle(cls, n), n);
    }
    if (method == "recurrence") {
        return row_of(recurrence_triangle(cls, n), n);
    }
    if (cls == Avoidance::DoubleRiseLess) {
        throw UsageError("method closed-form is available for peakless and valleyless only");
    }
    Row out;
    for (int k = 0; k <= n; ++k) {
        out.push_back(cls == Avoidance::PeakLess ? closed_form_peakless(n, k) : closed_form_valleyless(n, k));
    }
    return out;
}

std::string render_row(const Row& row, std::optional<int> k)
{
    if (k) {
        return *k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(*k)].get_str() : "0";
    }
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        s += (i ? " " : "") + row[i].get_str();
    }
    return s;
}

int cmd_count(std::ostream& out, std::ostream& err, const std::string& cls_text, int n, std::optional<int> k,
              std::optional<std::string> method, bool check)
{
    const Avoidance cls = class_arg(cls_text);
    if (n < 0 || (k && *k < 0)) {
        throw UsageError("n and k must be non-negative");
    }
    if (!check) {
        const std::string m = method.value_or(cls == Avoidance::Unrestricted ? "dp" : "series");
        out << render_row(engine_row(m, cls, n), k) << '\n';
        return kExitOk;
    }

    std::vector<std::string> engines;
    if (n <= kCheckBruteMax) {
        engines.push_back("brute");
    }
    engines.push_back("dp");
    if (cls != Avoidance::Unrestricted) {
        engines.push_back("series");
        engines.push_back("recurrence");
    }
    if (cls == Avoidance::PeakLess || cls == Avoidance::ValleyLess) {
        engines.push_back("closed-form");
    }
    std::vector<std::string> values;
    for (const std::string& e : engines) {
        values.push_back(render_row(engine_row(e, cls, n), k));
    }
    bool agree = true;
    for (const std::string& v : values) {
        agree = agree && v == values.front();
    }
    if (!agree) {
        err << "engine disagreement:\n";
        for (std::size_t i = 0; i < engines.size(); ++i) {
            err << "  " << engines[i] << ": " << values[i] << '\n';
        }
        return kExitDisagreement;
    }
    out << values.front() << '\n';
    err << "engines agree:";
    for (const std::string& e : engines) {
        err << ' ' << e;
    }
    err << '\n';
    return kExitOk;
}

// ------------------------------------------------------------- triangle

int cmd_triangle(std::ostream& out, const std::string& cls_text, int rows, Format format, long offset, bool riordan,
                 bool reindex_g)
{
    const Avoidance cls = class_arg(cls_text);
    if (rows < 1) {
        throw UsageError("rows must be at least 1");
    }
    std::optional<RiordanArray> pair;
    Triangle t;
    std::string label(to_string(cls));
    if (reindex_g) {
        if (cls != Avoidance::DoubleRiseLess) {
            throw UsageError("--reindex-g applies to uuless only");
        }
        const auto depth = static_cast<std::size_t>(std::max(2 * rows - 3, 0));
        t = g_triangle_reindex(count_table(depth, cls).totals(), rows);
        label += "-g";
    } else {
        t = count_table(static_cast<std::size_t>(rows - 1), cls).totals();
    }
    if (riordan) {
        const int order = std::max(rows, 2);
        switch (cls) {
        case Avoidance::PeakLess:
            pair = peakless_array(order);
            break;
        case Avoidance::ValleyLess:
            pair = valleyless_array(order);
            break;
        case Avoidance::DoubleRiseLess:
            if (!reindex_g) {
                throw UsageError("the uuless triangle is not a Riordan array; add --reindex-g");
            }
            pair = uuless_g_array(order);
            break;
        case Avoidance::Unrestricted:
            throw UsageError("no Riordan pair for class none");
        }
    }
    print_triangle(out, t, format, offset, label, pair);
    return kExitOk;
}

// --------------------------------------------------------------- series

RiordanArray named_array(Avoidance cls, int order)
{
    switch (cls) {
    case Avoidance::PeakLess:
        return peakless_array(order);
    case Avoidance::ValleyLess:
        return valleyless_array(order);
    case Avoidance::DoubleRiseLess:
        return uuless_g_array(order);
    case Avoidance::Unrestricted:
        break;
    }
    throw UsageError("no Riordan array for class none");
}

int cmd_series(std::ostream& out, const std::vector<std::string>& args, Format format, long offset)
{
    if (args.empty()) {
        throw UsageError("series needs a name: total1, total0, aseq, zseq or catalan");
    }
    const std::string& name = args[0];
    const bool needs_class = name != "catalan";
    if (name != "total1" && name != "total0" && name != "aseq" && name != "zseq" && name != "catalan") {
        throw UsageError("unknown series '" + name + "' (expected total1, total0, aseq, zseq or catalan)");
    }
    const std::size_t fixed = needs_class ? 2 : 1;
    if (args.size() < fixed || args.size() > fixed + 1) {
        throw UsageError(needs_class ? "usage: series " + name + " <class> [order]" : "usage: series catalan [order]");
    }
    int last = default_order() - 1;  // terms 0..last
    if (args.size() == fixed + 1) {
        try {
            std::size_t used = 0;
            last = std::stoi(args[fixed], &used);
            if (used != args[fixed].size() || last < 0) {
                throw std::invalid_argument("bad");
            }
        } catch (const std::exception&) {
            throw UsageError("order must be a non-negative integer, got '" + args[fixed] + "'");
        }
    }
    const int order = std::max(last, 2);

    std::vector<Integer> terms;
    std::string label = name;
    if (!needs_class) {
        terms = integer_coefficients(catalan(order));
    } else {
        const Avoidance cls = class_arg(args[1]);
        label += " " + std::string(to_string(cls));
        if (name == "total1" || name == "total0") {
            if (cls == Avoidance::Unrestricted) {
                const CountTable t = count_table_dp(static_cast<std::size_t>(last), cls);
                for (std::size_t n = 0; n <= static_cast<std::size_t>(last); ++n) {
                    terms.push_back(name == "total1" ? t.row_sum(n) : t.total(n, 0));
                }
            } else {
                terms = counts(name == "total1" ? total_at_one(cls, order) : total_column(cls, 0, order));
            }
        } else {
            const AZSequences az = a_and_z_sequences(named_array(cls, order + 2), last + 1);
            for (const Rational& c : name == "aseq" ? az.a : az.z) {
                terms.push_back(require_integral(c, name.c_str()));
            }
        }
    }
    terms.resize(static_cast<std::size_t>(last) + 1);
    print_sequence(out, terms, format, offset, label);
    return kExitOk;
}

// ------------------------------------------------------------ bijection

std::string shown(const LatticePath& p)
{
    return p.empty() ? "eps" : render_path(p);
}

LatticePath apply_map(BijectionMap map, const LatticePath& p)
{
    switch (map) {
    case BijectionMap::Psi:
        return psi(p);
    case BijectionMap::Phi:
        return phi(p);
    case BijectionMap::Chi:
        break;
    }
    return chi(p);
}

std::vector<LatticePath> children(const Decomposition& d)
{
    switch (d.grammar) {
    case Grammar::PeakLess: {
        std::vector<LatticePath> out = d.alphas;
        if (d.form == 2) {
            out.push_back(d.beta);
        }
        return out;
    }
    case Grammar::ValleyLess:
        switch (d.form) {
        case 1:
            return {};
        case 2:
        case 3:
            return d.alphas;
        case 4:
            return {d.beta, d.alphas.at(0)};
        case 5:
            return {d.reduced};
        default:
            return {d.beta, d.reduced};
        }
    case Grammar::UULess:
        switch (d.form) {
        case 1:
            return {};
        case 5:
            return {d.alphas.at(0), d.beta};
        case 6:
            return {d.reduced, d.beta};
        default:
            return d.alphas;
        }
    }
    return {};
}

void trace(std::ostream& out, BijectionMap map, const LatticePath& p, int depth)
{
    const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
    const std::string head = indent + std::string(to_string(map)) + "(" + shown(p) + ") = " + shown(apply_map(map, p));
    if (map == BijectionMap::Psi && p.empty()) {
        out << head << '\n';
        return;
    }
    const Decomposition d = map == BijectionMap::Psi   ? decompose_peakless(p)
                            : map == BijectionMap::Phi ? decompose_valleyless(p)
                                                       : decompose_uuless(p);
    out << head << "  by " << describe(d) << '\n';
    for (const LatticePath& c : children(d)) {
        trace(out, map, c, depth + 1);
    }
}

int cmd_bijection(std::ostream& out, const std::string& name, const std::string& text, bool with_trace)
{
    BijectionMap map{};
    LatticePath p;
    try {
        map = parse_bijection_map(name);
        p = parse_path(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    try {
        if (with_trace) {
            trace(out, map, p, 0);
        }
        out << shown(apply_map(map, p)) << '\n';
    } catch (const DomainError& e) {
        throw UsageError(std::string("domain error: ") + e.what());
    }
    return kExitOk;
}

// --------------------------------------------------------------- render

// Row r is the band between heights r and r + 1. U draws '/', H draws '_'
// on the floor of its band, D_k draws '\' in its top band and '|' below.
std::vector<std::string> render_grid(const LatticePath& p)
{
    if (p.empty()) {
        return {};
    }
    int bands = 1;
    for (std::size_t i = 0; i < p.length(); ++i) {
        const int h = p.height_before(i);
        bands = std::max(bands, p[i].is_down() ? h : h + 1);
    }
    std::vector<std::string> grid(static_cast<std::size_t>(bands), std::string(p.length(), ' '));
    auto put = [&](int row, std::size_t col, char c) { grid[static_cast<std::size_t>(row)][col] = c; };
    for (std::size_t i = 0; i < p.length(); ++i) {
        const int h = p.height_before(i);
        const Step s = p[i];
        if (s.is_up()) {
            put(h, i, '/');
        } else if (s.is_horizontal()) {
            put(h, i, '_');
        } else {
            put(h - 1, i, '\\');
            for (int r = h - 2; r >= h - s.drop(); --r) {
                put(r, i, '|');
            }
        }
    }
    std::vector<std::string> lines;
    for (int r = bands - 1; r >= 0; --r) {
        std::string line = grid[static_cast<std::size_t>(r)];
        line.erase(line.find_last_not_of(' ') + 1);
        lines.push_back(std::move(line));
    }
    return lines;
}

int cmd_render(std::ostream& out, const std::string& text)
{
    LatticePath p;
    try {
        p = parse_path(text, StepRule::Plain);
    } catch (const PathError& e) {
        throw UsageError(e.what());
    }
    for (const std::string& line : render_grid(p)) {
        out << line << '\n';
    }
    return kExitOk;
}

// --------------------------------------------------------------- verify

int cmd_verify(std::ostream& out, const std::string& suite_name, int n_max)
{
    Suite suite{};
    try {
        suite = parse_suite(suite_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (n_max < 1 || n_max > 16) {
        throw UsageError("--nmax must be between 1 and 16");
    }
    const VerifyReport report = run_verify(suite, n_max, default_order());
    for (const Check& c : report.checks) {
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", c.seconds);
        out << (c.pass ? "PASS " : "FAIL ") << c.suite << '/' << c.name << " [" << timing << "] " << c.detail << '\n';
    }
    out << report.checks.size() - report.failures() << '/' << report.checks.size() << " checks passed\n";
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Motzkin paths with air pockets: enumeration, series, Riordan arrays and bijections", "airpockets"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    // count
    std::string count_class;
    int count_n = 0;
    std::optional<int> count_k;
    std::optional<std::string> count_method;
    bool count_check = false;
    auto* count = app.add_subcommand("count", "t(n,k), or the whole row n when k is omitted");
    count->add_option("class", count_class, "peakless, valleyless, uuless or none")->required();
    count->add_option("n", count_n, "path length")->required();
    count->add_option("k", count_k, "end height");
    count->add_option("--method", count_method, "counting engine")
        ->check(CLI::IsMember({"brute", "dp", "series", "recurrence", "closed-form"}));
    count->add_flag("--check", count_check, "run every applicable engine and require agreement");

    // shared format options
    std::string format_name = "table";
    long offset = 0;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "table, csv, json or bfile")
            ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));
        sub->add_option("--offset", offset, "first b-file / csv index");
    };

    // triangle
    std::string tri_class;
    int tri_rows = 0;
    bool tri_riordan = false;
    bool tri_reindex = false;
    auto* tri = app.add_subcommand("triangle", "leading rows of t(n,k)");
    tri->add_option("class", tri_class, "peakless, valleyless, uuless or none")->required();
    tri->add_option("rows", tri_rows, "number of rows")->required();
    tri->add_flag("--riordan", tri_riordan, "also print the leading coefficients of the (g, f) pair");
    tri->add_flag("--reindex-g", tri_reindex, "uuless only: g(n,k) = t(n+k-1,k)");
    add_format(tri);

    // series
    std::vector<std::string> series_args;
    auto* ser = app.add_subcommand("series", "coefficients 0..order of a named series");
    ser->add_option("args", series_args, "<name> [class] [order]; name is total1, total0, aseq, zseq or catalan")
        ->required();
    add_format(ser);

    // bijection
    std::string bij_name;
    std::string bij_path;
    bool bij_trace = false;
    auto* bij = app.add_subcommand("bijection", "apply psi, phi or chi to a path");
    bij->add_option("map", bij_name, "psi, phi or chi")->required();
    bij->add_option("path", bij_path, "path text, e.g. UUHDHUHUHD3HH")->required();
    bij->add_flag("--trace", bij_trace, "print the recursive decomposition");

    // verify
    std::string suite_name = "all";
    int n_max = 12;
    auto* ver = app.add_subcommand("verify", "cross-engine invariant suites");
    ver->add_option("--suite", suite_name, "systems, triangles, bijections, riordan or all");
    ver->add_option("--nmax", n_max, "largest path length checked");

    // render
    std::string render_text;
    auto* ren = app.add_subcommand("render", "ASCII profile of a path");
    ren->add_option("path", render_text, "path text")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        const Format format = kFormats.at(format_name);
        if (*count) {
            return cmd_count(out, err, count_class, count_n, count_k, count_method, count_check);
        }
        if (*tri) {
            return cmd_triangle(out, tri_class, tri_rows, format, offset, tri_riordan, tri_reindex);
        }
        if (*ser) {
            return cmd_series(out, series_args, format, offset);
        }
        if (*bij) {
            return cmd_bijection(out, bij_name, bij_path, bij_trace);
        }
        if (*ver) {
            return cmd_verify(out, suite_name, n_max);
        }
        return cmd_render(out, render_text);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace airpockets
