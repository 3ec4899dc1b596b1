#include "airpockets/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <tuple>

#include "airpockets/bijections.hpp"
#include "airpockets/enumerator.hpp"
#include "airpockets/genfun.hpp"
#include "airpockets/recurrence.hpp"
#include "airpockets/riordan.hpp"

namespace airpockets {

std::string_view to_string(Suite suite)
{
    switch (suite) {
    case Suite::Systems:
        return "systems";
    case Suite::Triangles:
        return "triangles";
    case Suite::Bijections:
        return "bijections";
    case Suite::Riordan:
        return "riordan";
    case Suite::All:
        break;
    }
    return "all";
}

Suite parse_suite(std::string_view name)
{
    for (Suite s : {Suite::Systems, Suite::Triangles, Suite::Bijections, Suite::Riordan, Suite::All}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

bool VerifyReport::ok() const
{
    return failures() == 0;
}

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

constexpr Avoidance kRestricted[] = {Avoidance::PeakLess, Avoidance::ValleyLess, Avoidance::DoubleRiseLess};

struct Outcome {
    bool pass;
    std::string detail;
};

class Runner {
public:
    explicit Runner(std::string suite) : suite_(std::move(suite)) {}

    void run(std::string name, const std::function<Outcome()>& body)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, {}};
        try {
            o = body();
        } catch (const std::exception& e) {
            o = Outcome{false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        checks_.push_back(Check{suite_, std::move(name), o.pass, std::move(o.detail), took.count()});
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::string suite_;
    std::vector<Check> checks_;
};

std::string padded(std::size_t n)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02zu", n);
    return buf;
}

std::string cls_name(Avoidance cls)
{
    return std::string(to_string(cls));
}

// First (n, k) where two triangles differ, as a readable diagnostic.
Outcome compare(const Triangle& got, const Triangle& want, const std::string& what)
{
    const std::size_t rows = std::min(got.rows(), want.rows());
    if (got.rows() != want.rows()) {
        return {false, what + ": row counts differ"};
    }
    for (std::size_t n = 0; n < rows; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (got.at(n, k) != want.at(n, k)) {
                return {false, what + ": t(" + std::to_string(n) + "," + std::to_string(k) + ") " +
                                   got.at(n, k).get_str() + " != " + want.at(n, k).get_str()};
            }
        }
    }
    return {true, what + " agree for n <= " + std::to_string(rows - 1)};
}

void systems_suite(Runner& r, int order)
{
    for (Avoidance cls : kRestricted) {
        r.run(cls_name(cls) + " order=" + std::to_string(order), [=] {
            const SystemReport rep = verify_system(cls, order);
            for (const Residual& res : rep.residuals) {
                if (!res.zero) {
                    return Outcome{false, res.equation + " (k=" + std::to_string(res.k) + ") nonzero at z^" +
                                              std::to_string(res.valuation)};
                }
            }
            return Outcome{true, std::to_string(rep.residuals.size()) + " residuals vanish through z^" +
                                     std::to_string(order)};
        });
    }
}

void triangles_suite(Runner& r, int n_max)
{
    const auto nm = static_cast<std::size_t>(n_max);
    const std::size_t brute_max = std::min(nm, kBruteForceLimit);

    for (Avoidance cls : {Avoidance::PeakLess, Avoidance::ValleyLess, Avoidance::DoubleRiseLess, Avoidance::Unrestricted}) {
        const std::string name = cls_name(cls);
        r.run("brute=dp " + name, [=] {
            const CountTable brute = count_table_brute(brute_max, cls);
            const CountTable dp = count_table_dp(brute_max, cls);
            if (!(brute == dp)) {
                return compare(dp.totals(), brute.totals(), "brute vs dp (with last-step split)");
            }
            return Outcome{true, "t(n,k) and the last-step split agree for n <= " + std::to_string(brute_max)};
        });
        if (cls == Avoidance::Unrestricted) {
            continue;
        }
        r.run("series " + name, [=] {
            return compare(series_triangle(cls, n_max), count_table_dp(nm, cls).totals(), "series vs dp");
        });
        r.run("recurrence " + name, [=] {
            return compare(recurrence_triangle(cls, n_max), count_table_dp(nm, cls).totals(), "recurrence vs dp");
        });
        r.run("split " + name, [=] {
            const CountTable dp = count_table_dp(nm, cls);
            const KernelRoots roots = kernel_roots(cls, std::max(n_max, 2));
            for (int k = 0; k <= n_max; ++k) {
                const CoeffFamily fam = coeff_family(roots, k);
                for (int n = k; n <= n_max; ++n) {
                    const auto un = static_cast<std::size_t>(n);
                    const auto uk = static_cast<std::size_t>(k);
                    if (Rational(dp.up(un, uk)) != fam.f[n] || Rational(dp.down(un, uk)) != fam.g[n] ||
                        Rational(dp.horizontal(un, uk)) != fam.h[n]) {
                        return Outcome{false, "f/g/h mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")"};
                    }
                }
            }
            return Outcome{true, "f_k, g_k, h_k coefficients match the last-step split"};
        });
        r.run("row-sums " + name, [=] {
            const std::vector<Integer> total = counts(total_at_one(cls, std::max(n_max, 2)));
            const CountTable dp = count_table_dp(nm, cls);
            for (std::size_t n = 0; n <= nm; ++n) {
                if (total[n] != dp.row_sum(n)) {
                    return Outcome{false, "Total(z,1) differs at z^" + std::to_string(n)};
                }
            }
            return Outcome{true, "Total(z,1) equals row sums"};
        });
        r.run("convolution " + name, [=] {
            const std::vector<Integer> col = column0_convolution(cls, n_max);
            const Triangle t = count_table_dp(nm, cls).totals();
            for (std::size_t n = 0; n <= nm; ++n) {
                if (col[n] != t.at(n, 0)) {
                    return Outcome{false, "t_" + std::to_string(n) + " " + col[n].get_str() + " != " + t.at(n, 0).get_str()};
                }
            }
            return Outcome{true, "column 0 matches for n <= " + std::to_string(n_max)};
        });
        r.run("diagonal " + name, [=] {
            const Triangle t = count_table_dp(nm, cls).totals();
            for (std::size_t n = 0; n <= nm; ++n) {
                const int want = cls == Avoidance::DoubleRiseLess && n >= 2 ? 0 : 1;
                if (t.at(n, n) != want) {
                    return Outcome{false, "t(" + std::to_string(n) + "," + std::to_string(n) + ") = " + t.at(n, n).get_str()};
                }
            }
            return Outcome{true, "t(n,n) as expected"};
        });
    }

    for (Avoidance cls : {Avoidance::PeakLess, Avoidance::ValleyLess}) {
        r.run("closed-form " + cls_name(cls), [=] {
            const Triangle t = count_table_dp(nm, cls).totals();
            Triangle cf(nm + 1);
            for (int n = 0; n <= n_max; ++n) {
                for (int k = 0; k <= n; ++k) {
                    cf(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) =
                        cls == Avoidance::PeakLess ? closed_form_peakless(n, k) : closed_form_valleyless(n, k);
                }
            }
            return compare(cf, t, "closed form vs dp");
        });
    }

    r.run("valleyless col0 = peakless col0 shifted", [=] {
        const Triangle p = count_table_dp(nm + 1, Avoidance::PeakLess).totals();
        const Triangle v = count_table_dp(nm, Avoidance::ValleyLess).totals();
        for (std::size_t n = 0; n <= nm; ++n) {
            if (v.at(n, 0) != p.at(n + 1, 0)) {
                return Outcome{false, "differs at n=" + std::to_string(n)};
            }
        }
        return Outcome{true, "t_v(n,0) = t_p(n+1,0) for n <= " + std::to_string(n_max)};
    });
}

void bijections_suite(Runner& r, int n_max)
{
    for (BijectionMap map : {BijectionMap::Psi, BijectionMap::Phi, BijectionMap::Chi}) {
        const std::size_t first = map == BijectionMap::Phi ? 1 : 0;
        for (std::size_t n = first; n <= static_cast<std::size_t>(n_max); ++n) {
            r.run(std::string(to_string(map)) + " n=" + padded(n), [=] {
                const BijectionReport rep = verify_bijection(map, n);
                std::string detail =
                    std::to_string(rep.domain_size) + "=" + std::to_string(rep.codomain_size);
                if (rep.counterexample) {
                    detail += "; counterexample " + rep.counterexample->path + ": " + rep.counterexample->reason;
                } else if (rep.domain_size != rep.codomain_size) {
                    detail += "; cardinalities differ";
                }
                return Outcome{rep.ok(), detail};
            });
        }
    }

    const int rt_max = std::min(n_max, 10);
    r.run("round-trip decompositions n<=" + padded(static_cast<std::size_t>(rt_max)), [=] {
        std::size_t checked = 0;
        for (std::size_t n = 0; n <= static_cast<std::size_t>(rt_max); ++n) {
            for (const LatticePath& p : enumerate_pmap(n, Avoidance::PeakLess, 0)) {
                if (!p.empty() && recompose(decompose_peakless(p)) != p) {
                    return Outcome{false, "peak-less " + render_path(p)};
                }
                ++checked;
            }
            for (const LatticePath& p : enumerate_pmap(n, Avoidance::ValleyLess, 0)) {
                if (recompose(decompose_valleyless(p)) != p) {
                    return Outcome{false, "valley-less " + render_path(p)};
                }
                ++checked;
            }
            for (const LatticePath& p : enumerate_pmap(n, Avoidance::DoubleRiseLess, 0)) {
                if (recompose(decompose_uuless(p)) != p) {
                    return Outcome{false, "UU-less " + render_path(p)};
                }
                ++checked;
            }
        }
        return Outcome{true, std::to_string(checked) + " paths re-concatenate"};
    });

    r.run("worked examples", [] {
        const std::string a = render_path(psi(parse_path("UUHDHUHUHD3HH")));
        const std::string b = render_path(chi(parse_path("UHUHD2UDUHUHHUD3H")));
        const bool pass = a == "UUUUUUDDDUDDUUDDUDDDUDUD" && b == "UUHDDUDUUUDHDDH";
        return Outcome{pass, "psi -> " + a + ", chi -> " + b};
    });
}

using Block = std::vector<std::vector<Rational>>;

Block multiply(const Block& a, const Block& b)
{
    const std::size_t n = a.size();
    Block out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t l = 0; l < n; ++l) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

// Group laws on one pair of arrays; empty string on success.
std::string group_laws(const RiordanArray& a, const RiordanArray& b, int rows)
{
    const RiordanArray id = RiordanArray::identity(a.order());
    if (!same_array(product(a, inverse(a)), id) || !same_array(product(inverse(a), a), id)) {
        return "A * A^-1 != I";
    }
    if (matrix_block(product(a, b), rows) != multiply(matrix_block(a, rows), matrix_block(b, rows))) {
        return "block(A*B) != block(A) block(B)";
    }
    if (!same_array(inverse(product(a, b)), product(inverse(b), inverse(a)))) {
        return "(A*B)^-1 != B^-1 A^-1";
    }
    if (!same_array(product(product(a, b), a), product(a, product(b, a)))) {
        return "product not associative";
    }
    return {};
}

RiordanArray random_array(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
    std::vector<Rational> f(static_cast<std::size_t>(order) + 1);
    g[0] = sign(rng) ? 1 : -1;
    f[1] = sign(rng) ? 1 : -1;
    for (int i = 1; i <= std::min(order, 4); ++i) {
        g[static_cast<std::size_t>(i)] = coeff(rng);
        if (i + 1 <= order) {
            f[static_cast<std::size_t>(i) + 1] = coeff(rng);
        }
    }
    return RiordanArray(Series(std::move(g), order), Series(std::move(f), order));
}

void riordan_suite(Runner& r, int n_max)
{
    const auto nm = static_cast<std::size_t>(n_max);
    const int rows = n_max + 1;
    const int order = n_max + 4;

    r.run("peakless array = T", [=] {
        return compare(triangle(peakless_array(order), rows), count_table_dp(nm, Avoidance::PeakLess).totals(),
                       "Riordan array vs dp");
    });
    r.run("valleyless array = T", [=] {
        return compare(triangle(valleyless_array(order), rows), count_table_dp(nm, Avoidance::ValleyLess).totals(),
                       "Riordan array vs dp");
    });
    r.run("uuless (t, t-1) = reindexed T", [=] {
        const auto depth = static_cast<std::size_t>(std::max(2 * rows - 3, 0));
        const Triangle t = count_table_dp(depth, Avoidance::DoubleRiseLess).totals();
        return compare(triangle(uuless_g_array(order), rows), g_triangle_reindex(t, rows), "Riordan array vs re-indexed T");
    });
    r.run("peakless A-sequence", [=] {
        const AZSequences az = a_and_z_sequences(peakless_array(order), rows);
        for (int n = 0; n < rows; ++n) {
            if (az.a[static_cast<std::size_t>(n)] != Rational(explicit_a(n))) {
                return Outcome{false, "a(" + std::to_string(n) + ") inverse route " + az.a[static_cast<std::size_t>(n)].get_str() +
                                          " != explicit " + explicit_a(n).get_str()};
            }
        }
        return Outcome{true, "inverse route equals explicit formula for n <= " + std::to_string(n_max)};
    });
    r.run("peakless A/Z rebuild", [=] {
        const RiordanArray a = peakless_array(order);
        const AZSequences az = a_and_z_sequences(a, rows);
        return compare(rebuild_from_az(1, az, rows), count_table_dp(nm, Avoidance::PeakLess).totals(), "A/Z rebuild vs dp");
    });

    const std::vector<std::pair<std::string, RiordanArray>> named = {
        {"peakless", peakless_array(order)},
        {"valleyless", valleyless_array(order)},
        {"uuless-g", uuless_g_array(order)},
    };
    for (std::size_t i = 0; i < named.size(); ++i) {
        const auto& [name, a] = named[i];
        const RiordanArray& b = named[(i + 1) % named.size()].second;
        r.run("group laws " + name, [&, rows] {
            const std::string err = group_laws(a, b, rows);
            return Outcome{err.empty(), err.empty() ? "inverse, product, block and associativity laws hold" : err};
        });
    }

    r.run("group laws random x20", [=] {
        std::mt19937 rng(20240607);
        const int small = std::min(order, 10);
        for (int i = 0; i < 20; ++i) {
            const RiordanArray a = random_array(rng, small);
            const RiordanArray b = random_array(rng, small);
            const std::string err = group_laws(a, b, small + 1);
            if (!err.empty()) {
                return Outcome{false, "array pair " + std::to_string(i) + ": " + err};
            }
        }
        return Outcome{true, "20 random pairs with unit leading coefficients"};
    });
}

}  // namespace

VerifyReport run_verify(Suite suite, int n_max, int order)
{
    if (n_max < 1) {
        throw std::invalid_argument("--nmax must be at least 1");
    }
    VerifyReport report;
    auto add = [&](Suite s, const std::function<void(Runner&)>& body) {
        if (suite != Suite::All && suite != s) {
            return;
        }
        Runner r{std::string(to_string(s))};
        body(r);
        for (Check& c : r.take()) {
            report.checks.push_back(std::move(c));
        }
    };
    add(Suite::Systems, [&](Runner& r) { systems_suite(r, order); });
    add(Suite::Triangles, [&](Runner& r) { triangles_suite(r, n_max); });
    add(Suite::Bijections, [&](Runner& r) { bijections_suite(r, n_max); });
    add(Suite::Riordan, [&](Runner& r) { riordan_suite(r, n_max); });
    std::stable_sort(report.checks.begin(), report.checks.end(), [](const Check& a, const Check& b) {
        return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
    });
    return report;
}

}  // namespace airpockets
