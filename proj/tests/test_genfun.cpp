#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "airpockets/enumerator.hpp"
#include "airpockets/genfun.hpp"
#include "airpockets/recurrence.hpp"

using namespace airpockets;

namespace {

const Avoidance kClasses[] = {Avoidance::PeakLess, Avoidance::ValleyLess, Avoidance::DoubleRiseLess};

std::vector<Integer> ints(std::initializer_list<long> v)
{
    return std::vector<Integer>(v.begin(), v.end());
}

std::vector<Integer> head(const Series& s, int terms)
{
    std::vector<Integer> c = counts(s);
    c.resize(static_cast<std::size_t>(terms));
    return c;
}

Integer T(const Triangle& t, int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    return t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

}  // namespace

TEST_CASE("column 0 and row-sum series")
{
    CHECK(head(total_column(Avoidance::PeakLess, 0, 12), 10) == ints({1, 1, 1, 2, 5, 12, 29, 73, 190, 505}));
    CHECK(head(total_column(Avoidance::ValleyLess, 0, 12), 10) == ints({1, 1, 2, 5, 12, 29, 73, 190, 505, 1363}));
    CHECK(head(total_column(Avoidance::DoubleRiseLess, 0, 12), 10) == ints({1, 1, 2, 4, 9, 20, 47, 112, 274, 679}));

    CHECK(head(total_at_one(Avoidance::PeakLess, 12), 10) == ints({1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869}));
    CHECK(head(total_at_one(Avoidance::ValleyLess, 12), 10) == ints({1, 2, 5, 13, 34, 90, 242, 660, 1821, 5073}));
    CHECK(head(total_at_one(Avoidance::DoubleRiseLess, 12), 10) == ints({1, 2, 4, 9, 21, 50, 122, 302, 759, 1928}));
}

TEST_CASE("series triangle equals brute force up to length 14")
{
    for (Avoidance cls : kClasses) {
        CAPTURE(to_string(cls));
        CHECK(series_triangle(cls, 14) == count_table_brute(14, cls).totals());
    }
}

TEST_CASE("f, g, h families match the last-step split up to length 12")
{
    for (Avoidance cls : kClasses) {
        CAPTURE(to_string(cls));
        const CountTable brute = count_table_brute(12, cls);
        const KernelRoots roots = kernel_roots(cls, 12);
        for (int k = 0; k <= 12; ++k) {
            const CoeffFamily fam = coeff_family(roots, k);
            CHECK(fam.total == fam.f + fam.g + fam.h);
            for (int n = 0; n <= 12; ++n) {
                const auto un = static_cast<std::size_t>(n);
                const auto uk = static_cast<std::size_t>(k);
                CAPTURE(n);
                CAPTURE(k);
                REQUIRE(fam.f[n] == Rational(k <= n ? brute.up(un, uk) : Integer(0)));
                REQUIRE(fam.g[n] == Rational(k <= n ? brute.down(un, uk) : Integer(0)));
                REQUIRE(fam.h[n] == Rational(k <= n ? brute.horizontal(un, uk) : Integer(0)));
            }
        }
    }
}

TEST_CASE("UU-less h_0 carries no constant term")
{
    // h_0 = 1/(zr): the only horizontal-ending path of length 1 at height 0 is H.
    const CoeffFamily fam = coeff_family(Avoidance::DoubleRiseLess, 0, 8);
    CHECK(fam.h[0] == 0);
    CHECK(fam.h[1] == 1);
    CHECK(count_table_brute(1, Avoidance::DoubleRiseLess).horizontal(1, 0) == 1);
    CHECK(fam.f[0] == 1);
}

TEST_CASE("systems vanish to order 32")
{
    for (Avoidance cls : kClasses) {
        CAPTURE(to_string(cls));
        const SystemReport rep = verify_system(cls, 32);
        CHECK(rep.ok());
        CHECK(rep.min_valuation() == 33);
        CHECK(rep.residuals.size() > 4 * 32);
    }
    auto has = [](const SystemReport& r, const std::string& eq) {
        return std::any_of(r.residuals.begin(), r.residuals.end(),
                           [&](const Residual& x) { return x.equation == eq && x.zero; });
    };
    CHECK(has(verify_system(Avoidance::PeakLess, 32), "F(1) - H(1) = 1"));
    CHECK(has(verify_system(Avoidance::ValleyLess, 32), "(1 - z)F(1) = 1 + zH(1)"));
    CHECK(has(verify_system(Avoidance::DoubleRiseLess, 32), "F(1) = 1 + (s - 1)/(z(z + 2))"));
}

TEST_CASE("kernel roots")
{
    const int n = 20;
    const KernelRoots pk = kernel_roots(Avoidance::PeakLess, n);
    CHECK(pk.w.valuation() == 1);
    const Series z = Series::variable(pk.w.order());
    const Series quad = Series({1, -1, 1}, pk.w.order());
    CHECK(((quad * pk.w * pk.w - pk.w + z).truncated(n)).is_zero());

    const KernelRoots uu = kernel_roots(Avoidance::DoubleRiseLess, n);
    CHECK(uu.w.valuation() == 2);
    const Series lin = Series({-1, 1, 0, 1}, uu.w.order());
    const Series z2 = Series::monomial(1, 2, uu.w.order());
    CHECK(((Series({1, -1, 1}, uu.w.order()) * uu.w * uu.w + lin * uu.w + z2).truncated(n)).is_zero());

    CHECK_THROWS_AS(kernel_roots(Avoidance::Unrestricted, n), std::invalid_argument);
    CHECK_THROWS_AS(kernel_roots(Avoidance::PeakLess, 1), std::invalid_argument);
    CHECK_THROWS_AS(coeff_family(Avoidance::PeakLess, -1, 8), std::invalid_argument);
    CHECK_THROWS_AS(counts(Series({1, -1}, 1)), std::domain_error);
}

TEST_CASE("column 0 convolutions up to length 20")
{
    for (Avoidance cls : kClasses) {
        CAPTURE(to_string(cls));
        const Triangle t = count_table_dp(20, cls).totals();
        const std::vector<Integer> col = column0_convolution(cls, 20);
        for (std::size_t n = 0; n <= 20; ++n) {
            CHECK(col[n] == t.at(n, 0));
        }
    }
}

TEST_CASE("linear recurrences")
{
    const Triangle peak = count_table_brute(14, Avoidance::PeakLess).totals();
    const Triangle valley = count_table_brute(14, Avoidance::ValleyLess).totals();
    const Triangle uu = count_table_brute(14, Avoidance::DoubleRiseLess).totals();
    for (int n = 2; n <= 14; ++n) {
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const Integer four_p = T(peak, n, k - 1) + T(peak, n - 1, k) - T(peak, n - 1, k - 2) - T(peak, n - 2, k);
            CHECK(four_p == T(peak, n, k));
            CHECK(linear_recurrence_rhs(Avoidance::PeakLess, peak, n, k) == T(peak, n, k));

            // The uncorrected four- and six-term forms hold from k = 2 on.
            if (k >= 2) {
                const Integer four_v =
                    T(valley, n, k - 1) + T(valley, n - 1, k) - T(valley, n - 1, k - 2) - T(valley, n - 2, k);
                CHECK(four_v == T(valley, n, k));
                const Integer six = T(uu, n, k - 1) + T(uu, n - 1, k) - T(uu, n - 1, k - 1) - T(uu, n - 2, k) -
                                    T(uu, n - 2, k - 2) - T(uu, n - 3, k - 1);
                CHECK(six == T(uu, n, k));
            }
            CHECK(linear_recurrence_rhs(Avoidance::ValleyLess, valley, n, k) == T(valley, n, k));
            CHECK(linear_recurrence_rhs(Avoidance::DoubleRiseLess, uu, n, k) == T(uu, n, k));
        }
    }
    // At k = 1 the uncorrected valley-less form overshoots: t(2,1) = 2, not 3.
    CHECK(T(valley, 2, 0) + T(valley, 1, 1) - T(valley, 0, 1) == 3);
    CHECK(T(valley, 2, 1) == 2);

    for (Avoidance cls : kClasses) {
        CHECK(recurrence_triangle(cls, 14) == count_table_brute(14, cls).totals());
    }
    CHECK_THROWS_AS(recurrence_triangle(Avoidance::Unrestricted, 4), std::invalid_argument);
}

TEST_CASE("valley-less column 0 is peak-less column 0 shifted")
{
    const Triangle p = count_table(14, Avoidance::PeakLess).totals();
    const Triangle v = count_table(13, Avoidance::ValleyLess).totals();
    for (std::size_t n = 0; n <= 13; ++n) {
        CHECK(v.at(n, 0) == p.at(n + 1, 0));
    }
}
