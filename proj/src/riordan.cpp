#include "airpockets/riordan.hpp"

namespace airpockets {

RiordanArray::RiordanArray(Series g, Series f) : g_(std::move(g)), f_(std::move(f))
{
    if (g_[0] == 0) {
        throw RiordanError("Riordan array needs g(0) != 0");
    }
    if (f_.order() < 1 || f_[0] != 0) {
        throw RiordanError("Riordan array needs f(0) = 0");
    }
    if (f_[1] == 0) {
        throw RiordanError("Riordan array needs f'(0) != 0");
    }
}

RiordanArray RiordanArray::identity(int order)
{
    return RiordanArray(Series::constant(1, order), Series::variable(order));
}

namespace {

void require_rows(const RiordanArray& array, int rows)
{
    if (rows < 0 || rows > array.order() + 1) {
        throw std::out_of_range("requested " + std::to_string(rows) + " rows from a Riordan array of order " +
                                std::to_string(array.order()));
    }
}

}  // namespace

std::vector<std::vector<Rational>> matrix_block(const RiordanArray& array, int rows)
{
    require_rows(array, rows);
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows),
                                           std::vector<Rational>(static_cast<std::size_t>(rows), Rational{0}));
    Series column = array.g();
    for (int k = 0; k < rows; ++k) {
        for (int n = k; n < rows; ++n) {
            out[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = column[n];
        }
        column *= array.f();
    }
    return out;
}

Triangle triangle(const RiordanArray& array, int rows)
{
    const auto block = matrix_block(array, rows);
    Triangle out(static_cast<std::size_t>(rows));
    for (std::size_t n = 0; n < block.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational& x = block[n][k];
            if (x.get_den() != 1) {
                throw SeriesError(SeriesErrorKind::NonIntegral, "Riordan entry (" + std::to_string(n) + ", " +
                                                                    std::to_string(k) + ") = " + x.get_str() +
                                                                    " is not an integer");
            }
            out(n, k) = x.get_num();
        }
    }
    return out;
}

RiordanArray product(const RiordanArray& a, const RiordanArray& b)
{
    return RiordanArray(a.g() * compose(b.g(), a.f()), compose(b.f(), a.f()));
}

RiordanArray inverse(const RiordanArray& array)
{
    const Series fbar = comp_inverse(array.f());
    const Series g_at = compose(array.g(), fbar);
    return RiordanArray(div(Series::constant(1, g_at.order()), g_at), fbar);
}

bool same_array(const RiordanArray& a, const RiordanArray& b)
{
    return a.g() == b.g() && a.f() == b.f();
}

AZSequences a_and_z_sequences(const RiordanArray& array, int count)
{
    const RiordanArray inv = inverse(array);
    const Series& d = inv.g();
    const Series& h = inv.f();
    const int n = std::min(d.order(), h.order());
    const Series a_gf = div(Series::variable(n), h);
    const Series z_gf = div(Series::constant(1, n) - d * array.g()[0], h);
    if (count < 0 || count > z_gf.order() + 1) {
        throw std::out_of_range("A/Z sequences known to " + std::to_string(z_gf.order() + 1) + " terms, requested " +
                                std::to_string(count));
    }
    AZSequences out;
    out.a.assign(a_gf.coeffs().begin(), a_gf.coeffs().begin() + count);
    out.z.assign(z_gf.coeffs().begin(), z_gf.coeffs().begin() + count);
    return out;
}

Triangle rebuild_from_az(const Integer& d00, const AZSequences& az, int rows)
{
    if (az.a.empty() || az.a[0] == 0) {
        throw std::invalid_argument("A-sequence needs a_0 != 0");
    }
    if (rows > 1 && (static_cast<int>(az.a.size()) < rows - 1 || static_cast<int>(az.z.size()) < rows - 1)) {
        throw std::out_of_range("A/Z sequences too short for " + std::to_string(rows) + " rows");
    }
    std::vector<std::vector<Rational>> d;
    if (rows <= 0) {
        return Triangle{};
    }
    d.push_back({Rational{d00}});
    for (int n = 0; n + 1 < rows; ++n) {
        const auto& prev = d.back();
        std::vector<Rational> next(static_cast<std::size_t>(n) + 2, Rational{0});
        for (int j = 0; j <= n; ++j) {
            next[0] += az.z[static_cast<std::size_t>(j)] * prev[static_cast<std::size_t>(j)];
        }
        for (int k = 0; k <= n; ++k) {
            Rational acc = 0;
            for (int j = 0; k + j <= n; ++j) {
                acc += az.a[static_cast<std::size_t>(j)] * prev[static_cast<std::size_t>(k + j)];
            }
            next[static_cast<std::size_t>(k) + 1] = acc;
        }
        d.push_back(std::move(next));
    }
    std::vector<std::vector<Integer>> out;
    out.reserve(d.size());
    for (const auto& row : d) {
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const Rational& x : row) {
            r.push_back(require_integral(x, "rebuilt Riordan entry"));
        }
        out.push_back(std::move(r));
    }
    return Triangle(std::move(out));
}

Series catalan(int order)
{
    const int m = order + 1;
    const Series root = sqrt(Series({1, -4}, m));
    return div(Series::constant(1, m) - root, Series::monomial(2, 1, m)).truncated(order);
}

Series catalan_of_trinomial(int order)
{
    return compose(catalan(order), Series({0, 1, -1, 1}, order));
}

RiordanArray peakless_array(int order)
{
    const Series c = catalan_of_trinomial(order);
    return RiordanArray(c, Series::variable(order) * c);
}

RiordanArray valleyless_array(int order)
{
    const Series c = catalan_of_trinomial(order);
    return RiordanArray(Series({1, -1, 1}, order) * c * c, Series::variable(order) * c);
}

Series uuless_t(int order)
{
    const int m = order + 1;
    const Series radicand = Series({1, -3, 0, 1}, m) * Series({1, 1, 0, 1}, m);
    const Series numerator = Series({1, 1, -2, 1}, m) - sqrt(radicand);  // 1 + z(1-z)^2 - sqrt(...)
    return div(numerator, Series({0, 2, -2, 2}, m)).truncated(order);    // 2z(1 - z + z^2)
}

RiordanArray uuless_g_array(int order)
{
    const Series t = uuless_t(order);
    return RiordanArray(t, t - Series::constant(1, order));
}

Series peakless_inverse_g(int order)
{
    const int m = order + 3;
    const Series numerator = Series({-1, 0, 1}, m) + sqrt(Series({1, 0, -2, 4, -3}, m));
    return div(numerator, Series::monomial(2, 3, m)).truncated(order);
}

namespace {

Integer trinomial_or_zero(int n, int k)
{
    if (n < 0 || k < 0 || k > 2 * n) {
        return 0;
    }
    Integer sum = 0;
    for (int i = 0; i <= n; ++i) {
        sum += binomial(n, i) * binomial(n - i, k - 2 * i);
    }
    return k % 2 == 0 ? sum : Integer{-sum};
}

}  // namespace

Integer trinomial_a(int n, int k)
{
    if (n < 0 || k < 0 || k > 2 * n) {
        throw std::out_of_range("a(n, k) needs n >= 0 and 0 <= k <= 2n, got (" + std::to_string(n) + ", " +
                                std::to_string(k) + ")");
    }
    return trinomial_or_zero(n, k);
}

namespace {

// sum_{j=0}^{n-k} shift/(2(n-j)-k+shift) C(2(n-j)-k+shift, n-k-j) a(n-k-j+shift-1, j)
Integer lagrange_closed_form(int n, int k, int shift)
{
    if (k < 0 || n < k) {
        throw std::out_of_range("closed form needs 0 <= k <= n, got (" + std::to_string(n) + ", " +
                                std::to_string(k) + ")");
    }
    Rational sum = 0;
    for (int j = 0; j <= n - k; ++j) {
        const int top = 2 * (n - j) - k + shift;
        const Integer a = trinomial_or_zero(n - k - j + shift - 1, j);
        if (a == 0) {
            continue;
        }
        Rational term(Integer{k + shift} * binomial(top, n - k - j) * a, Integer{top});
        term.canonicalize();
        sum += term;
    }
    return require_integral(sum, "closed-form t(n, k)");
}

}  // namespace

Integer closed_form_peakless(int n, int k)
{
    return lagrange_closed_form(n, k, 1);
}

Integer closed_form_valleyless(int n, int k)
{
    return lagrange_closed_form(n, k, 2);
}

Integer explicit_a(int n)
{
    if (n < 0) {
        throw std::out_of_range("a(n) needs n >= 0");
    }
    if (n == 0) {
        return 1;
    }
    Rational sum = 0;
    for (int k = 1; k <= n; ++k) {
        const Integer outer = binomial(n - k - 2, k - 1);
        if (outer == 0) {
            continue;
        }
        Integer inner = 0;
        for (int j = 0; j <= k; ++j) {
            inner += binomial(j, n - k - j) * binomial(k, j);
        }
        Rational term(inner * outer, Integer{k});
        term.canonicalize();
        sum += term;
    }
    const Integer value = require_integral(sum, "a(n)");
    return n % 2 == 1 ? value : Integer{-value};
}

Triangle g_triangle_reindex(const Triangle& t, int rows)
{
    if (rows <= 0) {
        return Triangle{};
    }
    const int needed = std::max(2 * rows - 2, 1);
    if (static_cast<int>(t.rows()) < needed) {
        throw std::out_of_range("insufficient depth: re-indexing " + std::to_string(rows) + " rows needs " +
                                std::to_string(needed) + " rows of t, have " + std::to_string(t.rows()));
    }
    Triangle g(static_cast<std::size_t>(rows));
    g(0, 0) = 1;
    for (int n = 1; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            g(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) =
                t.at(static_cast<std::size_t>(n + k - 1), static_cast<std::size_t>(k));
        }
    }
    return g;
}

}  // namespace airpockets
