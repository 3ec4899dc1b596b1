#include "airpockets/series.hpp"

#include <algorithm>
#include <sstream>

namespace airpockets {

namespace {

void check_order(int order)
{
    if (order < 0) {
        throw SeriesError(SeriesErrorKind::NegativeOrder, "series order must be non-negative, got " +
                                                              std::to_string(order));
    }
}

}  // namespace

Series::Series(int order)
{
    check_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational{0});
}

Series::Series(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs))
{
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational{0});
    for (Rational& c : coeffs_) {
        c.canonicalize();
    }
}

Series::Series(std::initializer_list<Rational> coeffs, int order) : Series(std::vector<Rational>(coeffs), order) {}

Series Series::constant(const Rational& c, int order)
{
    return monomial(c, 0, order);
}

Series Series::monomial(const Rational& c, int power, int order)
{
    Series out(order);
    if (power >= 0 && power <= order) {
        out.coeffs_[static_cast<std::size_t>(power)] = c;
    }
    return out;
}

const Rational& Series::operator[](int i) const
{
    if (i < 0 || i > order()) {
        throw std::out_of_range("coefficient " + std::to_string(i) + " beyond series order " +
                                std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

int Series::valuation() const
{
    const auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
    return static_cast<int>(it - coeffs_.begin());
}

Series Series::truncated(int order) const
{
    check_order(order);
    if (order > this->order()) {
        throw std::invalid_argument("cannot extend a series of order " + std::to_string(this->order()) +
                                    " to order " + std::to_string(order));
    }
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

Series Series::pow(unsigned exponent) const
{
    Series result = constant(1, order());
    Series base = *this;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

Series& Series::operator+=(const Series& other)
{
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Series& Series::operator-=(const Series& other)
{
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    const int n = std::min(a.order(), b.order());
    Series out(n);
    const int va = a.valuation();
    const int vb = b.valuation();
    for (int i = va; i <= n; ++i) {
        const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (sgn(ai) == 0) {
            continue;
        }
        for (int j = vb; i + j <= n; ++j) {
            out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

Series& Series::operator*=(const Series& other)
{
    *this = *this * other;
    return *this;
}

Series& Series::operator*=(const Rational& c)
{
    for (Rational& x : coeffs_) {
        x *= c;
    }
    return *this;
}

Series operator-(Series a)
{
    for (Rational& x : a.coeffs_) {
        x = -x;
    }
    return a;
}

bool operator==(const Series& a, const Series& b)
{
    const std::size_t n = static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + static_cast<std::ptrdiff_t>(n), b.coeffs_.begin());
}

std::string Series::str() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) {
            continue;
        }
        os << (first ? "" : " + ") << c;
        if (i > 0) {
            os << "*z^" << i;
        }
        first = false;
    }
    os << (first ? "" : " + ") << "O(z^" << order() + 1 << ")";
    return os.str();
}

Series div_by_z_power(const Series& a, int power)
{
    if (power < 0) {
        throw std::invalid_argument("negative power of z");
    }
    if (a.valuation() < power) {
        throw SeriesError(SeriesErrorKind::NotDivisible,
                          "numerator of valuation " + std::to_string(a.valuation()) + " is not divisible by z^" +
                              std::to_string(power));
    }
    if (a.order() < power) {
        throw SeriesError(SeriesErrorKind::NegativeOrder, "dividing by z^" + std::to_string(power) +
                                                              " leaves no known coefficients");
    }
    const auto c = a.coeffs();
    return Series(std::vector<Rational>(c.begin() + power, c.end()), a.order() - power);
}

Series div(const Series& a, const Series& b)
{
    if (b.is_zero()) {
        throw SeriesError(SeriesErrorKind::DivisionByZeroSeries, "division by the zero series");
    }
    const int v = b.valuation();
    const Series num = div_by_z_power(a.truncated(std::min(a.order(), b.order())), v);
    const Series den = div_by_z_power(b, v);
    const int n = std::min(num.order(), den.order());

    std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
    const Rational inv0 = 1 / den[0];
    for (int i = 0; i <= n; ++i) {
        Rational acc = num[i];
        for (int j = 1; j <= i; ++j) {
            acc -= den[j] * q[static_cast<std::size_t>(i - j)];
        }
        q[static_cast<std::size_t>(i)] = acc * inv0;
    }
    return Series(std::move(q), n);
}

Series sqrt(const Series& a)
{
    if (a[0] != 1) {
        throw SeriesError(SeriesErrorKind::NonUnitConstantTerm,
                          "square root needs constant term 1, got " + a[0].get_str());
    }
    const int n = a.order();
    Series y = Series::constant(1, 0);
    int known = 0;
    const Rational half{1, 2};
    while (known < n) {
        const int next = std::min(2 * known + 1, n);
        Series extended(std::vector<Rational>(y.coeffs().begin(), y.coeffs().end()), next);
        y = (extended + div(a.truncated(next), extended)) * half;
        known = next;
    }
    return y;
}

Series compose(const Series& outer, const Series& inner)
{
    if (inner[0] != 0) {
        throw SeriesError(SeriesErrorKind::InnerNonzeroConstant, "inner series must have zero constant term");
    }
    const int n = std::min(outer.order(), inner.order());
    const Series in = inner.truncated(n);
    Series result = Series::constant(outer[n], n);
    for (int i = n - 1; i >= 0; --i) {
        result = result * in;
        result += Series::constant(outer[i], n);
    }
    return result;
}

Series comp_inverse(const Series& f)
{
    if (f.order() < 1 || f[0] != 0 || f[1] == 0) {
        throw SeriesError(SeriesErrorKind::NotInvertible, "compositional inverse needs f(0) = 0 and f'(0) != 0");
    }
    const int n = f.order();
    // [z^m] g = (1/m) [z^{m-1}] (z / f)^m
    const Series ratio = div(Series::variable(n), f);
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
    Series power = ratio;
    for (int m = 1; m <= n; ++m) {
        g[static_cast<std::size_t>(m)] = power[m - 1] / m;
        if (m < n) {
            power *= ratio;
        }
    }
    return Series(std::move(g), n);
}

std::vector<Integer> integer_coefficients(const Series& s)
{
    std::vector<Integer> out;
    out.reserve(s.coeffs().size());
    for (int i = 0; i <= s.order(); ++i) {
        if (s[i].get_den() != 1) {
            throw SeriesError(SeriesErrorKind::NonIntegral,
                              "coefficient of z^" + std::to_string(i) + " is not an integer: " + s[i].get_str());
        }
        out.push_back(s[i].get_num());
    }
    return out;
}

}  // namespace airpockets
