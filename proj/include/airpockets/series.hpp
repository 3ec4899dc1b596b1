#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "airpockets/integer.hpp"

namespace airpockets {

enum class SeriesErrorKind {
    DivisionByZeroSeries,
    NotDivisible,
    NonUnitConstantTerm,
    InnerNonzeroConstant,
    NotInvertible,
    NegativeOrder,
    NonIntegral,
};

class SeriesError : public std::domain_error {
public:
    SeriesError(SeriesErrorKind kind, const std::string& message) : std::domain_error(message), kind_(kind) {}
    SeriesError(SeriesErrorKind kind, const char* message) : std::domain_error(message), kind_(kind) {}

    SeriesErrorKind kind() const { return kind_; }

private:
    SeriesErrorKind kind_;
};

// Truncation order used when nothing else is configured.
inline constexpr int kDefaultOrder = 32;

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}) over
// exact rationals. Binary operations produce the smaller of the two orders;
// division by a series of valuation v loses v further orders.
class Series {
public:
    // The zero series of the given order.
    explicit Series(int order = kDefaultOrder);
    // Coefficients past `order` are dropped; missing ones are zero.
    Series(std::vector<Rational> coeffs, int order);
    Series(std::initializer_list<Rational> coeffs, int order);

    static Series constant(const Rational& c, int order);
    // c z^power
    static Series monomial(const Rational& c, int power, int order);
    // The series z.
    static Series variable(int order) { return monomial(1, 1, order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    // Coefficient of z^i; throws std::out_of_range past the order.
    const Rational& operator[](int i) const;
    const Rational& coeff(int i) const { return (*this)[i]; }

    // Index of the first nonzero coefficient, or order() + 1 for zero.
    int valuation() const;
    bool is_zero() const { return valuation() > order(); }

    Series truncated(int order) const;
    Series pow(unsigned exponent) const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Series& other);
    Series& operator*=(const Rational& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator-(Series a);

    // Equality of the common leading part.
    friend bool operator==(const Series& a, const Series& b);

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

// a / b. When b has valuation v > 0 the numerator must vanish to the same
// order; the result then has order min(order(a), order(b)) - v.
Series div(const Series& a, const Series& b);
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }

// a / z^power, requiring the low coefficients of a to vanish.
Series div_by_z_power(const Series& a, int power);

// Principal square root (constant term 1) by Newton iteration.
Series sqrt(const Series& a);

// outer(inner(z)); inner must have a zero constant term.
Series compose(const Series& outer, const Series& inner);

// g with f(g(z)) = g(f(z)) = z, by Lagrange inversion.
Series comp_inverse(const Series& f);

// Coefficients as integers; throws SeriesError(NonIntegral) otherwise.
std::vector<Integer> integer_coefficients(const Series& s);

}  // namespace airpockets
