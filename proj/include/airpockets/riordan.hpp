#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "airpockets/integer.hpp"
#include "airpockets/series.hpp"
#include "airpockets/triangle.hpp"

namespace airpockets {

class RiordanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The proper Riordan array (g, f): column k has generating function g f^k.
// Requires g(0) != 0, f(0) = 0 and f'(0) != 0.
class RiordanArray {
public:
    RiordanArray(Series g, Series f);

    static RiordanArray identity(int order = kDefaultOrder);

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    int order() const { return std::min(g_.order(), f_.order()); }

private:
    Series g_;
    Series f_;
};

// Entry (n, k) = [z^n] g f^k for n < rows. Throws SeriesError(NonIntegral)
// for arrays with fractional entries.
Triangle triangle(const RiordanArray& array, int rows);

// Rational entries of the leading rows x rows block, row-major.
std::vector<std::vector<Rational>> matrix_block(const RiordanArray& array, int rows);

// (g, f) * (h, l) = (g * h(f), l(f))
RiordanArray product(const RiordanArray& a, const RiordanArray& b);

// (g, f)^{-1} = (1 / g(fbar), fbar) with fbar the compositional inverse of f.
RiordanArray inverse(const RiordanArray& array);

// Equality of the (g, f) pairs up to the common truncation order.
bool same_array(const RiordanArray& a, const RiordanArray& b);

struct AZSequences {
    std::vector<Rational> a;
    std::vector<Rational> z;
};

// A(z) = z / h(z) and Z(z) = (1 - d_{0,0} d(z)) / h(z), where (d, h) is the
// inverse array and d_{0,0} = g(0).
AZSequences a_and_z_sequences(const RiordanArray& array, int count);

// d_{n+1,k+1} = sum_j a_j d_{n,k+j},  d_{n+1,0} = sum_j z_j d_{n,j}.
// Computed exactly over rationals; throws std::domain_error if an entry is
// not an integer.
Triangle rebuild_from_az(const Integer& d00, const AZSequences& az, int rows);

// Catalan generating function (1 - sqrt(1 - 4z)) / (2z).
Series catalan(int order = kDefaultOrder);

// C(z(1 - z + z^2)).
Series catalan_of_trinomial(int order = kDefaultOrder);

// Peak-less triangle: (C(z(1-z+z^2)), z C(z(1-z+z^2))).
RiordanArray peakless_array(int order = kDefaultOrder);

// Valley-less triangle: ((z^2-z+1) C(z(1-z+z^2))^2, z C(z(1-z+z^2))).
RiordanArray valleyless_array(int order = kDefaultOrder);

// t(z) = (1 + z(1-z)^2 - sqrt((1 - 3z + z^3)(1 + z + z^3))) / (2z(1 - z + z^2)).
Series uuless_t(int order = kDefaultOrder);

// Re-indexed UU-less triangle: (t(z), t(z) - 1).
RiordanArray uuless_g_array(int order = kDefaultOrder);

// g_2(z) = (-1 + z^2 + sqrt(1 - 2z^2 + 4z^3 - 3z^4)) / (2z^3).
Series peakless_inverse_g(int order = kDefaultOrder);

// a(n, k) = (-1)^k sum_i C(n, i) C(n - i, k - 2i) = [z^k] (1 - z + z^2)^n.
// Throws std::out_of_range unless n >= 0 and 0 <= k <= 2n.
Integer trinomial_a(int n, int k);

// Lagrange-inversion closed forms for t(n, k), 0 <= k <= n.
Integer closed_form_peakless(int n, int k);
Integer closed_form_valleyless(int n, int k);

// Peak-less A-sequence term:
//   a(n) = (-1)^{n+1} sum_{k=1}^{n} sum_{j=0}^{k} (1/k) C(j, n-k-j) C(k, j) C(n-k-2, k-1),  a(0) = 1,
// where C(n-k-2, k-1) takes the generalized value for a negative upper index.
Integer explicit_a(int n);

// g(0,0) = 1, g(0,k) = 0 for k > 0, g(n,k) = t(n+k-1, k) for n >= 1.
// Needs t to row 2 * rows - 3; throws std::out_of_range (insufficient depth) otherwise.
Triangle g_triangle_reindex(const Triangle& t, int rows);

}  // namespace airpockets
