#pragma once

#include <string>
#include <vector>

#include "airpockets/integer.hpp"
#include "airpockets/path.hpp"
#include "airpockets/series.hpp"
#include "airpockets/triangle.hpp"

namespace airpockets {

// Kernel roots r, s of the functional-equation system for an avoidance class.
// r has a pole at z = 0 and is carried as w = 1/r, which is a genuine power
// series (valuation 1 for peak-/valley-less, 2 for UU-less).
//
// Peak- and valley-less: z(u - r)(u - s) = u^2 z - u + z^2 - z + 1,
//   s = (1 - sqrt(D)) / (2z),   w = 2z / (1 + sqrt(D)),
//   D = 1 - 4z + 4z^2 - 4z^3.
// UU-less: z^2(u - r)(u - s) = u^2 z^2 + u(z^3 + z - 1) + z^2 - z + 1,
//   s = (1 - z - z^3 - sqrt(D)) / (2z^2),   w = 2z^2 / (1 - z - z^3 + sqrt(D)),
//   D = 1 - 2z - 3z^2 + 2z^3 - 2z^4 + z^6.
struct KernelRoots {
    Avoidance cls;
    int order;          // order of the series handed out by the functions below
    Series w;           // 1/r, carried with headroom past `order`
    Series s;
    Series discriminant;
};

// Throws std::invalid_argument for Avoidance::Unrestricted (no kernel system).
KernelRoots kernel_roots(Avoidance cls, int order = kDefaultOrder);

// Generating functions of paths ending at height k by last step:
// f = up (plus the empty path at k = 0), g = down, h = horizontal.
struct CoeffFamily {
    Avoidance cls;
    int k;
    Series f;
    Series g;
    Series h;
    Series total;
};

CoeffFamily coeff_family(const KernelRoots& roots, int k);
CoeffFamily coeff_family(Avoidance cls, int k, int order = kDefaultOrder);

// [u^k] Total(z, u).
Series total_column(const KernelRoots& roots, int k);
Series total_column(Avoidance cls, int k, int order = kDefaultOrder);

// Total(z, 1): all partial paths by length.
Series total_at_one(const KernelRoots& roots);
Series total_at_one(Avoidance cls, int order = kDefaultOrder);

// Coefficients as counts; throws SeriesError(NonIntegral) for fractions and
// std::domain_error for negative values.
std::vector<Integer> counts(const Series& s);

// t(n, k) for n <= n_max read off the column generating functions.
Triangle series_triangle(Avoidance cls, int n_max);

struct Residual {
    std::string equation;
    int k;          // -1 for scalar relations
    int valuation;  // first nonzero coefficient, checked_order + 1 when zero
    bool zero;
};

struct SystemReport {
    Avoidance cls;
    int checked_order;
    std::vector<Residual> residuals;

    bool ok() const;
    // Smallest residual valuation over all equations.
    int min_valuation() const;
};

// Substitutes the closed-form families into every equation of the class's
// system for k <= order, plus the kernel quadratic and the scalar relations
// between F(1), H(1) and s.
SystemReport verify_system(Avoidance cls, int order = kDefaultOrder);

}  // namespace airpockets
