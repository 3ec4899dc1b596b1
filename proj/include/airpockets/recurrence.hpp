#pragma once

#include <vector>

#include "airpockets/integer.hpp"
#include "airpockets/path.hpp"
#include "airpockets/triangle.hpp"

namespace airpockets {

// t_n = t(n, 0) for n <= n_max from the convolution recurrences:
//   peak-less   t_n = t_{n-1} + sum_{k=0}^{n-3} t_k t_{n-k-3} + sum_{k=2}^{n-1} (t_k - t_{k-1}) t_{n-k-1}
//   valley-less the same identity one index lower, with t_{-1} = 1
//   UU-less     t_n = t_{n-1} + t_{n-2} + t_{n-3} + sum_{k=2}^{n-2} t_{k-2} t_{n-k-2}
//                     + sum_{k=3}^{n-1} (t_{k-1} - t_{k-2}) t_{n-k-1}
std::vector<Integer> column0_convolution(Avoidance cls, int n_max);

// Right-hand side of the linear recurrence for t(n, k), n >= 2, k >= 1:
//   peak-/valley-less  t(n,k-1) + t(n-1,k) - t(n-1,k-2) - t(n-2,k)
//   UU-less            t(n,k-1) + t(n-1,k) - t(n-1,k-1) - t(n-2,k) - t(n-2,k-2) - t(n-3,k-1)
// Entries with negative indices or k > n read as zero; t must hold rows
// below n and entry (n, k - 1).
//
// The kernel equation has a u^1 boundary term for two classes, so at k = 1
// the right-hand side is corrected by a_m = [z^m](F(1) + H(1)):
//   valley-less  t(n,1) = ... - a_{n-2}
//   UU-less      t(n,1) = ... + a_{n-2} - [n = 2]
// a_m is recovered from the row sums of rows below n - 1.
Integer linear_recurrence_rhs(Avoidance cls, const Triangle& t, int n, int k);

// Whole triangle: column 0 by convolution, the rest by the linear recurrence.
Triangle recurrence_triangle(Avoidance cls, int n_max);

}  // namespace airpockets
