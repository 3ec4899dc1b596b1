#include "airpockets/recurrence.hpp"

#include <stdexcept>

namespace airpockets {

namespace {

void require_kernel_class(Avoidance cls)
{
    if (cls == Avoidance::Unrestricted) {
        throw std::invalid_argument("no recurrence for unrestricted paths");
    }
}

Integer row_sum(const Triangle& t, int n)
{
    Integer s = 0;
    for (int k = 0; k <= n; ++k) {
        s += t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    }
    return s;
}

// [z^m] (F(1) + H(1)): paths of length m ending with U or H, plus the empty
// path. Rewritten through the row sums S_j = Total(1) coefficients:
//   valley-less  A(1) = (1 + z Total(1)) / (1 - z)
//   UU-less      A(1) = (1 + z + z Total(1)) / (1 + z) + z Total(1)
Integer up_or_level_total(Avoidance cls, const Triangle& t, int m)
{
    if (m < 0) {
        return 0;
    }
    Integer a = 0;
    if (cls == Avoidance::ValleyLess) {
        a = 1;
        for (int j = 0; j < m; ++j) {
            a += row_sum(t, j);
        }
        return a;
    }
    a = m == 0 ? 1 : 0;
    for (int j = 0; j < m; ++j) {
        const Integer s = row_sum(t, j);
        a += (m - 1 - j) % 2 == 0 ? s : Integer(-s);
    }
    if (m >= 1) {
        a += row_sum(t, m - 1);
    }
    return a;
}

}  // namespace

std::vector<Integer> column0_convolution(Avoidance cls, int n_max)
{
    require_kernel_class(cls);
    if (n_max < 0) {
        return {};
    }
    std::vector<Integer> t(static_cast<std::size_t>(n_max) + 1, Integer{0});
    t[0] = 1;

    if (cls == Avoidance::ValleyLess) {
        auto T = [&](int i) -> Integer { return i == -1 ? Integer{1} : i < -1 ? Integer{0} : t[static_cast<std::size_t>(i)]; };
        // Yields t_{n-1} for n >= 2.
        for (int n = 2; n - 1 <= n_max; ++n) {
            Integer v = T(n - 2);
            for (int k = 0; k <= n - 3; ++k) {
                v += T(k - 1) * T(n - k - 4);
            }
            for (int k = 2; k <= n - 1; ++k) {
                v += (T(k - 1) - T(k - 2)) * T(n - k - 2);
            }
            t[static_cast<std::size_t>(n - 1)] = v;
        }
        return t;
    }

    auto T = [&](int i) -> Integer { return i < 0 ? Integer{0} : t[static_cast<std::size_t>(i)]; };
    for (int n = 1; n <= n_max; ++n) {
        Integer v;
        if (cls == Avoidance::PeakLess) {
            v = T(n - 1);
            for (int k = 0; k <= n - 3; ++k) {
                v += T(k) * T(n - k - 3);
            }
            for (int k = 2; k <= n - 1; ++k) {
                v += (T(k) - T(k - 1)) * T(n - k - 1);
            }
        } else {
            v = T(n - 1) + T(n - 2) + T(n - 3);
            for (int k = 2; k <= n - 2; ++k) {
                v += T(k - 2) * T(n - k - 2);
            }
            for (int k = 3; k <= n - 1; ++k) {
                v += (T(k - 1) - T(k - 2)) * T(n - k - 1);
            }
        }
        t[static_cast<std::size_t>(n)] = v;
    }
    return t;
}

Integer linear_recurrence_rhs(Avoidance cls, const Triangle& t, int n, int k)
{
    require_kernel_class(cls);
    auto T = [&](int a, int b) -> Integer {
        if (a < 0 || b < 0 || b > a) {
            return 0;
        }
        return t.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    };
    if (cls == Avoidance::DoubleRiseLess) {
        Integer v = T(n, k - 1) + T(n - 1, k) - T(n - 1, k - 1) - T(n - 2, k) - T(n - 2, k - 2) - T(n - 3, k - 1);
        if (k == 1) {
            v += up_or_level_total(cls, t, n - 2) - (n == 2 ? 1 : 0);
        }
        return v;
    }
    Integer v = T(n, k - 1) + T(n - 1, k) - T(n - 1, k - 2) - T(n - 2, k);
    if (k == 1 && cls == Avoidance::ValleyLess) {
        v -= up_or_level_total(cls, t, n - 2);
    }
    return v;
}

Triangle recurrence_triangle(Avoidance cls, int n_max)
{
    const std::vector<Integer> column = column0_convolution(cls, n_max);
    Triangle t(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        t(static_cast<std::size_t>(n), 0) = column[static_cast<std::size_t>(n)];
    }
    if (n_max >= 1) {
        t(1, 1) = 1;  // the single path U
    }
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            t(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) = linear_recurrence_rhs(cls, t, n, k);
        }
    }
    return t;
}

}  // namespace airpockets
