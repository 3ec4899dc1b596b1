#include "airpockets/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace airpockets {

namespace {

// Extra precision carried by the kernel roots: the column formulas divide by
// at most z^2 and s loses up to two orders to its own division.
constexpr int kHeadroom = 4;

Series poly(std::initializer_list<Rational> coeffs, int order)
{
    return Series(coeffs, order);
}

void require_kernel_class(Avoidance cls)
{
    if (cls == Avoidance::Unrestricted) {
        throw std::invalid_argument("no kernel system for unrestricted paths");
    }
}

Series z_series(int order)
{
    return Series::variable(order);
}

}  // namespace

KernelRoots kernel_roots(Avoidance cls, int order)
{
    require_kernel_class(cls);
    if (order < 2) {
        throw std::invalid_argument("kernel roots need order >= 2");
    }
    const int m = order + kHeadroom;
    const Series one = Series::constant(1, m);
    const Series z = z_series(m);

    if (cls == Avoidance::DoubleRiseLess) {
        Series disc = poly({1, -2, -3, 2, -2, 0, 1}, m);
        const Series root = sqrt(disc);
        const Series linear = poly({1, -1, 0, -1}, m);  // 1 - z - z^3
        const Series two_z2 = Series::monomial(2, 2, m);
        // s = (1 - z - z^3 - sqrt(D)) / (2z^2), r = (1 - z - z^3 + sqrt(D)) / (2z^2)
        Series s = div(linear - root, two_z2);
        Series w = div(two_z2, linear + root);
        return KernelRoots{cls, order, std::move(w), std::move(s), std::move(disc)};
    }

    Series disc = poly({1, -4, 4, -4}, m);
    const Series root = sqrt(disc);
    const Series two_z = Series::monomial(2, 1, m);
    // s = (1 - sqrt(D)) / (2z), r = (1 + sqrt(D)) / (2z)
    Series s = div(one - root, two_z);
    Series w = div(two_z, one + root);
    return KernelRoots{cls, order, std::move(w), std::move(s), std::move(disc)};
}

CoeffFamily coeff_family(const KernelRoots& roots, int k)
{
    if (k < 0) {
        throw std::invalid_argument("height must be non-negative");
    }
    const int n = roots.order;
    const Series& w = roots.w;
    const Series& s = roots.s;
    const int m = w.order();
    const Series one = Series::constant(1, m);
    const Series z = z_series(m);
    const Series wk = w.pow(static_cast<unsigned>(k));
    const Series wk1 = wk * w;

    CoeffFamily out{roots.cls, k, Series(n), Series(n), Series(n), Series(n)};
    switch (roots.cls) {
    case Avoidance::PeakLess:
        out.f = wk;                          // 1/r^k
        out.g = (s - one) * wk1;             // (s-1)/r^{k+1}
        out.h = wk1;                         // 1/r^{k+1}
        out.total = div_by_z_power(wk1, 1);  // 1/(z r^{k+1})
        break;
    case Avoidance::ValleyLess:
        out.f = wk;                                          // 1/r^k
        out.g = div_by_z_power((s - one) * wk1, 1);          // (s-1)/(z r^{k+1})
        out.h = s * wk1;                                     // s/r^{k+1}
        out.total = div_by_z_power(s * wk1, 1);              // s/(z r^{k+1})
        break;
    case Avoidance::DoubleRiseLess:
        if (k == 0) {
            out.f = one;                               // f_0 = 1
            out.g = (s + z) * w;                       // (s+z)/r
            out.h = div_by_z_power(w, 1);              // 1/(z r)
            out.total = div_by_z_power(w, 2);          // 1/(z^2 r)
        } else {
            out.f = div_by_z_power(wk, 1);             // 1/(z r^k)
            out.g = (s + z) * wk1;                     // (s+z)/r^{k+1}
            // (1 + z r)/(z r^{k+1}) = 1/(z r^{k+1}) + 1/r^k
            out.h = div_by_z_power(wk1, 1) + wk;
            // (r z + 1)/(z^2 r^{k+1}) = 1/(z^2 r^{k+1}) + 1/(z r^k)
            out.total = div_by_z_power(wk1, 2) + div_by_z_power(wk, 1);
        }
        break;
    case Avoidance::Unrestricted:
        require_kernel_class(roots.cls);
        break;
    }
    out.f = out.f.truncated(n);
    out.g = out.g.truncated(n);
    out.h = out.h.truncated(n);
    out.total = out.total.truncated(n);
    return out;
}

CoeffFamily coeff_family(Avoidance cls, int k, int order)
{
    return coeff_family(kernel_roots(cls, order), k);
}

Series total_column(const KernelRoots& roots, int k)
{
    return coeff_family(roots, k).total;
}

Series total_column(Avoidance cls, int k, int order)
{
    return total_column(kernel_roots(cls, order), k);
}

Series total_at_one(const KernelRoots& roots)
{
    const Series& w = roots.w;
    const int m = w.order();
    const Series one = Series::constant(1, m);
    // 1/(r - 1) = w/(1 - w)
    const Series base = div(w, one - w);
    Series out(m);
    switch (roots.cls) {
    case Avoidance::PeakLess:
        out = div_by_z_power(base, 1);  // 1/(z(r-1))
        break;
    case Avoidance::ValleyLess:
        out = div_by_z_power(roots.s * base, 1);  // s/(z(r-1))
        break;
    case Avoidance::DoubleRiseLess:
        out = div_by_z_power((one + z_series(m)) * base, 2);  // (1+z)/((r-1) z^2)
        break;
    case Avoidance::Unrestricted:
        require_kernel_class(roots.cls);
        break;
    }
    return out.truncated(roots.order);
}

Series total_at_one(Avoidance cls, int order)
{
    return total_at_one(kernel_roots(cls, order));
}

std::vector<Integer> counts(const Series& s)
{
    std::vector<Integer> out = integer_coefficients(s);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (sgn(out[i]) < 0) {
            throw std::domain_error("negative count " + out[i].get_str() + " at z^" + std::to_string(i));
        }
    }
    return out;
}

Triangle series_triangle(Avoidance cls, int n_max)
{
    const KernelRoots roots = kernel_roots(cls, std::max(n_max, 2));
    Triangle out(static_cast<std::size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k) {
        const std::vector<Integer> column = counts(total_column(roots, k));
        for (int n = k; n <= n_max; ++n) {
            out(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) = column[static_cast<std::size_t>(n)];
        }
    }
    return out;
}

bool SystemReport::ok() const
{
    return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.zero; });
}

int SystemReport::min_valuation() const
{
    int v = checked_order + 1;
    for (const Residual& r : residuals) {
        v = std::min(v, r.valuation);
    }
    return v;
}

SystemReport verify_system(Avoidance cls, int order)
{
    const KernelRoots roots = kernel_roots(cls, order);
    const int n = order;
    const int top = order + 1;  // f_l, g_l, h_l vanish mod z^l, so heights above order + 1 cannot contribute

    std::vector<CoeffFamily> fam;
    fam.reserve(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        fam.push_back(coeff_family(roots, k));
    }

    SystemReport report{cls, n, {}};
    auto record = [&](std::string equation, int k, const Series& residual) {
        const Series r = residual.truncated(n);
        const int v = r.valuation();
        report.residuals.push_back(Residual{std::move(equation), k, v, v > n});
    };

    const Series one = Series::constant(1, n);
    const Series z = z_series(n);
    auto at = [&](int k) -> const CoeffFamily& { return fam[static_cast<std::size_t>(k)]; };

    for (int k = 0; k <= n; ++k) {
        const CoeffFamily& c = at(k);

        // f-equation
        if (k == 0) {
            record("f_0 = 1", 0, c.f - one);
        } else {
            const CoeffFamily& p = at(k - 1);
            Series rhs(n);
            switch (cls) {
            case Avoidance::PeakLess:
                rhs = z * (p.f + p.g + p.h);
                break;
            case Avoidance::ValleyLess:
                rhs = z * (p.f + p.h);
                break;
            default:
                rhs = z * (p.g + p.h);
                if (k == 1) {
                    rhs += z;
                }
                break;
            }
            record("f_k", k, c.f - rhs);
        }

        // g-equation: tail sums over heights above k
        Series tail(n);
        for (int l = k + 1; l <= top; ++l) {
            tail += at(l).h;
            if (cls != Avoidance::PeakLess) {
                tail += at(l).f;
            }
        }
        record("g_k", k, c.g - z * tail);

        record("h_k", k, c.h - z * (c.f + c.g + c.h));
        record("total_k", k, c.total - (c.f + c.g + c.h));
    }

    Series f1(n);
    Series h1(n);
    for (int k = 0; k <= top; ++k) {
        f1 += at(k).f;
        h1 += at(k).h;
    }

    const int m = roots.w.order();
    const Series& w = roots.w;
    const Series& s = roots.s;
    const Series zm = z_series(m);
    const Series quad = poly({1, -1, 1}, m);  // z^2 - z + 1
    const Series sn = s.truncated(std::min(s.order(), n + 2));
    switch (cls) {
    case Avoidance::PeakLess:
    case Avoidance::ValleyLess:
        // z u^2 - u + (z^2 - z + 1) at u = r (times w^2) and at u = s
        record("kernel(w)", -1, quad * w * w - w + zm);
        record("kernel(s)", -1, zm * s * s - s + quad);
        if (cls == Avoidance::PeakLess) {
            record("F(1) - H(1) = 1", -1, f1 - h1 - one);
            record("H(1) = (s - 1)/z", -1, h1 - div_by_z_power(sn - Series::constant(1, sn.order()), 1));
        } else {
            record("(1 - z)F(1) = 1 + zH(1)", -1, (one - z) * f1 - one - z * h1);
            record("F(1) = 1 + (s - 1)/z", -1, f1 - one - div_by_z_power(sn - Series::constant(1, sn.order()), 1));
        }
        break;
    default: {
        const Series lin = poly({-1, 1, 0, 1}, m);  // z^3 + z - 1
        const Series z2 = Series::monomial(1, 2, m);
        record("kernel(w)", -1, quad * w * w + lin * w + z2);
        record("kernel(s)", -1, z2 * s * s + lin * s + quad);
        record("H(1) = (1 + z)(F(1) - 1)", -1, h1 - (one + z) * (f1 - one));
        const Series denom = poly({0, 2, 1}, sn.order());  // z(z + 2)
        record("F(1) = 1 + (s - 1)/(z(z + 2))", -1,
               f1 - one - div(sn - Series::constant(1, sn.order()), denom));
        break;
    }
    }
    return report;
}

}  // namespace airpockets
