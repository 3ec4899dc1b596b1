#include "airpockets/bijections.hpp"

#include <set>

#include "airpockets/enumerator.hpp"

namespace airpockets {

namespace {

using Steps = std::vector<Step>;

Steps slice(const LatticePath& path, std::size_t begin, std::size_t end)
{
    const auto steps = path.steps();
    return Steps(steps.begin() + static_cast<std::ptrdiff_t>(begin), steps.begin() + static_cast<std::ptrdiff_t>(end));
}

LatticePath rebased(const LatticePath& path, std::size_t begin, std::size_t end)
{
    return LatticePath::validate(slice(path, begin, end));
}

void append(Steps& out, const LatticePath& path)
{
    out.insert(out.end(), path.steps().begin(), path.steps().end());
}

void append(Steps& out, std::initializer_list<Step> steps)
{
    out.insert(out.end(), steps.begin(), steps.end());
}

std::string text(const LatticePath& path)
{
    return path.empty() ? "eps" : render_path(path);
}

void require_map(const LatticePath& path, Avoidance cls, DomainErrorKind kind)
{
    if (!path.returns_to_axis()) {
        throw DomainError(DomainErrorKind::NotMAP, render_path(path) + " does not end on the x-axis");
    }
    if (path.has_consecutive_downs()) {
        throw DomainError(DomainErrorKind::NotMAP, render_path(path) + " has consecutive down-steps");
    }
    if (!avoids(path, cls)) {
        throw DomainError(kind, render_path(path) + " is not " + std::string(to_string(cls)));
    }
}

// Index of the step bringing a path that starts with U back to height 0.
std::size_t first_return(const LatticePath& path)
{
    const auto heights = path.heights();
    for (std::size_t j = 0; j < heights.size(); ++j) {
        if (heights[j] == 0) {
            return j;
        }
    }
    throw DomainError(DomainErrorKind::NotMAP, render_path(path) + " never returns to the x-axis");
}

}  // namespace

Decomposition decompose_peakless(const LatticePath& path)
{
    if (path.empty()) {
        throw DomainError(DomainErrorKind::EmptyPath, "the empty path has no peak-less decomposition");
    }
    require_map(path, Avoidance::PeakLess, DomainErrorKind::NotPeakLess);

    Decomposition d{Grammar::PeakLess};
    if (path.front().is_horizontal()) {
        d.form = 1;
        d.alphas.push_back(rebased(path, 1, path.length()));
        return d;
    }

    const std::size_t ret = first_return(path);
    const int k = path[ret].drop();
    // The step before the return is H: not U (peak) and not D (consecutive downs).
    const std::size_t spine_end = ret - 1;
    const auto heights = path.heights();

    // Scanning right to left, the first U arriving at height `level` is the
    // spine step for that level: afterwards the path never drops below it.
    std::vector<std::size_t> spine(static_cast<std::size_t>(k));
    int level = k;
    for (std::size_t t = spine_end; t-- > 0 && level > 0;) {
        if (path[t].is_up() && heights[t] == level) {
            spine[static_cast<std::size_t>(level - 1)] = t;
            --level;
        }
    }
    d.form = 2;
    d.drop = k;
    for (int i = 0; i < k; ++i) {
        const std::size_t begin = spine[static_cast<std::size_t>(i)] + 1;
        const std::size_t end = i + 1 < k ? spine[static_cast<std::size_t>(i) + 1] : spine_end;
        d.alphas.push_back(rebased(path, begin, end));
    }
    d.beta = rebased(path, ret + 1, path.length());
    return d;
}

Decomposition decompose_valleyless(const LatticePath& path)
{
    require_map(path, Avoidance::ValleyLess, DomainErrorKind::NotValleyLess);

    Decomposition d{Grammar::ValleyLess};
    if (path.empty()) {
        d.form = 1;
        return d;
    }
    const std::size_t n = path.length();
    if (path.back().is_horizontal()) {
        d.form = 2;
        d.alphas.push_back(rebased(path, 0, n - 1));
        return d;
    }

    // Start of the final arch: the last U leaving the x-axis.
    std::size_t start = n;
    for (std::size_t t = n; t-- > 0;) {
        if (path[t].is_up() && path.height_before(t) == 0) {
            start = t;
            break;
        }
    }
    const int k = path.back().drop();
    d.drop = k;
    const bool has_prefix = start > 0;
    if (has_prefix) {
        // The step before the arch ends on the axis and is not a down-step
        // (that would form a valley), so it is H.
        d.beta = rebased(path, 0, start - 1);
    }
    if (k == 1) {
        d.form = has_prefix ? 4 : 3;
        d.alphas.push_back(rebased(path, start + 1, n - 1));
    } else {
        d.form = has_prefix ? 6 : 5;
        Steps reduced = slice(path, start + 1, n - 1);
        reduced.push_back(Step::down(k - 1));
        d.reduced = LatticePath::validate(std::move(reduced));
    }
    return d;
}

Decomposition decompose_uuless(const LatticePath& path)
{
    require_map(path, Avoidance::DoubleRiseLess, DomainErrorKind::NotUULess);

    Decomposition d{Grammar::UULess};
    if (path.empty()) {
        d.form = 1;
        return d;
    }
    if (path.front().is_horizontal()) {
        d.form = 2;
        d.alphas.push_back(rebased(path, 1, path.length()));
        return d;
    }

    const std::size_t ret = first_return(path);
    const int i = path[ret].drop();
    const std::size_t interior = ret - 1;  // steps strictly inside the first arch
    d.drop = i;
    LatticePath rest = rebased(path, ret + 1, path.length());

    if (interior == 0) {
        d.form = 3;
        d.alphas.push_back(std::move(rest));
    } else if (interior == 1 && i == 1) {
        d.form = 4;
        d.alphas.push_back(std::move(rest));
    } else if (i == 1) {
        // U H alpha H D beta: the arch interior starts with H (no UU) and ends
        // with H (no consecutive downs, cannot be U at height 1).
        d.form = 5;
        d.alphas.push_back(rebased(path, 2, ret - 1));
        d.beta = std::move(rest);
    } else {
        d.form = 6;
        std::size_t t = 1;
        while (t < ret && path[t].is_horizontal()) {
            ++t;
        }
        d.run = static_cast<int>(t - 1);
        Steps reduced = slice(path, t, ret);
        reduced.push_back(Step::down(i - 1));
        d.reduced = LatticePath::validate(std::move(reduced));
        d.beta = std::move(rest);
    }
    return d;
}

LatticePath recompose(const Decomposition& d)
{
    const Step U = Step::up();
    const Step H = Step::horizontal();
    Steps out;
    auto reduced_body = [&]() {
        const auto steps = d.reduced.steps();
        return Steps(steps.begin(), steps.end() - 1);
    };

    switch (d.grammar) {
    case Grammar::PeakLess:
        if (d.form == 1) {
            out.push_back(H);
            append(out, d.alphas.at(0));
        } else {
            for (const LatticePath& a : d.alphas) {
                out.push_back(U);
                append(out, a);
            }
            append(out, {H, Step::down(d.drop)});
            append(out, d.beta);
        }
        break;
    case Grammar::ValleyLess:
        switch (d.form) {
        case 1:
            break;
        case 2:
            append(out, d.alphas.at(0));
            out.push_back(H);
            break;
        case 3:
        case 4:
            if (d.form == 4) {
                append(out, d.beta);
                out.push_back(H);
            }
            out.push_back(U);
            append(out, d.alphas.at(0));
            out.push_back(Step::down(1));
            break;
        default: {
            if (d.form == 6) {
                append(out, d.beta);
                out.push_back(H);
            }
            out.push_back(U);
            const Steps body = reduced_body();
            out.insert(out.end(), body.begin(), body.end());
            out.push_back(Step::down(d.drop));
            break;
        }
        }
        break;
    case Grammar::UULess:
        switch (d.form) {
        case 1:
            break;
        case 2:
            out.push_back(H);
            append(out, d.alphas.at(0));
            break;
        case 3:
            append(out, {U, Step::down(1)});
            append(out, d.alphas.at(0));
            break;
        case 4:
            append(out, {U, H, Step::down(1)});
            append(out, d.alphas.at(0));
            break;
        case 5:
            append(out, {U, H});
            append(out, d.alphas.at(0));
            append(out, {H, Step::down(1)});
            append(out, d.beta);
            break;
        default: {
            out.push_back(U);
            out.insert(out.end(), static_cast<std::size_t>(d.run), H);
            const Steps body = reduced_body();
            out.insert(out.end(), body.begin(), body.end());
            out.push_back(Step::down(d.drop));
            append(out, d.beta);
            break;
        }
        }
        break;
    }
    return LatticePath::validate(std::move(out));
}

std::string describe(const Decomposition& d)
{
    std::string out = "(" + std::to_string(d.form) + ")";
    switch (d.grammar) {
    case Grammar::PeakLess:
        if (d.form == 1) {
            return out + " H alpha: alpha=" + text(d.alphas.at(0));
        }
        out += " U alpha_1 ... U alpha_k H D_k beta: k=" + std::to_string(d.drop);
        for (std::size_t i = 0; i < d.alphas.size(); ++i) {
            out += ", alpha_" + std::to_string(i + 1) + "=" + text(d.alphas[i]);
        }
        return out + ", beta=" + text(d.beta);
    case Grammar::ValleyLess:
        switch (d.form) {
        case 1:
            return out + " eps";
        case 2:
            return out + " alpha H: alpha=" + text(d.alphas.at(0));
        case 3:
            return out + " U alpha D: alpha=" + text(d.alphas.at(0));
        case 4:
            return out + " beta H U alpha D: beta=" + text(d.beta) + ", alpha=" + text(d.alphas.at(0));
        case 5:
            return out + " U gamma D_k: k=" + std::to_string(d.drop) + ", gamma D_{k-1}=" + text(d.reduced);
        default:
            return out + " beta H U gamma D_k: k=" + std::to_string(d.drop) + ", beta=" + text(d.beta) +
                   ", gamma D_{k-1}=" + text(d.reduced);
        }
    case Grammar::UULess:
        switch (d.form) {
        case 1:
            return out + " eps";
        case 2:
            return out + " H alpha: alpha=" + text(d.alphas.at(0));
        case 3:
            return out + " U D alpha: alpha=" + text(d.alphas.at(0));
        case 4:
            return out + " U H D alpha: alpha=" + text(d.alphas.at(0));
        case 5:
            return out + " U H alpha H D beta: alpha=" + text(d.alphas.at(0)) + ", beta=" + text(d.beta);
        default:
            return out + " U H^k gamma D_i beta: k=" + std::to_string(d.run) + ", i=" + std::to_string(d.drop) +
                   ", gamma D_{i-1}=" + text(d.reduced) + ", beta=" + text(d.beta);
        }
    }
    return out;
}

namespace {

void psi_into(const LatticePath& path, Steps& out)
{
    if (path.empty()) {
        return;
    }
    const Step U = Step::up();
    const Step D = Step::down(1);
    const Decomposition d = decompose_peakless(path);
    if (d.form == 1) {
        append(out, {U, D});
        psi_into(d.alphas[0], out);
        return;
    }
    append(out, {U, U, U});
    for (std::size_t i = 0; i < d.alphas.size(); ++i) {
        if (i > 0) {
            append(out, {D, U});
        }
        psi_into(d.alphas[i], out);
    }
    append(out, {D, D, D});
    psi_into(d.beta, out);
}

void phi_into(const LatticePath& path, Steps& out);

LatticePath phi_path(const LatticePath& path)
{
    Steps out;
    phi_into(path, out);
    return LatticePath::validate(std::move(out));
}

void phi_into(const LatticePath& path, Steps& out)
{
    const Decomposition d = decompose_valleyless(path);
    switch (d.form) {
    case 1:
        out.push_back(Step::horizontal());
        return;
    case 2:
        phi_into(d.alphas[0], out);
        out.push_back(Step::horizontal());
        return;
    case 3:
    case 4:
        if (d.form == 4) {
            phi_into(d.beta, out);
        }
        out.push_back(Step::up());
        phi_into(d.alphas[0], out);
        out.push_back(Step::down(1));
        return;
    default:
        if (d.form == 6) {
            phi_into(d.beta, out);
        }
        append(out, sharp(phi_path(d.reduced), d.drop));
        return;
    }
}

void chi_into(const LatticePath& path, Steps& out)
{
    const Step U = Step::up();
    const Step H = Step::horizontal();
    const Step D = Step::down(1);
    const Decomposition d = decompose_uuless(path);
    switch (d.form) {
    case 1:
        return;
    case 2:
        out.push_back(H);
        chi_into(d.alphas[0], out);
        return;
    case 3:
        append(out, {U, D});
        chi_into(d.alphas[0], out);
        return;
    case 4:
        append(out, {U, H, D});
        chi_into(d.alphas[0], out);
        return;
    case 5:
        append(out, {U, H, H});
        chi_into(d.alphas[0], out);
        out.push_back(D);
        chi_into(d.beta, out);
        return;
    default:
        out.push_back(U);
        chi_into(d.reduced, out);
        out.insert(out.end(), static_cast<std::size_t>(d.run - 1), H);
        out.push_back(D);
        chi_into(d.beta, out);
        return;
    }
}

}  // namespace

LatticePath psi(const LatticePath& path)
{
    if (!path.empty()) {
        require_map(path, Avoidance::PeakLess, DomainErrorKind::NotPeakLess);
    }
    Steps out;
    psi_into(path, out);
    return LatticePath::validate(std::move(out), StepRule::Plain);
}

LatticePath sharp(const LatticePath& q, int k)
{
    if (k < 1) {
        throw std::invalid_argument("sharp needs k >= 1");
    }
    require_map(q, Avoidance::PeakLess, DomainErrorKind::NotPeakLess);
    Steps out{Step::up()};
    if (k == 1) {
        if (q.empty()) {
            throw DomainError(DomainErrorKind::WouldCreatePeak, "(eps)^# would be the peak UD");
        }
        if (q.back().is_down()) {
            throw DomainError(DomainErrorKind::NotSharpable, render_path(q) + " ends with a down-step");
        }
        append(out, q);
        out.push_back(Step::down(1));
    } else {
        if (q.empty() || !q.back().is_down() || q.back().drop() != k - 1) {
            throw DomainError(DomainErrorKind::NotSharpable,
                              text(q) + " does not end with D_" + std::to_string(k - 1));
        }
        out.insert(out.end(), q.steps().begin(), q.steps().end() - 1);
        out.push_back(Step::down(k));
    }
    return LatticePath::validate(std::move(out));
}

LatticePath phi(const LatticePath& path)
{
    return phi_path(path);
}

LatticePath chi(const LatticePath& path)
{
    Steps out;
    chi_into(path, out);
    return LatticePath::validate(std::move(out), StepRule::Plain);
}

std::string_view to_string(BijectionMap map)
{
    switch (map) {
    case BijectionMap::Psi:
        return "psi";
    case BijectionMap::Phi:
        return "phi";
    case BijectionMap::Chi:
        break;
    }
    return "chi";
}

BijectionMap parse_bijection_map(std::string_view name)
{
    for (BijectionMap map : {BijectionMap::Psi, BijectionMap::Phi, BijectionMap::Chi}) {
        if (to_string(map) == name) {
            return map;
        }
    }
    throw std::invalid_argument("unknown bijection '" + std::string(name) + "' (expected psi, phi or chi)");
}

BijectionReport verify_bijection(BijectionMap map, std::size_t n)
{
    BijectionReport report{map, n};
    std::vector<LatticePath> domain;
    switch (map) {
    case BijectionMap::Psi:
        domain = enumerate_pmap(n, Avoidance::PeakLess, 0);
        report.codomain_size = enumerate_dyck_21(n).size();
        break;
    case BijectionMap::Phi:
        if (n == 0) {
            throw std::invalid_argument("phi maps length n - 1 to length n; n must be at least 1");
        }
        domain = enumerate_pmap(n - 1, Avoidance::ValleyLess, 0);
        report.codomain_size = enumerate_pmap(n, Avoidance::PeakLess, 0).size();
        break;
    case BijectionMap::Chi:
        domain = enumerate_pmap(n, Avoidance::DoubleRiseLess, 0);
        report.codomain_size = enumerate_motzkin_uhu(n).size();
        break;
    }
    report.domain_size = domain.size();

    std::set<LatticePath> images;
    for (const LatticePath& p : domain) {
        LatticePath image;
        try {
            image = map == BijectionMap::Psi ? psi(p) : map == BijectionMap::Phi ? phi(p) : chi(p);
        } catch (const std::exception& e) {
            report.images_in_codomain = false;
            report.counterexample = Counterexample{render_path(p), e.what()};
            return report;
        }

        bool member = false;
        std::size_t expected_length = n;
        switch (map) {
        case BijectionMap::Psi:
            expected_length = 2 * n;
            member = image.length() == expected_length && is_dyck_no_peak2_no_valley1_mod3(image);
            break;
        case BijectionMap::Phi:
            member = image.length() == n && image.returns_to_axis() && !image.has_consecutive_downs() &&
                     avoids(image, Avoidance::PeakLess);
            break;
        case BijectionMap::Chi:
            member = image.length() == n && is_motzkin_uhu_less(image);
            break;
        }
        if (!member) {
            report.images_in_codomain = false;
            report.counterexample = Counterexample{render_path(p), "image " + render_path(image) + " not in codomain"};
            return report;
        }
        if (!images.insert(image).second) {
            report.injective = false;
            report.counterexample = Counterexample{render_path(p), "image " + render_path(image) + " repeated"};
            return report;
        }
    }
    return report;
}

}  // namespace airpockets
