#include "airpockets/enumerator.hpp"

#include <cstdint>
#include <functional>

namespace airpockets {

CountTable::CountTable(std::size_t n_max) : n_max_(n_max), up_(n_max + 1), down_(n_max + 1), horizontal_(n_max + 1)
{
}

Integer CountTable::total(std::size_t n, std::size_t k) const
{
    if (k > n) {
        return 0;
    }
    return up(n, k) + down(n, k) + horizontal(n, k);
}

Triangle CountTable::totals() const
{
    Triangle out(n_max_ + 1);
    for (std::size_t n = 0; n <= n_max_; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            out(n, k) = total(n, k);
        }
    }
    return out;
}

Integer CountTable::row_sum(std::size_t n) const
{
    Integer sum = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        sum += total(n, k);
    }
    return sum;
}

namespace {

enum class Last : std::uint8_t { None, Up, Down, Horizontal };

Last last_of(Step s)
{
    return s.is_up() ? Last::Up : s.is_down() ? Last::Down : Last::Horizontal;
}

bool may_follow(Last prev, Step next, Avoidance cls)
{
    if (next.is_down()) {
        if (prev == Last::Down) {
            return false;
        }
        return !(cls == Avoidance::PeakLess && prev == Last::Up);
    }
    if (next.is_up()) {
        if (cls == Avoidance::ValleyLess && prev == Last::Down) {
            return false;
        }
        return !(cls == Avoidance::DoubleRiseLess && prev == Last::Up);
    }
    return true;
}

// Calls visit(step) for each step allowed after `prev` at `height`, in
// generation order.
template <typename Visit>
void for_each_next(int height, Last prev, Avoidance cls, Visit&& visit)
{
    const Step up = Step::up();
    if (may_follow(prev, up, cls)) {
        visit(up);
    }
    visit(Step::horizontal());
    for (int drop = 1; drop <= height; ++drop) {
        const Step d = Step::down(drop);
        if (!may_follow(prev, d, cls)) {
            break;
        }
        visit(d);
    }
}

struct PmapWalker {
    std::size_t length;
    Avoidance cls;
    std::optional<int> end_height;
    std::vector<Step> current;
    std::vector<LatticePath> out;

    void walk(int height, Last prev)
    {
        if (current.size() == length) {
            if (!end_height || *end_height == height) {
                out.push_back(LatticePath::validate(current));
            }
            return;
        }
        const int remaining = static_cast<int>(length - current.size());
        for_each_next(height, prev, cls, [&](Step s) {
            const int next = height + s.delta();
            // Up-steps are the only way to climb, one unit per step.
            if (end_height && next + (remaining - 1) < *end_height) {
                return;
            }
            current.push_back(s);
            walk(next, last_of(s));
            current.pop_back();
        });
    }
};

struct BruteCounter {
    std::size_t n_max;
    Avoidance cls;
    // counts[kind][n][k] with kind 0 = up (and the empty path), 1 = down, 2 = horizontal.
    std::vector<std::vector<std::vector<std::uint64_t>>> counts;

    void walk(std::size_t n, int height, Last prev)
    {
        const int kind = prev == Last::Down ? 1 : prev == Last::Horizontal ? 2 : 0;
        ++counts[kind][n][height];
        if (n == n_max) {
            return;
        }
        for_each_next(height, prev, cls, [&](Step s) { walk(n + 1, height + s.delta(), last_of(s)); });
    }
};

}  // namespace

std::vector<LatticePath> enumerate_pmap(std::size_t n, Avoidance cls, std::optional<int> end_height)
{
    PmapWalker walker{n, cls, end_height, {}, {}};
    if (end_height && (*end_height < 0 || static_cast<std::size_t>(*end_height) > n)) {
        return {};
    }
    walker.current.reserve(n);
    walker.walk(0, Last::None);
    return std::move(walker.out);
}

CountTable count_table_brute(std::size_t n_max, Avoidance cls)
{
    BruteCounter counter{n_max, cls, {}};
    counter.counts.assign(3, std::vector<std::vector<std::uint64_t>>(n_max + 1, std::vector<std::uint64_t>(n_max + 1)));
    counter.walk(0, 0, Last::None);

    CountTable table(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            table.up(n, k) = Integer{static_cast<unsigned long>(counter.counts[0][n][k])};
            table.down(n, k) = Integer{static_cast<unsigned long>(counter.counts[1][n][k])};
            table.horizontal(n, k) = Integer{static_cast<unsigned long>(counter.counts[2][n][k])};
        }
    }
    return table;
}

CountTable count_table_dp(std::size_t n_max, Avoidance cls)
{
    CountTable t(n_max);
    t.up(0, 0) = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::size_t p = n - 1;
        // Suffix sums over the previous row of the parts that may precede a down-step.
        std::vector<Integer> tail(n + 1, Integer{0});
        for (std::size_t l = p + 1; l-- > 0;) {
            Integer allowed = t.horizontal(p, l);
            if (cls != Avoidance::PeakLess) {
                allowed += t.up(p, l);
            }
            tail[l] = tail[l + 1] + allowed;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            if (k >= 1) {
                const std::size_t j = k - 1;
                Integer from = t.down(p, j) + t.horizontal(p, j);
                switch (cls) {
                case Avoidance::PeakLess:
                case Avoidance::Unrestricted:
                    from += t.up(p, j);
                    break;
                case Avoidance::ValleyLess:
                    from = t.up(p, j) + t.horizontal(p, j);
                    break;
                case Avoidance::DoubleRiseLess:
                    // The empty path is the only up-part entry allowed before a U.
                    if (p == 0 && j == 0) {
                        from += 1;
                    }
                    break;
                }
                t.up(n, k) = from;
            }
            if (k + 1 <= p) {
                t.down(n, k) = tail[k + 1];
            }
            if (k <= p) {
                t.horizontal(n, k) = t.total(p, k);
            }
        }
    }
    return t;
}

CountTable count_table(std::size_t n_max, Avoidance cls)
{
    return n_max <= kBruteForceLimit ? count_table_brute(n_max, cls) : count_table_dp(n_max, cls);
}

namespace {

void walk_dyck(std::size_t semilength, std::vector<Step>& current, int height, std::size_t ups,
               std::vector<LatticePath>& out)
{
    const std::size_t steps = 2 * semilength;
    if (current.size() == steps) {
        out.push_back(LatticePath::validate(current, StepRule::Plain));
        return;
    }
    const bool after_up = !current.empty() && current.back().is_up();
    const bool after_down = !current.empty() && current.back().is_down();
    if (ups < semilength && !(after_down && height % 3 == 1)) {
        current.push_back(Step::up());
        walk_dyck(semilength, current, height + 1, ups + 1, out);
        current.pop_back();
    }
    if (height > 0 && !(after_up && height % 3 == 2)) {
        current.push_back(Step::down(1));
        walk_dyck(semilength, current, height - 1, ups, out);
        current.pop_back();
    }
}

void walk_motzkin(std::size_t n, std::vector<Step>& current, int height, std::vector<LatticePath>& out)
{
    if (current.size() == n) {
        if (height == 0) {
            out.push_back(LatticePath::validate(current, StepRule::Plain));
        }
        return;
    }
    const int remaining = static_cast<int>(n - current.size());
    const std::size_t m = current.size();
    const bool uh_tail = m >= 2 && current[m - 2].is_up() && current[m - 1].is_horizontal();
    for (const Step s : {Step::up(), Step::horizontal(), Step::down(1)}) {
        const int next = height + s.delta();
        if (next < 0 || next > remaining - 1) {
            continue;
        }
        if (s.is_up() && uh_tail) {
            continue;
        }
        current.push_back(s);
        walk_motzkin(n, current, next, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<LatticePath> enumerate_dyck_21(std::size_t semilength)
{
    std::vector<LatticePath> out;
    std::vector<Step> current;
    current.reserve(2 * semilength);
    walk_dyck(semilength, current, 0, 0, out);
    return out;
}

std::vector<LatticePath> enumerate_motzkin_uhu(std::size_t n)
{
    std::vector<LatticePath> out;
    std::vector<Step> current;
    current.reserve(n);
    walk_motzkin(n, current, 0, out);
    return out;
}

}  // namespace airpockets
