#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "airpockets/integer.hpp"
#include "airpockets/path.hpp"
#include "airpockets/triangle.hpp"

namespace airpockets {

// t(n, k) for partial air-pocket paths, together with the split by the kind of
// the last step: up (f), down (g), horizontal (h). The empty path is counted
// in the up part at (0, 0), matching f_0 = 1.
class CountTable {
public:
    explicit CountTable(std::size_t n_max);

    std::size_t n_max() const { return n_max_; }

    Integer total(std::size_t n, std::size_t k) const;
    const Integer& up(std::size_t n, std::size_t k) const { return up_.row(n).at(k); }
    const Integer& down(std::size_t n, std::size_t k) const { return down_.row(n).at(k); }
    const Integer& horizontal(std::size_t n, std::size_t k) const { return horizontal_.row(n).at(k); }

    Integer& up(std::size_t n, std::size_t k) { return up_(n, k); }
    Integer& down(std::size_t n, std::size_t k) { return down_(n, k); }
    Integer& horizontal(std::size_t n, std::size_t k) { return horizontal_(n, k); }

    Triangle totals() const;
    Integer row_sum(std::size_t n) const;

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    std::size_t n_max_;
    Triangle up_;
    Triangle down_;
    Triangle horizontal_;
};

// All valid partial paths of length n avoiding `cls`, optionally restricted
// to an end height, in lexicographic order U < H < D_1 < D_2 < ...
std::vector<LatticePath> enumerate_pmap(std::size_t n, Avoidance cls, std::optional<int> end_height = std::nullopt);

// Depth-first count visiting every path prefix individually.
CountTable count_table_brute(std::size_t n_max, Avoidance cls);

// Transfer over (height, kind of last step) states; polynomial in n_max.
CountTable count_table_dp(std::size_t n_max, Avoidance cls);

// Brute force up to kBruteForceLimit, state DP beyond.
inline constexpr std::size_t kBruteForceLimit = 14;
CountTable count_table(std::size_t n_max, Avoidance cls);

// Dyck paths of semilength n in D_n(2,1).
std::vector<LatticePath> enumerate_dyck_21(std::size_t semilength);

// Motzkin paths of length n without U H U.
std::vector<LatticePath> enumerate_motzkin_uhu(std::size_t n);

}  // namespace airpockets
