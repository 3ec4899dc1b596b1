#pragma once

#include <cstddef>
#include <vector>

#include "airpockets/integer.hpp"

namespace airpockets {

// Lower-triangular table t(n, k), 0 <= k <= n < rows(). Entries above the
// diagonal read as zero.
class Triangle {
public:
    Triangle() = default;
    explicit Triangle(std::size_t rows);
    explicit Triangle(std::vector<std::vector<Integer>> rows);

    std::size_t rows() const { return rows_.size(); }

    Integer at(std::size_t n, std::size_t k) const;
    Integer& operator()(std::size_t n, std::size_t k);
    const std::vector<Integer>& row(std::size_t n) const { return rows_.at(n); }

    // Leading block of the first `count` rows.
    Triangle leading(std::size_t count) const;

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    std::vector<std::vector<Integer>> rows_;
};

}  // namespace airpockets
