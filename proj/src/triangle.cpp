#include "airpockets/triangle.hpp"

#include <stdexcept>
#include <string>

namespace airpockets {

Triangle::Triangle(std::size_t rows)
{
    rows_.reserve(rows);
    for (std::size_t n = 0; n < rows; ++n) {
        rows_.emplace_back(n + 1, Integer{0});
    }
}

Triangle::Triangle(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows))
{
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() > n + 1) {
            throw std::invalid_argument("triangle row " + std::to_string(n) + " has entries above the diagonal");
        }
        rows_[n].resize(n + 1, Integer{0});
    }
}

Integer Triangle::at(std::size_t n, std::size_t k) const
{
    if (n >= rows_.size()) {
        throw std::out_of_range("triangle row " + std::to_string(n) + " not computed");
    }
    return k <= n ? rows_[n][k] : Integer{0};
}

Integer& Triangle::operator()(std::size_t n, std::size_t k)
{
    if (n >= rows_.size() || k > n) {
        throw std::out_of_range("triangle entry (" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
    }
    return rows_[n][k];
}

Triangle Triangle::leading(std::size_t count) const
{
    if (count > rows_.size()) {
        throw std::out_of_range("requested " + std::to_string(count) + " rows, have " + std::to_string(rows_.size()));
    }
    return Triangle(std::vector<std::vector<Integer>>(rows_.begin(), rows_.begin() + count));
}

}  // namespace airpockets
