#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace airpockets {

enum class StepKind : std::uint8_t { Up, Horizontal, Down };

// One step of a lattice path: U = (1,1), H = (1,0) or D_k = (1,-k).
class Step {
public:
    static constexpr Step up() { return Step{StepKind::Up, 0}; }
    static constexpr Step horizontal() { return Step{StepKind::Horizontal, 0}; }
    // Throws std::invalid_argument when drop < 1.
    static Step down(int drop);

    constexpr StepKind kind() const { return kind_; }
    constexpr int drop() const { return drop_; }
    constexpr bool is_up() const { return kind_ == StepKind::Up; }
    constexpr bool is_horizontal() const { return kind_ == StepKind::Horizontal; }
    constexpr bool is_down() const { return kind_ == StepKind::Down; }

    constexpr int delta() const
    {
        switch (kind_) {
        case StepKind::Up:
            return 1;
        case StepKind::Horizontal:
            return 0;
        case StepKind::Down:
            break;
        }
        return -drop_;
    }

    // U < H < D_1 < D_2 < ...
    constexpr int rank() const { return kind_ == StepKind::Up ? 0 : kind_ == StepKind::Horizontal ? 1 : 1 + drop_; }

    friend constexpr bool operator==(Step a, Step b) { return a.kind_ == b.kind_ && a.drop_ == b.drop_; }
    friend constexpr std::strong_ordering operator<=>(Step a, Step b) { return a.rank() <=> b.rank(); }

private:
    constexpr Step(StepKind kind, int drop) : kind_(kind), drop_(drop) {}

    StepKind kind_;
    int drop_;
};

enum class PathErrorKind {
    NegativeHeight,
    ConsecutiveDowns,
    InvalidDownMagnitude,
    Syntax,
    NotADyckPath,
    NotAMotzkinPath,
};

class PathError : public std::invalid_argument {
public:
    // position is the 1-based step index for validation errors and the
    // 1-based character column for syntax errors.
    PathError(PathErrorKind kind, std::size_t position, const std::string& message);

    PathErrorKind kind() const { return kind_; }
    std::size_t position() const { return position_; }

private:
    PathErrorKind kind_;
    std::size_t position_;
};

// Which adjacency rules a step sequence must satisfy besides staying in the
// first quadrant. Air-pocket paths forbid two consecutive down-steps; plain
// Dyck and Motzkin paths (the bijection codomains) do not.
enum class StepRule { AirPockets, Plain };

// A validated first-quadrant step sequence starting at the origin.
class LatticePath {
public:
    LatticePath() = default;

    static LatticePath validate(std::span<const Step> steps, StepRule rule = StepRule::AirPockets);
    static LatticePath validate(std::vector<Step>&& steps, StepRule rule = StepRule::AirPockets);

    std::span<const Step> steps() const { return steps_; }
    // heights()[i] is the height after step i.
    std::span<const int> heights() const { return heights_; }
    // Height before step i (0 for i == 0).
    int height_before(std::size_t i) const { return i == 0 ? 0 : heights_[i - 1]; }

    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const Step& operator[](std::size_t i) const { return steps_[i]; }
    const Step& front() const { return steps_.front(); }
    const Step& back() const { return steps_.back(); }

    int final_height() const { return heights_.empty() ? 0 : heights_.back(); }
    int max_height() const;
    bool returns_to_axis() const { return final_height() == 0; }
    bool has_consecutive_downs() const;

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps_ == b.steps_; }
    friend std::strong_ordering operator<=>(const LatticePath& a, const LatticePath& b)
    {
        return std::lexicographical_compare_three_way(a.steps_.begin(), a.steps_.end(), b.steps_.begin(),
                                                      b.steps_.end());
    }

private:
    std::vector<Step> steps_;
    std::vector<int> heights_;
};

enum class Avoidance { PeakLess, ValleyLess, DoubleRiseLess, Unrestricted };

// Lowercase CLI names: peakless, valleyless, uuless, none.
std::string_view to_string(Avoidance cls);
// Throws std::invalid_argument for unknown names.
Avoidance parse_avoidance(std::string_view name);

struct PatternCounts {
    std::size_t peaks = 0;        // U D_k
    std::size_t valleys = 0;      // D_k U
    std::size_t double_rises = 0; // U U

    friend bool operator==(const PatternCounts&, const PatternCounts&) = default;
};

PatternCounts scan_patterns(const LatticePath& path);
bool avoids(const LatticePath& path, Avoidance cls);

// Dyck path with no peak apex at height 2 (mod 3) and no valley trough at
// height 1 (mod 3). Throws PathError(NotADyckPath) for anything that is not a
// Dyck path.
bool is_dyck_no_peak2_no_valley1_mod3(const LatticePath& path);

// Motzkin path (U, H, D_1 only, returning to 0) without a U H U factor.
// Throws PathError(NotAMotzkinPath) otherwise.
bool is_motzkin_uhu_less(const LatticePath& path);

// Grammar: tokens U, H, D (= D_1) and D<k>; whitespace between tokens is
// ignored. Validation follows `rule`.
LatticePath parse_path(std::string_view text, StepRule rule = StepRule::AirPockets);
std::string render_path(const LatticePath& path);
std::string render_step(Step step);

}  // namespace airpockets
