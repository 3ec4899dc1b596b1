#include "airpockets/path.hpp"

#include <algorithm>
#include <cctype>

namespace airpockets {

Step Step::down(int drop)
{
    if (drop < 1) {
        throw std::invalid_argument("down-step magnitude must be at least 1, got " + std::to_string(drop));
    }
    return Step{StepKind::Down, drop};
}

PathError::PathError(PathErrorKind kind, std::size_t position, const std::string& message)
    : std::invalid_argument(message), kind_(kind), position_(position)
{
}

LatticePath LatticePath::validate(std::span<const Step> steps, StepRule rule)
{
    return validate(std::vector<Step>(steps.begin(), steps.end()), rule);
}

LatticePath LatticePath::validate(std::vector<Step>&& steps, StepRule rule)
{
    LatticePath out;
    out.heights_.reserve(steps.size());
    int height = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step s = steps[i];
        if (s.is_down() && s.drop() < 1) {
            throw PathError(PathErrorKind::InvalidDownMagnitude, i + 1,
                            "invalid down-step magnitude at step " + std::to_string(i + 1));
        }
        if (rule == StepRule::AirPockets && s.is_down() && i > 0 && steps[i - 1].is_down()) {
            throw PathError(PathErrorKind::ConsecutiveDowns, i + 1,
                            "two consecutive down-steps at step " + std::to_string(i + 1));
        }
        height += s.delta();
        if (height < 0) {
            throw PathError(PathErrorKind::NegativeHeight, i + 1,
                            "path goes below the x-axis at step " + std::to_string(i + 1));
        }
        out.heights_.push_back(height);
    }
    out.steps_ = std::move(steps);
    return out;
}

int LatticePath::max_height() const
{
    return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
}

bool LatticePath::has_consecutive_downs() const
{
    return std::adjacent_find(steps_.begin(), steps_.end(),
                              [](Step a, Step b) { return a.is_down() && b.is_down(); }) != steps_.end();
}

std::string_view to_string(Avoidance cls)
{
    switch (cls) {
    case Avoidance::PeakLess:
        return "peakless";
    case Avoidance::ValleyLess:
        return "valleyless";
    case Avoidance::DoubleRiseLess:
        return "uuless";
    case Avoidance::Unrestricted:
        break;
    }
    return "none";
}

Avoidance parse_avoidance(std::string_view name)
{
    for (Avoidance cls :
         {Avoidance::PeakLess, Avoidance::ValleyLess, Avoidance::DoubleRiseLess, Avoidance::Unrestricted}) {
        if (to_string(cls) == name) {
            return cls;
        }
    }
    throw std::invalid_argument("unknown avoidance class '" + std::string(name) +
                                "' (expected peakless, valleyless, uuless or none)");
}

PatternCounts scan_patterns(const LatticePath& path)
{
    PatternCounts counts;
    const auto steps = path.steps();
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const Step a = steps[i - 1];
        const Step b = steps[i];
        if (a.is_up() && b.is_down()) {
            ++counts.peaks;
        } else if (a.is_down() && b.is_up()) {
            ++counts.valleys;
        } else if (a.is_up() && b.is_up()) {
            ++counts.double_rises;
        }
    }
    return counts;
}

bool avoids(const LatticePath& path, Avoidance cls)
{
    const PatternCounts counts = scan_patterns(path);
    switch (cls) {
    case Avoidance::PeakLess:
        return counts.peaks == 0;
    case Avoidance::ValleyLess:
        return counts.valleys == 0;
    case Avoidance::DoubleRiseLess:
        return counts.double_rises == 0;
    case Avoidance::Unrestricted:
        break;
    }
    return true;
}

bool is_dyck_no_peak2_no_valley1_mod3(const LatticePath& path)
{
    const auto steps = path.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].is_horizontal() || (steps[i].is_down() && steps[i].drop() != 1)) {
            throw PathError(PathErrorKind::NotADyckPath, i + 1, "not a Dyck step at position " + std::to_string(i + 1));
        }
    }
    if (!path.returns_to_axis()) {
        throw PathError(PathErrorKind::NotADyckPath, steps.size(), "Dyck path must end on the x-axis");
    }
    const auto heights = path.heights();
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const int joint = heights[i - 1];
        if (steps[i - 1].is_up() && steps[i].is_down() && joint % 3 == 2) {
            return false;
        }
        if (steps[i - 1].is_down() && steps[i].is_up() && joint % 3 == 1) {
            return false;
        }
    }
    return true;
}

bool is_motzkin_uhu_less(const LatticePath& path)
{
    const auto steps = path.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].is_down() && steps[i].drop() != 1) {
            throw PathError(PathErrorKind::NotAMotzkinPath, i + 1,
                            "not a Motzkin step at position " + std::to_string(i + 1));
        }
    }
    if (!path.returns_to_axis()) {
        throw PathError(PathErrorKind::NotAMotzkinPath, steps.size(), "Motzkin path must end on the x-axis");
    }
    for (std::size_t i = 2; i < steps.size(); ++i) {
        if (steps[i - 2].is_up() && steps[i - 1].is_horizontal() && steps[i].is_up()) {
            return false;
        }
    }
    return true;
}

LatticePath parse_path(std::string_view text, StepRule rule)
{
    std::vector<Step> steps;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t column = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == 'U') {
            steps.push_back(Step::up());
            ++i;
        } else if (c == 'H') {
            steps.push_back(Step::horizontal());
            ++i;
        } else if (c == 'D') {
            ++i;
            std::size_t end = i;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
                ++end;
            }
            if (end == i) {
                steps.push_back(Step::down(1));
                continue;
            }
            if (end - i > 6) {
                throw PathError(PathErrorKind::Syntax, column, "down-step magnitude too large at column " +
                                                                   std::to_string(column));
            }
            const int drop = std::stoi(std::string(text.substr(i, end - i)));
            if (drop < 1) {
                throw PathError(PathErrorKind::InvalidDownMagnitude, steps.size() + 1,
                                "invalid down-step magnitude at column " + std::to_string(column));
            }
            steps.push_back(Step::down(drop));
            i = end;
        } else {
            throw PathError(PathErrorKind::Syntax, column,
                            std::string("unexpected character '") + c + "' at column " + std::to_string(column));
        }
    }
    return LatticePath::validate(std::move(steps), rule);
}

std::string render_step(Step step)
{
    switch (step.kind()) {
    case StepKind::Up:
        return "U";
    case StepKind::Horizontal:
        return "H";
    case StepKind::Down:
        break;
    }
    return step.drop() == 1 ? "D" : "D" + std::to_string(step.drop());
}

std::string render_path(const LatticePath& path)
{
    std::string out;
    for (Step s : path.steps()) {
        out += render_step(s);
    }
    return out;
}

}  // namespace airpockets
