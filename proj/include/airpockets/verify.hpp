#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace airpockets {

enum class Suite { Systems, Triangles, Bijections, Riordan, All };

std::string_view to_string(Suite suite);
// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);

struct Check {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<Check> checks;  // sorted by (suite, name)

    bool ok() const;
    std::size_t failures() const;
};

// Cross-engine invariant checks up to length n_max. `order` is the
// truncation order used by the systems suite.
VerifyReport run_verify(Suite suite, int n_max, int order);

}  // namespace airpockets
