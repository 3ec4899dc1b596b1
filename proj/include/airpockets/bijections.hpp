#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <stdexcept>
#include <string>
#include <vector>

#include "airpockets/path.hpp"

namespace airpockets {

enum class DomainErrorKind {
    NotMAP,
    EmptyPath,
    NotPeakLess,
    NotValleyLess,
    NotUULess,
    WouldCreatePeak,
    NotSharpable,
};

class DomainError : public std::invalid_argument {
public:
    DomainError(DomainErrorKind kind, const std::string& message) : std::invalid_argument(message), kind_(kind) {}

    DomainErrorKind kind() const { return kind_; }

private:
    DomainErrorKind kind_;
};

enum class Grammar { PeakLess, ValleyLess, UULess };

// First-level split of a MAP under one of the three grammars. Sub-paths are
// stored re-based at height 0.
//
//   PeakLess   (1) H alpha
//              (2) U alpha_1 U alpha_2 ... U alpha_k H D_k beta
//   ValleyLess (1) eps  (2) alpha H  (3) U alpha D  (4) beta H U alpha D
//              (5) U gamma D_k  (6) beta H U gamma D_k             with k >= 2
//   UULess     (1) eps  (2) H alpha  (3) U D alpha  (4) U H D alpha
//              (5) U H alpha H D beta  (6) U H^k gamma D_i beta     with i >= 2
//
// `reduced` holds gamma D_{k-1} (valley-less) or gamma D_{i-1} (UU-less) in
// forms (5)/(6), which is itself a MAP of the same class.
struct Decomposition {
    Grammar grammar;
    int form = 0;
    std::vector<LatticePath> alphas{};
    LatticePath beta{};
    LatticePath reduced{};
    int drop = 0;  // k of the spine / final drop, or i of the first arch
    int run = 0;   // H^k prefix length in UU-less form (6)
};

Decomposition decompose_peakless(const LatticePath& path);
Decomposition decompose_valleyless(const LatticePath& path);
Decomposition decompose_uuless(const LatticePath& path);

// Concatenates the components back into the decomposed path.
LatticePath recompose(const Decomposition& d);

// One-line description of the matched form, e.g. "(2) k=3 alpha_1=UHDH ...".
std::string describe(const Decomposition& d);

// Peak-less MAP of length n -> Dyck path of semilength n in D_n(2,1).
LatticePath psi(const LatticePath& path);

// (alpha D_{k-1})^# = U alpha D_k. With k = 1 the final step is absent and the
// result is U Q D.
LatticePath sharp(const LatticePath& q, int k);

// Valley-less MAP of length n - 1 -> peak-less MAP of length n.
LatticePath phi(const LatticePath& path);

// UU-less MAP of length n -> UHU-less Motzkin path of length n.
LatticePath chi(const LatticePath& path);

enum class BijectionMap { Psi, Phi, Chi };

std::string_view to_string(BijectionMap map);
BijectionMap parse_bijection_map(std::string_view name);

struct Counterexample {
    std::string path;
    std::string reason;
};

struct BijectionReport {
    BijectionMap map;
    std::size_t n;  // psi, chi: domain length; phi: codomain length
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    bool images_in_codomain = true;
    bool injective = true;
    std::optional<Counterexample> counterexample{};

    bool ok() const { return images_in_codomain && injective && domain_size == codomain_size && !counterexample; }
};

// Applies the map to its whole domain at size n and checks codomain
// membership, injectivity and equal cardinalities. For phi, n >= 1.
BijectionReport verify_bijection(BijectionMap map, std::size_t n);

}  // namespace airpockets
