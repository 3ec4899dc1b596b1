#include "airpockets/integer.hpp"

#include <stdexcept>
#include <string>

namespace airpockets {

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || (n >= 0 && k > n)) {
        return 0;
    }
    Integer top{static_cast<long>(n)};
    Integer out;
    // mpz_bin_ui handles negative tops as (-1)^k C(-n+k-1, k).
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

Integer require_integral(const Rational& q, const char* what)
{
    if (q.get_den() != 1) {
        throw std::domain_error(std::string(what) + ": non-integral value " + q.get_str());
    }
    return q.get_num();
}

}  // namespace airpockets
