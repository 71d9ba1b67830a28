#ifndef THC_BIGINT_HPP
#define THC_BIGINT_HPP

#include <gmpxx.h>
#include <string>

namespace thc {

// Exact arbitrary-precision counts end to end; serialized as decimal strings.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s, 10); }

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace thc

#endif
