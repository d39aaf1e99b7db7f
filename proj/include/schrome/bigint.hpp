#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace schrome {

// Exact arbitrary-precision integers. Table entries like 5493687086 and the
// power-basis coefficients of degree-17 polynomials overflow 64 bits, so
// every counting value in the library is a BigInt.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt big_binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt big_factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline bool fits_int64(const BigInt& v) { return v.fits_slong_p(); }

}  // namespace schrome
