// Conversions between long long and GMP types. gmpxx constructs from long
// only, so 64-bit values go through explicit splitting that does not assume
// sizeof(long) == 8.

#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace octarep {

inline mpz_class to_mpz(long long v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    if (v < 0) {
        // mpz_import reads the two's-complement bits as unsigned; fix up.
        mpz_class shift = 1;
        shift <<= 8 * sizeof(v);
        out -= shift;
    }
    return out;
}

inline long long to_ll(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("to_ll: value exceeds long long");
    return static_cast<long long>(v.get_si());
}

}  // namespace octarep
