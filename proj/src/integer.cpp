#include "confcoh/integer.hpp"

#include "confcoh/errors.hpp"

namespace confcoh {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    Integer r;
    Integer top = n;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

std::int64_t to_int64(const Integer& x) {
    if (!x.fits_slong_p()) throw Error("integer " + x.get_str() + " does not fit in 64 bits");
    return x.get_si();
}

}  // namespace confcoh
