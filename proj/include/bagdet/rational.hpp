#ifndef BAGDET_RATIONAL_HPP
#define BAGDET_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bagdet {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

/// Reduced rational with positive denominator. mpq_class does not canonicalize
/// on construction from numerator/denominator, so go through here.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// "n" for integers, "num/den" otherwise; exact round-trip with parse_rat.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& text);

inline Int pow_int(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

/// base^exp for natural exp, with 0^0 = 1.
Rat pow_rat(const Rat& base, const Int& exp);

/// t^e for integer e of either sign; requires t != 0 when e < 0.
Rat pow_rat_signed(const Rat& t, const Int& e);

inline Int lcm_int(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

} // namespace bagdet

#endif
