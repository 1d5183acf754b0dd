#include "bagdet/rational.hpp"

#include <stdexcept>

namespace bagdet {

Rat parse_rat(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

Rat pow_rat(const Rat& base, const Int& exp) {
    if (exp < 0)
        throw std::invalid_argument("pow_rat: negative exponent");
    if (exp == 0)
        return Rat(1); // includes 0^0 = 1
    if (!exp.fits_ulong_p())
        throw std::overflow_error("pow_rat: exponent too large");
    unsigned long e = exp.get_ui();
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    // base was canonical, so num^e / den^e already is
    return out;
}

Rat pow_rat_signed(const Rat& t, const Int& e) {
    if (e >= 0)
        return pow_rat(t, e);
    if (t == 0)
        throw std::invalid_argument("pow_rat_signed: 0 to negative power");
    Rat inv = Rat(1) / t;
    return pow_rat(inv, -e);
}

} // namespace bagdet
