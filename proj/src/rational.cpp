#include "ivmq/rational.hpp"

#include "ivmq/errors.hpp"

namespace ivmq {

Rational make_rational(long num, long den) {
    if (den == 0) throw math_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw schema_error("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw schema_error("malformed rational literal: " + s);
    }
    try {
        Rational r(s);
        if (r.get_den() == 0) throw schema_error("zero denominator in rational: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw schema_error("malformed rational literal: " + s);
    }
}

std::string rational_str(const Rational& r) { return r.get_str(); }

long rational_to_long(const Rational& r) {
    if (!is_integer(r)) throw math_error("rational is not an integer: " + rational_str(r));
    if (!r.get_num().fits_slong_p()) throw math_error("integer out of range: " + rational_str(r));
    return r.get_num().get_si();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

mpz_class lcm_denominator(const mpz_class& acc, const Rational& r) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), r.get_den().get_mpz_t());
    return out;
}

bool ext_less(const ExtRational& a, const ExtRational& b) {
    if (!a) return false;           // +inf < x never
    if (!b) return true;            // finite < +inf
    return *a < *b;
}

ExtRational ext_min(const ExtRational& a, const ExtRational& b) { return ext_less(b, a) ? b : a; }

std::string ext_str(const ExtRational& r) { return r ? rational_str(*r) : "+inf"; }

} // namespace ivmq
