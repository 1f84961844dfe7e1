#include "ivmq/ground_field.hpp"

#include "ivmq/errors.hpp"

namespace ivmq {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

GroundField GroundField::fp(long p) {
    if (!is_prime(p)) throw schema_error("Fp requires a prime, got " + std::to_string(p));
    return {p == 2 ? FieldKind::F2 : FieldKind::Fp, p};
}

Rational GroundField::reduce(const Rational& r) const {
    if (kind == FieldKind::Q) return r;
    // num/den mod p with den invertible
    mpz_class pz(p);
    mpz_class den_mod = r.get_den() % pz;
    if (den_mod < 0) den_mod += pz;
    if (den_mod == 0) throw math_error("denominator not invertible mod " + std::to_string(p));
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw math_error("denominator not invertible mod " + std::to_string(p));
    mpz_class num_mod = r.get_num() % pz;
    if (num_mod < 0) num_mod += pz;
    mpz_class v = (num_mod * den_inv) % pz;
    return Rational(v);
}

Rational GroundField::inv(const Rational& a) const {
    Rational r = reduce(a);
    if (r == 0) throw math_error("inverse of zero field element");
    if (kind == FieldKind::Q) return 1 / r;
    mpz_class pz(p), inv;
    mpz_class v = r.get_num() % pz;
    if (v < 0) v += pz;
    if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw math_error("element not invertible mod " + std::to_string(p));
    return Rational(inv);
}

std::string GroundField::str() const {
    switch (kind) {
        case FieldKind::F2: return "F2";
        case FieldKind::Fp: return "F" + std::to_string(p);
        case FieldKind::Q: return "Q";
    }
    return "?";
}

} // namespace ivmq
