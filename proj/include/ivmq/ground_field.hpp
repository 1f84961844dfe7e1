#pragma once

#include "ivmq/rational.hpp"

#include <string>

namespace ivmq {

enum class FieldKind { F2, Fp, Q };

// The coefficient field F of the Novikov ring. Elements are carried as
// Rational values; over Fp they are kept reduced to integers in [0, p).
struct GroundField {
    FieldKind kind = FieldKind::F2;
    long p = 2;

    static GroundField f2() { return {FieldKind::F2, 2}; }
    static GroundField fp(long p);
    static GroundField rationals() { return {FieldKind::Q, 0}; }

    bool finite() const { return kind != FieldKind::Q; }
    long characteristic() const { return finite() ? p : 0; }

    // Canonical representative of r in the field.
    Rational reduce(const Rational& r) const;
    Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
    Rational neg(const Rational& a) const { return reduce(-a); }
    Rational inv(const Rational& a) const;
    bool is_zero(const Rational& a) const { return reduce(a) == 0; }

    bool operator==(const GroundField& o) const { return kind == o.kind && (kind == FieldKind::Q || p == o.p); }
    bool operator!=(const GroundField& o) const { return !(*this == o); }

    std::string str() const;
};

bool is_prime(long n);

} // namespace ivmq
