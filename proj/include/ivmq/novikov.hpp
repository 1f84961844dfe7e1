#pragma once

#include "ivmq/ground_field.hpp"
#include "ivmq/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ivmq {

struct NovikovTerm {
    Rational exponent;
    Rational coeff; // nonzero in the ground field
};

// A truncated formal series sum c_i T^{e_i} with exact rational exponents in
// strictly increasing order, over a configurable ground field. `precision`
// is an exponent cutoff: the element is known in Lambda_{[*, precision)} and
// all stored exponents are < precision. nullopt means the series is exact.
class NovikovScalar {
public:
    NovikovScalar() = default;

    static NovikovScalar zero(const GroundField& f, ExtRational precision = std::nullopt);
    static NovikovScalar one(const GroundField& f);
    static NovikovScalar constant(const GroundField& f, const Rational& c);
    static NovikovScalar monomial(const GroundField& f, const Rational& c, const Rational& exponent);
    static NovikovScalar from_terms(const GroundField& f, std::vector<NovikovTerm> terms,
                                    ExtRational precision = std::nullopt);

    const GroundField& field() const { return field_; }
    const std::vector<NovikovTerm>& terms() const { return terms_; }
    const ExtRational& precision() const { return precision_; }

    // No visible terms (zero up to the stored precision).
    bool is_zero() const { return terms_.empty(); }
    // Zero as an exact element of Lambda.
    bool is_exact_zero() const { return terms_.empty() && !precision_; }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1 && !precision_; }
    // Membership in the Novikov ring Lambda_{>=0}.
    bool in_nonnegative_part() const;

    // Leading exponent; nullopt encodes +inf (exact zero). Throws math_error
    // ("indeterminate") when all terms cancel below a finite precision.
    ExtRational valuation() const;
    const Rational& leading_coeff() const;

    NovikovScalar operator-() const;
    NovikovScalar operator+(const NovikovScalar& o) const;
    NovikovScalar operator-(const NovikovScalar& o) const;
    NovikovScalar operator*(const NovikovScalar& o) const;
    NovikovScalar& operator+=(const NovikovScalar& o) { return *this = *this + o; }
    NovikovScalar scaled(const Rational& c) const;

    // Geometric-series inverse. The working precision defaults to this
    // element's precision; it must be finite unless the element is a
    // monomial (whose inverse is exact). Non-monomials need valuation >= 0,
    // and the result's precision is (working precision - valuation) so that
    // inverse * original is the identity at the result's precision.
    NovikovScalar inverse(ExtRational working_precision = std::nullopt) const;

    // Image in * tensor Lambda_{[0,r)}: drops terms with exponent >= r and
    // lowers the precision to min(precision, r). Requires r > 0.
    NovikovScalar truncated(const Rational& r) const;

    bool operator==(const NovikovScalar& o) const;
    bool operator!=(const NovikovScalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    GroundField field_;
    std::vector<NovikovTerm> terms_;
    ExtRational precision_;

    void normalize();
};

// Lambda_{[a,b)} = Lambda_{>=a} / Lambda_{>=b}; b = nullopt gives Lambda_{>=a}.
struct IntervalModule {
    Rational lower;
    ExtRational upper;

    IntervalModule(Rational a, ExtRational b);
    bool contains_valuation(const ExtRational& v) const;
    // Representative of the image of x: keeps terms with exponent in [a,b).
    NovikovScalar reduce(const NovikovScalar& x) const;
};

} // namespace ivmq
