#include "ivmq/novikov.hpp"

#include "ivmq/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ivmq {

void NovikovScalar::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const NovikovTerm& a, const NovikovTerm& b) { return a.exponent < b.exponent; });
    std::vector<NovikovTerm> out;
    for (const auto& t : terms_) {
        Rational c = field_.reduce(t.coeff);
        if (c == 0) continue;
        if (precision_ && !(t.exponent < *precision_)) continue;
        if (!out.empty() && out.back().exponent == t.exponent) {
            out.back().coeff = field_.add(out.back().coeff, c);
            if (out.back().coeff == 0) out.pop_back();
        } else {
            out.push_back({t.exponent, c});
        }
    }
    terms_ = std::move(out);
}

NovikovScalar NovikovScalar::zero(const GroundField& f, ExtRational precision) {
    NovikovScalar s;
    s.field_ = f;
    s.precision_ = std::move(precision);
    return s;
}

NovikovScalar NovikovScalar::one(const GroundField& f) { return constant(f, 1); }

NovikovScalar NovikovScalar::constant(const GroundField& f, const Rational& c) {
    return monomial(f, c, Rational(0));
}

NovikovScalar NovikovScalar::monomial(const GroundField& f, const Rational& c, const Rational& exponent) {
    NovikovScalar s;
    s.field_ = f;
    s.terms_ = {{exponent, c}};
    s.normalize();
    return s;
}

NovikovScalar NovikovScalar::from_terms(const GroundField& f, std::vector<NovikovTerm> terms,
                                        ExtRational precision) {
    NovikovScalar s;
    s.field_ = f;
    s.terms_ = std::move(terms);
    s.precision_ = std::move(precision);
    s.normalize();
    return s;
}

bool NovikovScalar::is_one() const {
    return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coeff == 1 && !precision_;
}

bool NovikovScalar::in_nonnegative_part() const {
    for (const auto& t : terms_)
        if (t.exponent < 0) return false;
    return true;
}

ExtRational NovikovScalar::valuation() const {
    if (!terms_.empty()) return terms_.front().exponent;
    if (precision_)
        throw math_error("indeterminate valuation: zero below finite precision " + ext_str(precision_));
    return std::nullopt;
}

const Rational& NovikovScalar::leading_coeff() const {
    if (terms_.empty()) throw math_error("leading coefficient of zero");
    return terms_.front().coeff;
}

static void require_same_field(const GroundField& a, const GroundField& b) {
    if (a != b) throw math_error("mixing scalars over " + a.str() + " and " + b.str());
}

NovikovScalar NovikovScalar::operator-() const {
    NovikovScalar s = *this;
    for (auto& t : s.terms_) t.coeff = field_.neg(t.coeff);
    return s;
}

NovikovScalar NovikovScalar::operator+(const NovikovScalar& o) const {
    require_same_field(field_, o.field_);
    std::vector<NovikovTerm> terms = terms_;
    terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(field_, std::move(terms), ext_min(precision_, o.precision_));
}

NovikovScalar NovikovScalar::operator-(const NovikovScalar& o) const { return *this + (-o); }

NovikovScalar NovikovScalar::operator*(const NovikovScalar& o) const {
    require_same_field(field_, o.field_);
    ExtRational prec = ext_min(precision_, o.precision_);
    std::map<Rational, Rational> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Rational e = a.exponent + b.exponent;
            if (prec && !(e < *prec)) continue;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, field_.mul(a.coeff, b.coeff));
            else
                it->second = field_.add(it->second, field_.mul(a.coeff, b.coeff));
        }
    std::vector<NovikovTerm> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc) terms.push_back({e, c});
    return from_terms(field_, std::move(terms), std::move(prec));
}

NovikovScalar NovikovScalar::scaled(const Rational& c) const {
    NovikovScalar s = *this;
    for (auto& t : s.terms_) t.coeff = field_.mul(t.coeff, c);
    s.normalize();
    return s;
}

NovikovScalar NovikovScalar::inverse(ExtRational working_precision) const {
    if (terms_.empty()) {
        if (precision_) throw math_error("inverting an element with unresolved leading term");
        throw math_error("inverting zero");
    }
    ExtRational target = ext_min(working_precision, precision_);
    const Rational a = terms_.front().exponent;
    const Rational c = terms_.front().coeff;
    Rational cinv = field_.inv(c);
    if (terms_.size() == 1) {
        NovikovScalar out = monomial(field_, cinv, -a);
        if (target) {
            // result exponents must stay below the working precision
            out.precision_ = target;
            out.normalize();
        }
        return out;
    }
    if (!target) throw math_error("inverting a non-monomial requires a finite working precision");
    if (a < 0)
        throw math_error("series inversion needs valuation >= 0; factor the leading monomial first");
    // x = c T^a (1 + u), nu(u) > 0; x^{-1} = c^{-1} T^{-a} sum_k (-u)^k.
    // Summing the series below `target` makes x * result congruent to 1
    // below target, so the result is trusted below target - a.
    Rational result_prec = *target - a;
    if (!(result_prec > 0))
        throw math_error("working precision too small to resolve the inverse");
    Rational series_cut = *target;
    NovikovScalar lead_inv = monomial(field_, cinv, -a);
    NovikovScalar u = (*this * lead_inv) - one(field_);
    NovikovScalar sum = one(field_);
    NovikovScalar pow = one(field_);
    NovikovScalar neg_u = -u;
    Rational uval = *neg_u.valuation();
    Rational val_acc(0);
    while (true) {
        val_acc += uval;
        if (!(val_acc < series_cut)) break;
        pow = (pow * neg_u).truncated(series_cut);
        if (pow.is_zero()) break;
        sum = sum + pow;
    }
    std::vector<NovikovTerm> shifted;
    for (const auto& t : sum.terms()) shifted.push_back({t.exponent - a, field_.mul(t.coeff, cinv)});
    return from_terms(field_, std::move(shifted), result_prec);
}

NovikovScalar NovikovScalar::truncated(const Rational& r) const {
    if (!(r > 0)) throw math_error("truncation cutoff must be positive");
    NovikovScalar s = *this;
    s.precision_ = ext_min(precision_, ExtRational(r));
    s.normalize();
    return s;
}

bool NovikovScalar::operator==(const NovikovScalar& o) const {
    if (field_ != o.field_ || precision_ != o.precision_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exponent != o.terms_[i].exponent || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::string NovikovScalar::str() const {
    std::ostringstream os;
    if (terms_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            if (t.exponent == 0) {
                os << rational_str(t.coeff);
            } else {
                if (t.coeff != 1) os << rational_str(t.coeff) << "*";
                os << "T^" << rational_str(t.exponent);
            }
        }
    }
    if (precision_) os << " + O(T^" << rational_str(*precision_) << ")";
    return os.str();
}

IntervalModule::IntervalModule(Rational a, ExtRational b) : lower(std::move(a)), upper(std::move(b)) {
    if (upper && !(lower < *upper)) throw schema_error("interval module requires a < b");
}

bool IntervalModule::contains_valuation(const ExtRational& v) const {
    if (!v) return upper.has_value();      // +inf lies in [a, b) only as the zero class when b finite
    return !(*v < lower) && (!upper || *v < *upper);
}

NovikovScalar IntervalModule::reduce(const NovikovScalar& x) const {
    std::vector<NovikovTerm> keep;
    for (const auto& t : x.terms())
        if (!(t.exponent < lower) && (!upper || t.exponent < *upper)) keep.push_back(t);
    return NovikovScalar::from_terms(x.field(), std::move(keep), ext_min(x.precision(), upper));
}

} // namespace ivmq
