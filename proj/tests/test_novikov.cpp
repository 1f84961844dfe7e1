#include "doctest.h"

#include "ivmq/errors.hpp"
#include "ivmq/novikov.hpp"
#include "ivmq/scalar_matrix.hpp"

#include <map>
#include <random>

using namespace ivmq;

namespace {

const GroundField F2 = GroundField::f2();
const GroundField QQ = GroundField::rationals();

NovikovScalar T(const GroundField& f, long num, long den = 1, long coeff = 1) {
    return NovikovScalar::monomial(f, Rational(coeff), make_rational(num, den));
}

// Independent oracle: naive exponent-indexed convolution of two term lists.
std::map<Rational, Rational> convolve(const GroundField& f, const NovikovScalar& x,
                                      const NovikovScalar& y) {
    std::map<Rational, Rational> acc;
    for (const auto& a : x.terms())
        for (const auto& b : y.terms()) acc[a.exponent + b.exponent] += a.coeff * b.coeff;
    for (auto it = acc.begin(); it != acc.end();) {
        it->second = f.reduce(it->second);
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
    }
    return acc;
}

NovikovScalar random_scalar(std::mt19937_64& rng, const GroundField& f, bool nonneg = false) {
    std::vector<NovikovTerm> terms;
    size_t n = rng() % 5;
    for (size_t i = 0; i < n; ++i) {
        long num = static_cast<long>(rng() % 9) - (nonneg ? 0 : 4);
        long den = 1 + static_cast<long>(rng() % 3);
        long c = 1 + static_cast<long>(rng() % 6);
        terms.push_back({make_rational(num, den), Rational(c)});
    }
    return NovikovScalar::from_terms(f, std::move(terms));
}

} // namespace

TEST_CASE("valuation basics") {
    CHECK(!NovikovScalar::zero(F2).valuation().has_value()); // +inf
    NovikovScalar x = T(QQ, 1, 2) + T(QQ, 2);
    CHECK(*x.valuation() == make_rational(1, 2));

    // truncated zero has an unresolved leading term
    NovikovScalar tz = NovikovScalar::zero(F2, Rational(3));
    CHECK_THROWS_AS(tz.valuation(), math_error);
}

TEST_CASE("valuation is additive over a field ground field") {
    NovikovScalar x = NovikovScalar::constant(QQ, 1) + T(QQ, 1);          // 1 + T
    NovikovScalar y = NovikovScalar::constant(QQ, 2) + T(QQ, 1, 3);       // 2 + T^{1/3}
    NovikovScalar p = x * y;
    auto oracle = convolve(QQ, x, y);
    CHECK(oracle.begin()->first == 0);                                    // oracle: leading exponent 0
    CHECK(*p.valuation() == 0);
    CHECK(*p.valuation() == *x.valuation() + *y.valuation());
    // full product against the oracle
    CHECK(p.terms().size() == oracle.size());
    for (const auto& t : p.terms()) CHECK(oracle.at(t.exponent) == t.coeff);
}

TEST_CASE("ultrametric inequality for valuations") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const GroundField& f = trial % 2 ? F2 : QQ;
        NovikovScalar x = random_scalar(rng, f), y = random_scalar(rng, f);
        NovikovScalar s = x + y;
        ExtRational vx = x.valuation(), vy = y.valuation(), vs = s.valuation();
        CHECK(!ext_less(vs, ext_min(vx, vy)));
        if (vx != vy) CHECK(vs == ext_min(vx, vy));
    }
}

TEST_CASE("arithmetic identities") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        NovikovScalar x = random_scalar(rng, F2);
        CHECK(NovikovScalar::one(F2) * x == x);
    }
    CHECK(T(F2, 1) * T(F2, 1) == T(F2, 2)); // T * T = T^2
}

TEST_CASE("geometric series inversion") {
    // over F2, (1+T)^{-1} at precision 3 is 1 + T + T^2
    NovikovScalar x = NovikovScalar::constant(F2, 1) + T(F2, 1);
    NovikovScalar inv = x.inverse(Rational(3));
    NovikovScalar expected =
        NovikovScalar::from_terms(F2, {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(2), Rational(1)}},
                                  Rational(3));
    CHECK(inv == expected);
    // multiply back: congruent to 1 below the working precision
    NovikovScalar back = (inv * x);
    CHECK(back == NovikovScalar::one(F2).truncated(Rational(3)));

    CHECK_THROWS_AS(NovikovScalar::zero(F2).inverse(Rational(2)), math_error);
    CHECK_THROWS_AS(NovikovScalar::zero(F2, Rational(1)).inverse(Rational(2)), math_error);
    // monomial inverse is exact
    CHECK(T(QQ, 3, 2).inverse() == T(QQ, -3, 2));
}

TEST_CASE("inverse times original is one at working precision") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const GroundField& f = trial % 2 ? F2 : QQ;
        NovikovScalar x = random_scalar(rng, f, /*nonneg=*/true);
        if (x.is_zero()) continue;
        Rational prec(5);
        if (!(*x.valuation() < prec)) continue;
        NovikovScalar inv = x.inverse(prec);
        NovikovScalar prod = inv * x;
        Rational cut = *prod.precision();
        CHECK(prod == NovikovScalar::one(f).truncated(cut));
        ++checked;
    }
    CHECK(checked > 50);

    // series inversion at negative valuation is out of contract
    NovikovScalar bad = T(QQ, -1) + NovikovScalar::one(QQ);
    CHECK_THROWS_AS(bad.inverse(Rational(3)), math_error);
}

TEST_CASE("truncation") {
    CHECK(T(F2, 6, 5).truncated(Rational(1)).is_zero());
    NovikovScalar x = NovikovScalar::constant(F2, 1) + T(F2, 1, 2);
    NovikovScalar tx = x.truncated(Rational(1));
    CHECK(tx.terms().size() == 2);
    CHECK(*tx.precision() == 1);

    // tower property on random scalars
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        NovikovScalar y = random_scalar(rng, trial % 2 ? F2 : QQ);
        CHECK(y.truncated(Rational(2)).truncated(Rational(1)) == y.truncated(Rational(1)));
    }
}

TEST_CASE("truncation is an algebra map on the nonnegative part") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const GroundField& f = trial % 2 ? F2 : QQ;
        NovikovScalar x = random_scalar(rng, f, /*nonneg=*/true);
        NovikovScalar y = random_scalar(rng, f, /*nonneg=*/true);
        Rational r = make_rational(1 + static_cast<long>(rng() % 4));
        CHECK((x * y).truncated(r) == (x.truncated(r) * y.truncated(r)).truncated(r));
    }
}

TEST_CASE("interval modules") {
    CHECK_THROWS_AS(IntervalModule(Rational(2), Rational(1)), schema_error);
    IntervalModule m(Rational(0), Rational(2)); // Lambda_{[0,2)}
    NovikovScalar x = T(QQ, 1) + T(QQ, 3);
    NovikovScalar red = m.reduce(x);
    CHECK(red.terms().size() == 1);
    CHECK(red.terms()[0].exponent == 1);
    IntervalModule nonneg(Rational(0), std::nullopt); // Lambda_{>=0}
    CHECK(nonneg.contains_valuation(Rational(1)));
    CHECK(!nonneg.contains_valuation(make_rational(-1, 2)));
}

namespace {

ModuleRay lambda_ray_times_Tc(const GroundField& f, const Rational& c, size_t stages, RayTail tail) {
    ModuleRay ray;
    BasedModule lam{f, 0, {{"x", 0}}};
    for (size_t i = 0; i < stages; ++i) ray.modules.push_back(lam);
    for (size_t i = 0; i + 1 < stages; ++i) {
        ScalarMatrix m(1, 1, f);
        m.at(0, 0) = NovikovScalar::monomial(f, 1, c);
        ray.maps.push_back(m);
    }
    ray.tail = tail;
    ray.contraction = c;
    return ray;
}

} // namespace

TEST_CASE("completed colimit of a constant ray is the module itself") {
    ModuleRay ray;
    BasedModule m{F2, 0, {{"a", 0}, {"b", 1}}};
    ray.modules = {m, m, m};
    ray.maps = {ScalarMatrix::identity(2, F2), ScalarMatrix::identity(2, F2)};
    ray.tail = RayTail::Stabilized;
    ColimitResult res = completed_colimit(ray, Rational(10));
    CHECK(res.module.dim() == 2);
}

TEST_CASE("Lambda-hat vanishes: multiply-by-T ray") {
    ModuleRay ray = lambda_ray_times_Tc(F2, Rational(1), 4, RayTail::Contracting);
    for (long prec : {5L, 10L, 20L}) {
        ColimitResult res = completed_colimit(ray, Rational(prec));
        CHECK(res.module.dim() == 0);
    }
    // mis-tagged contraction is rejected
    ModuleRay bad = lambda_ray_times_Tc(F2, Rational(1), 3, RayTail::Contracting);
    bad.contraction = Rational(2);
    CHECK_THROWS_AS(completed_colimit(bad, Rational(5)), model_error);
}

TEST_CASE("elements with T^c-factoring images die in the completion") {
    ModuleRay ray = lambda_ray_times_Tc(QQ, Rational(1), 5, RayTail::Contracting);
    std::vector<NovikovScalar> x = {NovikovScalar::one(QQ)};
    CHECK(dies_in_completion(ray, x));

    ModuleRay stable;
    BasedModule m{QQ, 0, {{"x", 0}}};
    stable.modules = {m, m};
    stable.maps = {ScalarMatrix::identity(1, QQ)};
    stable.tail = RayTail::Stabilized;
    CHECK(!dies_in_completion(stable, x));

    ModuleRay unknown = lambda_ray_times_Tc(QQ, Rational(1), 3, RayTail::Unknown);
    CHECK_THROWS_AS(completed_colimit(unknown, Rational(5)), model_error);
}
