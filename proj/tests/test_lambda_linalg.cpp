#include "doctest.h"

#include "ivmq/lambda_linalg.hpp"

#include <random>

using namespace ivmq;
namespace la = ivmq::lambda_linalg;

namespace {

const GroundField F2 = GroundField::f2();
const GroundField QQ = GroundField::rationals();

NovikovScalar C(const GroundField& f, long v) { return NovikovScalar::constant(f, Rational(v)); }
NovikovScalar Tm(const GroundField& f, long num, long den = 1, long coeff = 1) {
    return NovikovScalar::monomial(f, Rational(coeff), make_rational(num, den));
}

ScalarMatrix from_rows(const GroundField& f, std::vector<std::vector<NovikovScalar>> rows) {
    ScalarMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

ScalarMatrix random_matrix(std::mt19937_64& rng, const GroundField& f, size_t r, size_t c) {
    ScalarMatrix m(r, c, f);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            if (rng() % 3 == 0) continue;
            long coeff = 1 + static_cast<long>(rng() % 3);
            long e = static_cast<long>(rng() % 3);
            m.at(i, j) = NovikovScalar::monomial(f, Rational(coeff), Rational(e));
            if (rng() % 2) m.at(i, j) += Tm(f, e + 1);
        }
    return m;
}

} // namespace

TEST_CASE("row reduction canonicalizes scaling by units of Lambda") {
    // (1+T, 1+T) spans the same Lambda-line as (1, 1)
    ScalarMatrix m = from_rows(QQ, {{C(QQ, 1) + Tm(QQ, 1), C(QQ, 1) + Tm(QQ, 1)}});
    ScalarMatrix r = la::row_reduce(m);
    CHECK(r.rows() == 1);
    CHECK(r.at(0, 0) == C(QQ, 1));
    CHECK(r.at(0, 1) == C(QQ, 1));

    // monomial scaling: T * e1 spans e1
    ScalarMatrix m2 = from_rows(QQ, {{Tm(QQ, 1), NovikovScalar::zero(QQ)}});
    ScalarMatrix r2 = la::row_reduce(m2);
    CHECK(r2.at(0, 0) == C(QQ, 1));
}

TEST_CASE("rank over Lambda via leading-monomial pivoting") {
    ScalarMatrix m = from_rows(QQ, {{C(QQ, 1), Tm(QQ, 1)}, {Tm(QQ, 1), Tm(QQ, 2)}});
    CHECK(la::rank(m) == 1); // second row = T * first
    ScalarMatrix id = ScalarMatrix::identity(3, F2);
    CHECK(la::rank(id) == 3);
}

TEST_CASE("canonical forms agree for differently presented equal spans") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const GroundField& f = trial % 2 ? F2 : QQ;
        ScalarMatrix m = random_matrix(rng, f, 3, 4);
        ScalarMatrix r1 = la::row_reduce(m);
        // re-present: scale rows by units/monomials and shuffle
        ScalarMatrix m2(3, 4, f);
        for (size_t i = 0; i < 3; ++i) {
            NovikovScalar u = (C(f, 1) + Tm(f, 1 + static_cast<long>(i)));
            for (size_t j = 0; j < 4; ++j) m2.at((i + 1) % 3, j) = m.at(i, j) * u;
        }
        CHECK(la::row_reduce(m2) == r1);
    }
}

TEST_CASE("left kernel annihilates and has complementary rank") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const GroundField& f = trial % 2 ? F2 : QQ;
        ScalarMatrix m = random_matrix(rng, f, 4, 3);
        ScalarMatrix k = la::left_kernel(m);
        CHECK(k.rows() + la::rank(m) == 4);
        if (k.rows() > 0) CHECK((k * m).is_zero());
    }
}

TEST_CASE("membership, sum and intersection of row spaces") {
    ScalarMatrix a = from_rows(F2, {{C(F2, 1), C(F2, 0), C(F2, 0)}, {C(F2, 0), C(F2, 1), C(F2, 0)}});
    ScalarMatrix b = from_rows(F2, {{C(F2, 0), C(F2, 1), C(F2, 1)}});
    std::vector<NovikovScalar> v = {C(F2, 1), C(F2, 1), NovikovScalar::zero(F2)};
    CHECK(la::in_row_space(v, a));
    std::vector<NovikovScalar> w = {C(F2, 0), C(F2, 0), C(F2, 1)};
    CHECK(!la::in_row_space(w, a));

    ScalarMatrix s = la::sum_row_spaces(a, b);
    CHECK(s.rows() == 3);
    ScalarMatrix i = la::intersect_row_spaces(a, b);
    CHECK(i.rows() == 0); // b's generator has a third coordinate

    // intersection of two planes in F2^3 sharing the line e2
    ScalarMatrix c = from_rows(F2, {{C(F2, 0), C(F2, 1), C(F2, 0)}, {C(F2, 0), C(F2, 0), C(F2, 1)}});
    ScalarMatrix j = la::intersect_row_spaces(a, c);
    CHECK(j.rows() == 1);
    CHECK(j.at(0, 1) == C(F2, 1));
}

TEST_CASE("lattice sanity on random spans") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const GroundField& f = trial % 2 ? F2 : QQ;
        ScalarMatrix a = la::row_reduce(random_matrix(rng, f, 2, 4));
        ScalarMatrix b = la::row_reduce(random_matrix(rng, f, 2, 4));
        ScalarMatrix meet = la::intersect_row_spaces(a, b);
        ScalarMatrix join = la::sum_row_spaces(a, b);
        // modular identity on dimensions
        CHECK(meet.rows() + join.rows() == a.rows() + b.rows());
        // idempotence and commutativity
        CHECK(la::sum_row_spaces(a, a) == a);
        CHECK(la::intersect_row_spaces(a, a) == a);
        CHECK(la::sum_row_spaces(b, a) == join);
        CHECK(la::intersect_row_spaces(b, a) == meet);
        for (size_t i = 0; i < meet.rows(); ++i) {
            std::vector<NovikovScalar> row(meet.cols(), NovikovScalar::zero(f));
            for (size_t j = 0; j < meet.cols(); ++j) row[j] = meet.at(i, j);
            CHECK(la::in_row_space(row, a));
            CHECK(la::in_row_space(row, b));
        }
    }
}
