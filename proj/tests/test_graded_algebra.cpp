#include "doctest.h"

#include "ivmq/errors.hpp"
#include "ivmq/graded_algebra.hpp"

using namespace ivmq;

namespace {
const GroundField F2 = GroundField::f2();
const GroundField QQ = GroundField::rationals();
} // namespace

TEST_CASE("shuffle signs") {
    CHECK(shuffle_sign({1}, {2}) == 1);
    CHECK(shuffle_sign({2}, {1}) == -1);
    CHECK(shuffle_sign({1, 3}, {2}) == -1);
    CHECK(shuffle_sign({}, {1, 2, 3}) == 1);
    CHECK_THROWS_AS(shuffle_sign({1}, {1}), math_error);
}

TEST_CASE("exterior algebra on one generator over F2") {
    StandardModel m = model_torus(1, F2);
    CHECK(m.algebra->dim() == 2);
    AlgElem a = m.algebra->basis_elem(1);
    CHECK(m.algebra->is_zero(m.algebra->mul(a, a)));
}

TEST_CASE("QH*(S^2): h*h = T, grading mod 4") {
    StandardModel s = model_qh_sphere(F2);
    const auto& A = s.algebra;
    CHECK(A->modulus() == 4);
    AlgElem h = A->basis_elem(1);
    AlgElem h2 = A->mul(h, h);
    CHECK(h2[0] == NovikovScalar::monomial(F2, 1, 1));
    CHECK(h2[1].is_zero());
    // h^3 = T h, nonzero
    AlgElem h3 = A->mul(h2, h);
    CHECK(h3[1] == NovikovScalar::monomial(F2, 1, 1));
    CHECK(!A->is_zero(h3));
}

TEST_CASE("H*(T^2;F2) matches the hand-built exterior presentation") {
    StandardModel t2 = model_torus(2, F2);
    // hand-built: basis 1,a,b,ab with a*b=ab, a*a=b*b=0
    GradedAlgebra::Spec spec;
    auto one = NovikovScalar::one(F2);
    spec.emplace_back(0, 0, 0, one);
    spec.emplace_back(0, 1, 1, one);
    spec.emplace_back(1, 0, 1, one);
    spec.emplace_back(0, 2, 2, one);
    spec.emplace_back(2, 0, 2, one);
    spec.emplace_back(0, 3, 3, one);
    spec.emplace_back(3, 0, 3, one);
    spec.emplace_back(1, 2, 3, one);
    spec.emplace_back(2, 1, 3, one);
    spec.emplace_back(1, 3, 3, NovikovScalar::zero(F2));
    auto hand = GradedAlgebra::build(F2, 0, {{"1", 0}, {"a", 1}, {"b", 1}, {"ab", 2}}, 0, spec);
    CHECK(hand->dim() == t2.algebra->dim());
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            CHECK(hand->mul(hand->basis_elem(i), hand->basis_elem(j)) ==
                  t2.algebra->mul(t2.algebra->basis_elem(i), t2.algebra->basis_elem(j)));
}

TEST_CASE("invariant violations are rejected with the offending elements") {
    auto one = NovikovScalar::one(F2);
    // a*a = 1 breaks degree additivity (deg 2 product landing in degree 0)
    GradedAlgebra::Spec bad;
    bad.emplace_back(0, 0, 0, one);
    bad.emplace_back(0, 1, 1, one);
    bad.emplace_back(1, 0, 1, one);
    bad.emplace_back(1, 1, 0, one);
    CHECK_THROWS_AS(GradedAlgebra::build(F2, 0, {{"1", 0}, {"a", 1}}, 0, bad), schema_error);

    // skew-commutativity violation over Q: a*b = ab but b*a = ab as well (degree 1 elements)
    GradedAlgebra::Spec skew;
    auto oneq = NovikovScalar::one(QQ);
    skew.emplace_back(0, 0, 0, oneq);
    skew.emplace_back(0, 1, 1, oneq);
    skew.emplace_back(1, 0, 1, oneq);
    skew.emplace_back(0, 2, 2, oneq);
    skew.emplace_back(2, 0, 2, oneq);
    skew.emplace_back(0, 3, 3, oneq);
    skew.emplace_back(3, 0, 3, oneq);
    skew.emplace_back(1, 2, 3, oneq);
    skew.emplace_back(2, 1, 3, oneq); // should be -1 over Q
    CHECK_THROWS_AS(GradedAlgebra::build(QQ, 0, {{"1", 0}, {"a", 1}, {"b", 1}, {"ab", 2}}, 0, skew),
                    schema_error);
}

TEST_CASE("regrading mod 2k") {
    StandardModel s2 = model_torus(2, F2); // placeholder Z-graded algebra: H*(T^2)
    // regrade H*(S^2)-like algebra: use CP^1
    StandardModel cp1 = model_cpn(1, F2);
    AlgebraPtr r = regrade_mod(cp1.algebra, 4);
    CHECK(r->modulus() == 4);
    CHECK(r->degree_of(1) == 2);
    // mod 0 is the identity
    CHECK(regrade_mod(cp1.algebra, 0) == cp1.algebra);
    // products unchanged
    CHECK(r->mul(r->basis_elem(1), r->basis_elem(1)) == cp1.algebra->mul(cp1.algebra->basis_elem(1), cp1.algebra->basis_elem(1)));
    CHECK_THROWS_AS(regrade_mod(r, 4), schema_error);
    CHECK_THROWS_AS(regrade_mod(s2.algebra, 3), schema_error);

    // regrade H*(T^3;F2) mod 2: component dims (1+3, 3+1)
    AlgebraPtr t3 = regrade_mod(model_torus(3, F2).algebra, 2);
    CHECK(t3->basis_of_degree(0).size() == 4);
    CHECK(t3->basis_of_degree(1).size() == 4);
}

TEST_CASE("Kunneth tensor products") {
    StandardModel t1a = model_torus(1, F2, {"a"});
    StandardModel t1b = model_torus(1, F2, {"b"});
    AlgebraPtr prod = tensor_kunneth(t1a.algebra, t1b.algebra);
    StandardModel t2 = model_torus(2, F2);
    CHECK(prod->dim() == 4);
    // compare structure constants through the index correspondence
    // tensor basis order: (1,1),(1,b),(a,1),(a,b); torus(2) order: 1, dx1, dx2, dx1^dx2
    auto reindex = [](size_t t) { return std::vector<size_t>{0, 2, 1, 3}[t]; };
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            AlgElem got = prod->mul(prod->basis_elem(reindex(i)), prod->basis_elem(reindex(j)));
            AlgElem want = t2.algebra->mul(t2.algebra->basis_elem(i), t2.algebra->basis_elem(j));
            AlgElem got_re(4, NovikovScalar::zero(F2));
            for (size_t k = 0; k < 4; ++k) got_re[k] = got[reindex(k)];
            CHECK(got_re == want);
        }

    // tensor with the ground field is the identity
    StandardModel pt = model_torus(0, F2);
    AlgebraPtr same = tensor_kunneth(t2.algebra, pt.algebra);
    CHECK(same->dim() == t2.algebra->dim());

    // moduli: Z-graded tensor mod-4 gives mod-4
    StandardModel qs = model_qh_sphere(F2);
    AlgebraPtr mixed = tensor_kunneth(model_qh_torus(2, F2).algebra, qs.algebra);
    CHECK(mixed->modulus() == 4);
    CHECK(mixed->coefficient_ring() == CoefficientRing::NovikovField);
}

TEST_CASE("QH*(T^2n) (x) QH*(S^2): (a (x) h)(b (x) h) = T ab (x) 1 over F2") {
    StandardModel qt = model_qh_torus(2, F2);
    StandardModel qs = model_qh_sphere(F2);
    AlgebraPtr M = tensor_kunneth(qt.algebra, qs.algebra);
    size_t dp = 1, dq = 2; // exterior basis masks for dp1, dq1
    AlgElem ah = M->basis_elem(tensor_index(qt.algebra, qs.algebra, dp, 1));
    AlgElem bh = M->basis_elem(tensor_index(qt.algebra, qs.algebra, dq, 1));
    AlgElem prod = M->mul(ah, bh);
    size_t expect_idx = tensor_index(qt.algebra, qs.algebra, 3, 0); // dp1^dq1 (x) 1
    CHECK(prod[expect_idx] == NovikovScalar::monomial(F2, 1, 1));
}

TEST_CASE("Kunneth swap is an isomorphism via the signed swap map") {
    for (const GroundField& f : {F2, QQ}) {
        StandardModel a = model_torus(1, f, {"a"});
        StandardModel b = model_torus(2, f, {"b1", "b2"});
        AlgebraPtr ab = tensor_kunneth(a.algebra, b.algebra);
        AlgebraPtr ba = tensor_kunneth(b.algebra, a.algebra);
        // swap map a(x)b -> (-1)^{|a||b|} b(x)a as a matrix
        ScalarMatrix swap(ab->dim(), ba->dim(), f);
        for (size_t i = 0; i < a.algebra->dim(); ++i)
            for (size_t j = 0; j < b.algebra->dim(); ++j) {
                long sign = (a.algebra->degree_of(i) % 2 != 0 && b.algebra->degree_of(j) % 2 != 0) ? -1 : 1;
                swap.at(tensor_index(a.algebra, b.algebra, i, j), tensor_index(b.algebra, a.algebra, j, i)) =
                    NovikovScalar::constant(f, sign);
            }
        AlgebraMorphism phi{ab, ba, swap};
        phi.validate(); // multiplicative, unital, degree zero
    }
}

TEST_CASE("standard models: CP^n and tori") {
    StandardModel cp2 = model_cpn(2, F2);
    CHECK(cp2.algebra->dim() == 3);
    for (long d : {0L, 2L, 4L}) CHECK(cp2.algebra->basis_of_degree(d).size() == 1);
    AlgElem h = cp2.algebra->basis_elem(1);
    AlgElem h3 = cp2.algebra->mul(cp2.algebra->mul(h, h), h);
    CHECK(cp2.algebra->is_zero(h3)); // h^3 = 0

    StandardModel t3 = model_torus(3, F2);
    CHECK(t3.algebra->dim() == 8);
    long expect[] = {1, 3, 3, 1};
    for (long d = 0; d <= 3; ++d) CHECK(t3.algebra->basis_of_degree(d).size() == static_cast<size_t>(expect[d]));
}
