#pragma once

#include "ivmq/novikov.hpp"
#include "ivmq/scalar_matrix.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ivmq {

// Sign of the unique shuffle moving the elements of `first` in front of the
// elements of `second`; the two must partition their union. Inputs are
// strictly increasing index lists.
int shuffle_sign(const std::vector<int>& first, const std::vector<int>& second);

struct AlgebraBasisElement {
    std::string label;
    long degree = 0;
};

// Which module the algebra's underlying graded vector space is over: the
// ground field itself (classical cohomology) or the Novikov field Lambda
// (quantum models). This drives ideal-enumeration feasibility; the scalar
// representation is shared.
enum class CoefficientRing { Field, NovikovField };

// Elements are dense coordinate row vectors in the basis.
using AlgElem = std::vector<NovikovScalar>;

// A finite-dimensional graded skew-commutative associative unital algebra,
// given by structure constants. All axioms are machine-checked on the basis
// at construction: degree additivity, unit laws, Koszul skew-commutativity,
// and associativity on every basis triple.
class GradedAlgebra {
public:
    struct ProductTerm {
        long k;
        NovikovScalar coeff;
    };
    using Spec = std::vector<std::tuple<long, long, long, NovikovScalar>>; // (i, j, k, coeff)

    static std::shared_ptr<const GradedAlgebra> build(
        GroundField field, long modulus, std::vector<AlgebraBasisElement> basis, long unit,
        const Spec& products, CoefficientRing coeff_ring = CoefficientRing::Field);

    const GroundField& field() const { return field_; }
    long modulus() const { return modulus_; }
    CoefficientRing coefficient_ring() const { return coeff_ring_; }
    size_t dim() const { return basis_.size(); }
    long unit_index() const { return unit_; }
    const std::vector<AlgebraBasisElement>& basis() const { return basis_; }
    long degree_of(size_t i) const { return basis_[i].degree; }
    long reduce_degree(long d) const;
    // Sorted list of degrees that actually occur.
    const std::vector<long>& degrees() const { return degrees_; }
    const std::vector<size_t>& basis_of_degree(long d) const;

    const std::vector<ProductTerm>& basis_product(size_t i, size_t j) const {
        return products_[i * basis_.size() + j];
    }

    AlgElem zero_elem() const { return AlgElem(dim(), NovikovScalar::zero(field_)); }
    AlgElem unit_elem() const;
    AlgElem basis_elem(size_t i) const;
    AlgElem add(const AlgElem& x, const AlgElem& y) const;
    AlgElem mul(const AlgElem& x, const AlgElem& y) const;
    AlgElem scale(const AlgElem& x, const NovikovScalar& c) const;
    bool is_zero(const AlgElem& x) const;
    // Degree if homogeneous, nullopt for 0; throws for mixed-degree elements.
    std::optional<long> homogeneous_degree(const AlgElem& x) const;

    long index_of_label(const std::string& label) const;
    std::string elem_str(const AlgElem& x) const;

private:
    GroundField field_;
    long modulus_ = 0;
    CoefficientRing coeff_ring_ = CoefficientRing::Field;
    std::vector<AlgebraBasisElement> basis_;
    long unit_ = 0;
    std::vector<std::vector<ProductTerm>> products_;
    std::vector<long> degrees_;
    std::map<long, std::vector<size_t>> by_degree_;

    void validate() const;
    friend std::shared_ptr<const GradedAlgebra> regrade_mod(const std::shared_ptr<const GradedAlgebra>&, long);
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Mod-2k regrading of a Z-graded algebra; 2k = 0 is the identity.
AlgebraPtr regrade_mod(const AlgebraPtr& A, long two_k);

// Graded tensor product with the Koszul sign
// (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'. Moduli must be equal or
// one factor Z-graded.
AlgebraPtr tensor_kunneth(const AlgebraPtr& A, const AlgebraPtr& B);

// Index of the basis element "a (x) b" in tensor_kunneth(A, B).
size_t tensor_index(const AlgebraPtr& A, const AlgebraPtr& B, size_t a, size_t b);

// A degree-zero unital multiplicative map between algebras, stored as a
// matrix in the bases (rows indexed by the source basis).
struct AlgebraMorphism {
    AlgebraPtr source;
    AlgebraPtr target;
    ScalarMatrix matrix;

    void validate() const; // degree 0, unital, multiplicative on basis pairs
};

// Standard models. A PD flag marks closed-oriented-manifold-style models in
// which every nonzero graded ideal contains the designated top class.
struct StandardModel {
    AlgebraPtr algebra;
    long top_class = -1;          // index of the designated top class (-1: none)
    bool poincare_duality = false;
};

// Exterior algebra H*(T^n) over the ground field; generator names default
// to dx1..dxn.
StandardModel model_torus(int n, const GroundField& f, const std::vector<std::string>& names = {});

// Truncated polynomial algebra H*(CP^n) = F[h]/(h^{n+1}).
StandardModel model_cpn(int n, const GroundField& f);

// QH*(S^2) over Lambda: basis {1, h}, grading mod 4, h*h = T*1.
StandardModel model_qh_sphere(const GroundField& f);

// QH*(T^{2n}) = H*(T^{2n}; Lambda) with the classical product (the torus is
// symplectically aspherical); generators dp1..dpn, dq1..dqn.
StandardModel model_qh_torus(int two_n, const GroundField& f);

StandardModel model_product(const std::vector<StandardModel>& factors);

} // namespace ivmq
