#pragma once

#include "ivmq/field_linalg.hpp"
#include "ivmq/graded_algebra.hpp"
#include "ivmq/lambda_linalg.hpp"

#include <map>

namespace ivmq {

// A graded subspace of a GradedAlgebra in canonical form: one reduced row
// matrix per occurring degree (columns follow the basis order of that
// degree's component), so equality of subspaces is matrix equality. The
// ideal property (closure under multiplication by every basis element) is
// machine-checkable via is_ideal(); every lattice operation preserves it.
class GradedIdeal {
public:
    static GradedIdeal zero(AlgebraPtr A);
    static GradedIdeal whole(AlgebraPtr A);
    // Canonical span of homogeneous elements (throws on mixed-degree input).
    static GradedIdeal span(AlgebraPtr A, const std::vector<AlgElem>& elems);

    const AlgebraPtr& algebra() const { return A_; }
    const std::map<long, ScalarMatrix>& rows() const { return rows_; }
    size_t dim() const;
    size_t codim() const;
    bool is_zero() const { return dim() == 0; }
    bool is_whole() const;

    bool contains(const AlgElem& x) const;
    bool contains(const GradedIdeal& other) const;
    // Closure under left multiplication by every algebra basis element.
    bool is_ideal() const;

    std::vector<AlgElem> basis_elems() const;

    bool operator==(const GradedIdeal& o) const;
    bool operator!=(const GradedIdeal& o) const { return !(*this == o); }

    std::string str() const;

private:
    AlgebraPtr A_;
    std::map<long, ScalarMatrix> rows_; // canonical, no zero-row matrices

    friend GradedIdeal ideal_sum(const GradedIdeal&, const GradedIdeal&);
    friend GradedIdeal ideal_intersect(const GradedIdeal&, const GradedIdeal&);
};

// Smallest graded ideal containing the (homogeneous) generators, by span
// closure under basis multiplication to a fixed point.
GradedIdeal ideal_from_generators(const AlgebraPtr& A, const std::vector<AlgElem>& gens);

GradedIdeal ideal_sum(const GradedIdeal& I, const GradedIdeal& J);
GradedIdeal ideal_intersect(const GradedIdeal& I, const GradedIdeal& J);
// Span of pairwise products of basis elements (already an ideal in a
// skew-commutative algebra).
GradedIdeal ideal_product(const GradedIdeal& I, const GradedIdeal& J);
GradedIdeal ideal_power(const GradedIdeal& I, int d);

// Degree-wise kernel of a validated algebra morphism (automatically an ideal).
GradedIdeal kernel_of_morphism(const AlgebraMorphism& phi);

// Degree-wise kernel of a degree-0 linear map given per degree; rows of
// maps[d] are indexed by A's degree-d basis. When require_ideal is set the
// kernel is checked for closure and a model_error reports a failure
// (possible only for non-multiplicative inputs).
GradedIdeal kernel_of_linear_map(const AlgebraPtr& A, const std::map<long, ScalarMatrix>& maps,
                                 bool require_ideal = true);

struct EnumBudget {
    unsigned long max_candidates = 2'000'000;
};

enum class EnumStatus { Exact, BudgetExceeded, NotEnumerable };

struct SlashResult {
    GradedIdeal ideal;        // intersection of the enumerated ideals (contains A^{/r})
    EnumStatus status = EnumStatus::Exact;
    unsigned long candidates = 0; // graded subspaces inspected
};

// A^{/r}: the intersection of all graded ideals of codimension < r, by
// complement-side enumeration of small quotients. Exact over finite ground
// fields with field coefficients; r = 1 is exact for any algebra.
SlashResult a_slash_r(const AlgebraPtr& A, long r, const EnumBudget& budget = {});

enum class RankMode { Exact, LowerBound };

struct RankResult {
    long rank = 0;     // exact value or certified lower bound
    bool exact = false;
    EnumStatus status = EnumStatus::Exact;
    unsigned long candidates = 0;
    std::string note;
};

// d-rank of A: the maximal r with (A^{/r})^{*d} != 0. Exact mode enumerates
// A^{/r} for all r up to the answer + 1; on budget exhaustion the result
// downgrades to the last fully enumerated level.
RankResult d_rank(const AlgebraPtr& A, int d, RankMode mode = RankMode::Exact,
                  const EnumBudget& budget = {});

// Exhaustively enumerates all graded ideals and confirms that each nonzero
// one contains the designated top class (the Poincare-duality property of
// closed-manifold models).
bool verify_pd_top_class(const AlgebraPtr& A, long top_index, const EnumBudget& budget = {});

struct WitnessResult {
    AlgebraPtr tensor_algebra;
    std::vector<AlgElem> witnesses;   // 1 (x) ... (x) [X_i] (x) ... (x) 1
    AlgElem witness_product;          // the top class of the product
    long bound = 0;                   // certified: rk_d >= bound, d = #factors
    int d = 0;
    bool factors_verified_exhaustively = false;
    std::string certificate;
};

// Kunneth witnesses for rk_d(tensor of factors) >= m: each factor must be a
// Poincare-duality model of dimension >= m with a designated top class; the
// witnesses' product is the top class of the product and is checked nonzero.
// Factors small enough to enumerate are verified exhaustively, the rest are
// certified by the PD flag of the model.
WitnessResult kunneth_rank_witness(const std::vector<StandardModel>& factors, long m,
                                   const EnumBudget& budget = {});

} // namespace ivmq
