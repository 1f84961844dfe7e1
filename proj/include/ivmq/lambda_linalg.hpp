#pragma once

#include "ivmq/scalar_matrix.hpp"

namespace ivmq {
namespace lambda_linalg {

// Exact linear algebra over the Novikov field Lambda for matrices whose
// entries are finite T-polynomials (infinite precision). Row spaces get a
// canonical form, so equality of subspaces is matrix equality:
// reduced row echelon over the fraction field, each row cleared to a
// primitive Puiseux-polynomial vector with unit lowest pivot coefficient.

// Canonical reduced form of the row space of M.
ScalarMatrix row_reduce(const ScalarMatrix& M);

size_t rank(const ScalarMatrix& M);

// Canonical basis of {x : x * M = 0}.
ScalarMatrix left_kernel(const ScalarMatrix& M);

bool in_row_space(const std::vector<NovikovScalar>& v, const ScalarMatrix& rows);

// Canonical basis of rowspace(A) + rowspace(B) (same column count).
ScalarMatrix sum_row_spaces(const ScalarMatrix& A, const ScalarMatrix& B);

// Canonical basis of rowspace(A) ∩ rowspace(B).
ScalarMatrix intersect_row_spaces(const ScalarMatrix& A, const ScalarMatrix& B);

ScalarMatrix stack(const ScalarMatrix& A, const ScalarMatrix& B);

} // namespace lambda_linalg
} // namespace ivmq
