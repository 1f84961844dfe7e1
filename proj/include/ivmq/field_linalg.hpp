#pragma once

#include "ivmq/ground_field.hpp"

#include <cstdint>
#include <vector>

namespace ivmq {

// Dense matrices over the ground field for the cubical cohomology kernels
// and the graded-ideal enumeration. Rows over F2 are bit-packed; other
// fields use exact Rational entries. Row-vector convention throughout.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(size_t rows, size_t cols, const GroundField& f);

    static FieldMatrix identity(size_t n, const GroundField& f);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const GroundField& field() const { return field_; }

    Rational get(size_t i, size_t j) const;
    void set(size_t i, size_t j, const Rational& v);
    void add_to(size_t i, size_t j, const Rational& v);

    void append_row();
    void append_row_of(const FieldMatrix& src, size_t i);

    bool row_is_zero(size_t i) const;
    bool is_zero() const;

    FieldMatrix operator*(const FieldMatrix& o) const;

    // In-place reduced row echelon form; returns the rank. Zero rows are
    // moved to the bottom (and dropped if compact is true).
    size_t rref(bool compact = true);
    size_t rank() const;

    // Canonical basis of {x : x * M = 0}.
    FieldMatrix left_kernel() const;

    // Reduce v against the rows of an rref matrix (in place).
    void reduce_vector(std::vector<Rational>& v) const;
    bool in_row_space(const std::vector<Rational>& v) const;

    bool operator==(const FieldMatrix& o) const;

private:
    size_t rows_ = 0, cols_ = 0, words_ = 0;
    GroundField field_;
    bool packed_ = false;             // F2 bit-packed representation
    std::vector<uint64_t> bits_;      // packed rows
    std::vector<Rational> vals_;      // generic rows
    std::vector<size_t> pivots_;      // pivot columns after rref

    friend class FieldRref;
};

} // namespace ivmq
