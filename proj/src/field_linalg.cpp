#include "ivmq/field_linalg.hpp"

#include "ivmq/errors.hpp"

#include <algorithm>

namespace ivmq {

FieldMatrix::FieldMatrix(size_t rows, size_t cols, const GroundField& f)
    : rows_(rows), cols_(cols), field_(f), packed_(f.kind == FieldKind::F2) {
    if (packed_) {
        words_ = (cols + 63) / 64;
        bits_.assign(rows * words_, 0);
    } else {
        vals_.assign(rows * cols, Rational(0));
    }
}

FieldMatrix FieldMatrix::identity(size_t n, const GroundField& f) {
    FieldMatrix m(n, n, f);
    for (size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

Rational FieldMatrix::get(size_t i, size_t j) const {
    if (packed_) return Rational((bits_[i * words_ + j / 64] >> (j % 64)) & 1u);
    return vals_[i * cols_ + j];
}

void FieldMatrix::set(size_t i, size_t j, const Rational& v) {
    if (packed_) {
        uint64_t bit = uint64_t(1) << (j % 64);
        Rational r = field_.reduce(v);
        if (r == 0)
            bits_[i * words_ + j / 64] &= ~bit;
        else
            bits_[i * words_ + j / 64] |= bit;
    } else {
        vals_[i * cols_ + j] = field_.reduce(v);
    }
}

void FieldMatrix::add_to(size_t i, size_t j, const Rational& v) {
    if (packed_) {
        if (field_.reduce(v) != 0) bits_[i * words_ + j / 64] ^= uint64_t(1) << (j % 64);
    } else {
        vals_[i * cols_ + j] = field_.add(vals_[i * cols_ + j], v);
    }
}

void FieldMatrix::append_row() {
    ++rows_;
    if (packed_)
        bits_.resize(rows_ * words_, 0);
    else
        vals_.resize(rows_ * cols_, Rational(0));
}

void FieldMatrix::append_row_of(const FieldMatrix& src, size_t i) {
    if (src.cols_ != cols_ || src.field_ != field_) throw math_error("row append shape mismatch");
    append_row();
    if (packed_)
        std::copy(src.bits_.begin() + i * words_, src.bits_.begin() + (i + 1) * words_,
                  bits_.begin() + (rows_ - 1) * words_);
    else
        std::copy(src.vals_.begin() + i * cols_, src.vals_.begin() + (i + 1) * cols_,
                  vals_.begin() + (rows_ - 1) * cols_);
}

bool FieldMatrix::row_is_zero(size_t i) const {
    if (packed_) {
        for (size_t w = 0; w < words_; ++w)
            if (bits_[i * words_ + w]) return false;
        return true;
    }
    for (size_t j = 0; j < cols_; ++j)
        if (vals_[i * cols_ + j] != 0) return false;
    return true;
}

bool FieldMatrix::is_zero() const {
    for (size_t i = 0; i < rows_; ++i)
        if (!row_is_zero(i)) return false;
    return true;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw math_error("field matrix shape mismatch in *");
    FieldMatrix out(rows_, o.cols_, field_);
    if (packed_ && o.packed_) {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k)
                if ((bits_[i * words_ + k / 64] >> (k % 64)) & 1u)
                    for (size_t w = 0; w < o.words_; ++w)
                        out.bits_[i * o.words_ + w] ^= o.bits_[k * o.words_ + w];
        return out;
    }
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            Rational a = get(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) out.add_to(i, j, field_.mul(a, o.get(k, j)));
        }
    return out;
}

size_t FieldMatrix::rref(bool compact) {
    pivots_.clear();
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t piv = rows_;
        for (size_t i = r; i < rows_; ++i)
            if (get(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == rows_) continue;
        if (piv != r) {
            if (packed_)
                std::swap_ranges(bits_.begin() + piv * words_, bits_.begin() + (piv + 1) * words_,
                                 bits_.begin() + r * words_);
            else
                std::swap_ranges(vals_.begin() + piv * cols_, vals_.begin() + (piv + 1) * cols_,
                                 vals_.begin() + r * cols_);
        }
        if (packed_) {
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                if ((bits_[i * words_ + col / 64] >> (col % 64)) & 1u)
                    for (size_t w = 0; w < words_; ++w) bits_[i * words_ + w] ^= bits_[r * words_ + w];
            }
        } else {
            Rational inv = field_.inv(get(r, col));
            if (inv != 1)
                for (size_t j = col; j < cols_; ++j) set(r, j, field_.mul(get(r, j), inv));
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                Rational a = get(i, col);
                if (a == 0) continue;
                for (size_t j = col; j < cols_; ++j)
                    set(i, j, field_.sub(get(i, j), field_.mul(a, get(r, j))));
            }
        }
        pivots_.push_back(col);
        ++r;
    }
    if (compact && r < rows_) {
        rows_ = r;
        if (packed_)
            bits_.resize(rows_ * words_);
        else
            vals_.resize(rows_ * cols_);
    }
    return r;
}

size_t FieldMatrix::rank() const {
    FieldMatrix copy = *this;
    return copy.rref();
}

FieldMatrix FieldMatrix::left_kernel() const {
    // eliminate [M | I] on M's columns; zero-M rows give the kernel
    FieldMatrix aug(rows_, cols_ + rows_, field_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.set(i, j, get(i, j));
        aug.set(i, cols_ + i, Rational(1));
    }
    // manual elimination restricted to the first cols_ columns
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < aug.rows_; ++col) {
        size_t piv = aug.rows_;
        for (size_t i = r; i < aug.rows_; ++i)
            if (aug.get(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == aug.rows_) continue;
        if (piv != r)
            for (size_t j = 0; j < aug.cols_; ++j) {
                Rational t = aug.get(r, j);
                aug.set(r, j, aug.get(piv, j));
                aug.set(piv, j, t);
            }
        Rational inv = field_.inv(aug.get(r, col));
        if (inv != 1)
            for (size_t j = 0; j < aug.cols_; ++j) aug.set(r, j, field_.mul(aug.get(r, j), inv));
        for (size_t i = 0; i < aug.rows_; ++i) {
            if (i == r) continue;
            Rational a = aug.get(i, col);
            if (a == 0) continue;
            for (size_t j = 0; j < aug.cols_; ++j)
                aug.set(i, j, field_.sub(aug.get(i, j), field_.mul(a, aug.get(r, j))));
        }
        ++r;
    }
    FieldMatrix kernel(0, rows_, field_);
    for (size_t i = r; i < aug.rows_; ++i) {
        kernel.append_row();
        for (size_t j = 0; j < rows_; ++j) kernel.set(kernel.rows() - 1, j, aug.get(i, cols_ + j));
    }
    kernel.rref();
    return kernel;
}

void FieldMatrix::reduce_vector(std::vector<Rational>& v) const {
    if (v.size() != cols_) throw math_error("vector length mismatch");
    if (pivots_.size() != rows_) throw math_error("reduce_vector requires an rref matrix");
    for (size_t i = 0; i < rows_; ++i) {
        Rational a = v[pivots_[i]];
        if (a == 0) continue;
        for (size_t j = 0; j < cols_; ++j) v[j] = field_.sub(v[j], field_.mul(a, get(i, j)));
    }
}

bool FieldMatrix::in_row_space(const std::vector<Rational>& v) const {
    std::vector<Rational> w = v;
    reduce_vector(w);
    for (const auto& x : w)
        if (field_.reduce(x) != 0) return false;
    return true;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (get(i, j) != o.get(i, j)) return false;
    return true;
}

} // namespace ivmq
