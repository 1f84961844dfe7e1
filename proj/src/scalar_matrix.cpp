#include "ivmq/scalar_matrix.hpp"

#include "ivmq/errors.hpp"

namespace ivmq {

ScalarMatrix::ScalarMatrix(size_t rows, size_t cols, const GroundField& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, NovikovScalar::zero(f)) {}

ScalarMatrix ScalarMatrix::identity(size_t n, const GroundField& f) {
    ScalarMatrix m(n, n, f);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = NovikovScalar::one(f);
    return m;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix shape mismatch in +");
    ScalarMatrix m = *this;
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = m.data_[i] + o.data_[i];
    return m;
}

ScalarMatrix ScalarMatrix::operator-() const {
    ScalarMatrix m = *this;
    for (auto& s : m.data_) s = -s;
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw math_error("matrix shape mismatch in *");
    ScalarMatrix m(rows_, o.cols_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const NovikovScalar& a = at(i, k);
            if (a.is_zero() && !a.precision()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const NovikovScalar& b = o.at(k, j);
                if (b.is_zero() && !b.precision()) continue;
                m.at(i, j) += a * b;
            }
        }
    return m;
}

ScalarMatrix ScalarMatrix::scaled(const NovikovScalar& c) const {
    ScalarMatrix m = *this;
    for (auto& s : m.data_) s = s * c;
    return m;
}

ScalarMatrix ScalarMatrix::transposed() const {
    ScalarMatrix m(cols_, rows_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

std::vector<NovikovScalar> ScalarMatrix::apply(const std::vector<NovikovScalar>& row_vec) const {
    if (row_vec.size() != rows_) throw math_error("vector/matrix shape mismatch");
    std::vector<NovikovScalar> out(cols_, NovikovScalar::zero(field_));
    for (size_t i = 0; i < rows_; ++i) {
        if (row_vec[i].is_zero() && !row_vec[i].precision()) continue;
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() && !at(i, j).precision()) continue;
            out[j] += row_vec[i] * at(i, j);
        }
    }
    return out;
}

ExtRational ScalarMatrix::min_valuation() const {
    ExtRational best = std::nullopt;
    for (const auto& s : data_) {
        if (s.is_zero()) continue;
        best = ext_min(best, s.valuation());
    }
    return best;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool BasedModule::same_shape(const BasedModule& o) const {
    if (field != o.field || modulus != o.modulus || generators.size() != o.generators.size()) return false;
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].degree != o.generators[i].degree) return false;
    return true;
}

void ModuleRay::validate() const {
    if (modules.empty()) throw schema_error("ray needs at least one module");
    if (maps.size() + 1 != modules.size()) throw schema_error("ray map count mismatch");
    for (size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].rows() != modules[i].dim() || maps[i].cols() != modules[i + 1].dim())
            throw schema_error("ray map " + std::to_string(i) + " has wrong shape");
        ExtRational v = maps[i].min_valuation();
        if (v && *v < 0) throw schema_error("ray maps must be Lambda_{>=0}-linear (valuation >= 0)");
    }
    if (tail == RayTail::Contracting && !(contraction > 0))
        throw schema_error("contracting tail requires c > 0");
}

ColimitResult completed_colimit(const ModuleRay& ray, const Rational& precision) {
    ray.validate();
    if (!(precision > 0)) throw math_error("completed colimit needs a positive precision");
    switch (ray.tail) {
        case RayTail::Stabilized:
            // The colimit is reached at the last stored module.
            return {ray.modules.back(), precision, "stabilized colimit at stage " + std::to_string(ray.modules.size())};
        case RayTail::Contracting: {
            // Every map factors through T^c: check the stored prefix and
            // return the zero module (Lemma-level vanishing in completion).
            for (size_t i = 0; i < ray.maps.size(); ++i) {
                ExtRational v = ray.maps[i].min_valuation();
                if (v && *v < ray.contraction)
                    throw model_error("ray tagged contracting but map " + std::to_string(i) +
                                      " has valuation " + ext_str(v) + " < c");
            }
            BasedModule zero{ray.modules.front().field, ray.modules.front().modulus, {}};
            return {zero, precision, "completed colimit vanishes (maps factor through T^c)"};
        }
        case RayTail::Unknown: break;
    }
    throw model_error("unsupported ray shape: tail behavior unknown");
}

bool dies_in_completion(const ModuleRay& ray, const std::vector<NovikovScalar>& x) {
    ray.validate();
    if (ray.tail == RayTail::Contracting) return true; // valuations grow without bound
    // Push the element through the prefix: if some image is exactly zero it
    // certainly dies; for stabilized tails nothing more can happen.
    std::vector<NovikovScalar> cur = x;
    for (const auto& m : ray.maps) {
        bool zero = true;
        for (const auto& s : cur) zero = zero && s.is_zero();
        if (zero) return true;
        cur = m.apply(cur);
    }
    for (const auto& s : cur)
        if (!s.is_zero()) return false;
    return true;
}

} // namespace ivmq
