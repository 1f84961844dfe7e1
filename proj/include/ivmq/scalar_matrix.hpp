#pragma once

#include "ivmq/novikov.hpp"

#include <vector>

namespace ivmq {

// Dense matrix of Novikov scalars. Elements of based modules are row
// vectors; a map C -> D is a (dim C) x (dim D) matrix applied as x * M,
// so composition "f then g" is Mf * Mg.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(size_t rows, size_t cols, const GroundField& f);

    static ScalarMatrix identity(size_t n, const GroundField& f);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const GroundField& field() const { return field_; }

    NovikovScalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const NovikovScalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-() const;
    ScalarMatrix operator*(const ScalarMatrix& o) const; // this then o (row convention)
    ScalarMatrix scaled(const NovikovScalar& c) const;
    ScalarMatrix transposed() const;

    std::vector<NovikovScalar> apply(const std::vector<NovikovScalar>& row_vec) const;

    // Smallest valuation over all entries; nullopt if the matrix is zero.
    ExtRational min_valuation() const;

    bool operator==(const ScalarMatrix& o) const;
    bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

private:
    size_t rows_ = 0, cols_ = 0;
    GroundField field_;
    std::vector<NovikovScalar> data_;
};

// A finite free graded module over Lambda (or Lambda_{>=0}) with labeled
// basis; degrees live in Z (modulus 0) or Z_{2k}.
struct ModuleGenerator {
    std::string label;
    long degree = 0;
};

struct BasedModule {
    GroundField field;
    long modulus = 0;
    std::vector<ModuleGenerator> generators;

    size_t dim() const { return generators.size(); }
    bool same_shape(const BasedModule& o) const;
};

enum class RayTail {
    Stabilized,   // connecting maps are eventually the identity
    Contracting,  // every connecting map lands in T^c * (next module), c > 0
    Unknown,
};

// A lazily-infinite ray C_1 -> C_2 -> ... of based modules, stored as a
// finite prefix plus an explicit tail behavior tag.
struct ModuleRay {
    std::vector<BasedModule> modules;    // size m >= 1
    std::vector<ScalarMatrix> maps;      // size m-1; maps[i]: modules[i] -> modules[i+1]
    RayTail tail = RayTail::Unknown;
    Rational contraction = 0;            // the c for Contracting tails

    void validate() const;
};

struct ColimitResult {
    BasedModule module;       // representative of the completed colimit at the precision
    Rational precision;
    std::string note;
};

// Completed direct limit of the ray, represented at exponent precision r.
// Supported shapes: Stabilized tails (colimit = last module) and Contracting
// tails (completed colimit = 0; realizes Lambda-hat = 0 for the multiply-by-
// T^c ray). Throws model_error for Unknown tails.
ColimitResult completed_colimit(const ModuleRay& ray, const Rational& precision);

// Chain-level content of the vanishing lemma: the image of x (an element of
// the first module) in the completed colimit is zero provided each
// connecting map sends the running image into T^c * (next module).
bool dies_in_completion(const ModuleRay& ray, const std::vector<NovikovScalar>& x);

} // namespace ivmq
