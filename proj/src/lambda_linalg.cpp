#include "ivmq/lambda_linalg.hpp"

#include "ivmq/errors.hpp"

#include <algorithm>

namespace ivmq {
namespace lambda_linalg {
namespace {

// Dense polynomial in t = T^{1/N} with field-reduced coefficients.
struct TPoly {
    std::vector<Rational> c; // c[k] is the coefficient of t^k; no trailing zeros

    bool zero() const { return c.empty(); }
    size_t deg() const { return c.size() - 1; }
    size_t val() const {
        for (size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) return k;
        return 0;
    }
};

struct Ctx {
    GroundField f;

    void trim(TPoly& p) const {
        while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
    }
    TPoly add(const TPoly& a, const TPoly& b) const {
        TPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = f.add(r.c[k], b.c[k]);
        trim(r);
        return r;
    }
    TPoly sub(const TPoly& a, const TPoly& b) const {
        TPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = f.sub(r.c[k], b.c[k]);
        trim(r);
        return r;
    }
    TPoly mul(const TPoly& a, const TPoly& b) const {
        if (a.zero() || b.zero()) return {};
        TPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                if (b.c[j] != 0) r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
        }
        trim(r);
        return r;
    }
    TPoly scale(const TPoly& a, const Rational& s) const {
        TPoly r = a;
        for (auto& x : r.c) x = f.mul(x, s);
        trim(r);
        return r;
    }
    // Remainder of a modulo b (b nonzero).
    TPoly mod(TPoly a, const TPoly& b) const {
        Rational lead_inv = f.inv(b.c.back());
        while (!a.zero() && a.c.size() >= b.c.size()) {
            Rational q = f.mul(a.c.back(), lead_inv);
            size_t shift = a.c.size() - b.c.size();
            for (size_t k = 0; k < b.c.size(); ++k)
                a.c[shift + k] = f.sub(a.c[shift + k], f.mul(q, b.c[k]));
            trim(a);
        }
        return a;
    }
    // Exact quotient a / b; throws if not divisible.
    TPoly divexact(TPoly a, const TPoly& b) const {
        if (b.zero()) throw math_error("polynomial division by zero");
        if (a.zero()) return {};
        TPoly q;
        q.c.assign(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, Rational(0));
        Rational lead_inv = f.inv(b.c.back());
        while (!a.zero() && a.c.size() >= b.c.size()) {
            Rational qc = f.mul(a.c.back(), lead_inv);
            size_t shift = a.c.size() - b.c.size();
            q.c[shift] = qc;
            for (size_t k = 0; k < b.c.size(); ++k)
                a.c[shift + k] = f.sub(a.c[shift + k], f.mul(qc, b.c[k]));
            trim(a);
        }
        if (!a.zero()) throw math_error("inexact polynomial division");
        trim(q);
        return q;
    }
    // Monic gcd.
    TPoly gcd(TPoly a, TPoly b) const {
        while (!b.zero()) {
            TPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.zero() && a.c.back() != 1) a = scale(a, f.inv(a.c.back()));
        return a;
    }
};

using PolyRow = std::vector<TPoly>;

// Scale row to its canonical representative: divide by the monic gcd of the
// entries (this also strips a common power of t), then normalize the lowest
// coefficient of the leftmost nonzero entry to 1.
void normalize_row(PolyRow& row, const Ctx& cx) {
    TPoly g;
    for (const auto& e : row)
        if (!e.zero()) g = g.zero() ? e : cx.gcd(g, e);
    if (g.zero()) return;
    if (!(g.c.size() == 1 && g.c[0] == 1))
        for (auto& e : row)
            if (!e.zero()) e = cx.divexact(e, g);
    for (const auto& e : row) {
        if (e.zero()) continue;
        Rational lead = e.c[e.val()];
        if (lead != 1) {
            Rational s = cx.f.inv(lead);
            for (auto& x : row)
                if (!x.zero()) x = cx.scale(x, s);
        }
        break;
    }
}

// Gauss-Jordan elimination by cross-multiplication over F[t]; pivots are
// chosen by leading-monomial (lowest valuation). Only the first
// `pivot_cols` columns are eliminated; trailing columns ride along. Returns
// the number of pivots.
size_t eliminate(std::vector<PolyRow>& rows, size_t pivot_cols, const Ctx& cx) {
    size_t r = 0;
    for (size_t col = 0; col < pivot_cols && r < rows.size(); ++col) {
        size_t best = rows.size();
        for (size_t i = r; i < rows.size(); ++i) {
            if (rows[i][col].zero()) continue;
            if (best == rows.size() || rows[i][col].val() < rows[best][col].val()) best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[r], rows[best]);
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == r || rows[j][col].zero()) continue;
            TPoly p = rows[r][col];
            TPoly a = rows[j][col];
            for (size_t k = 0; k < rows[j].size(); ++k)
                rows[j][k] = cx.sub(cx.mul(p, rows[j][k]), cx.mul(a, rows[r][k]));
            normalize_row(rows[j], cx);
        }
        ++r;
    }
    for (auto& row : rows) normalize_row(row, cx);
    return r;
}

struct Converted {
    Ctx cx;
    mpz_class exp_den; // N: exponents of T are k/N
    std::vector<PolyRow> rows;
    size_t cols = 0;
};

// per_row_shift scales each row by T^{-min valuation} (fine for row-space
// computations); kernel computations must use a single global shift so the
// left-kernel subspace is preserved.
Converted to_polys(const ScalarMatrix& M, bool per_row_shift = true) {
    Converted cv;
    cv.cx.f = M.field();
    cv.cols = M.cols();
    mpz_class den(1);
    ExtRational global_min = std::nullopt;
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) {
            const auto& s = M.at(i, j);
            if (s.precision())
                throw math_error("exact linear algebra requires entries with infinite precision");
            for (const auto& t : s.terms()) den = lcm_denominator(den, t.exponent);
            if (!s.is_zero()) global_min = ext_min(global_min, s.valuation());
        }
    cv.exp_den = den;
    cv.rows.reserve(M.rows());
    for (size_t i = 0; i < M.rows(); ++i) {
        ExtRational mv = global_min;
        if (per_row_shift) {
            mv = std::nullopt;
            for (size_t j = 0; j < M.cols(); ++j)
                if (!M.at(i, j).is_zero()) mv = ext_min(mv, M.at(i, j).valuation());
        }
        Rational shift = mv ? *mv : Rational(0);
        PolyRow row(M.cols());
        for (size_t j = 0; j < M.cols(); ++j) {
            for (const auto& t : M.at(i, j).terms()) {
                Rational e = (t.exponent - shift) * Rational(den);
                long k = rational_to_long(e);
                if (row[j].c.size() <= static_cast<size_t>(k)) row[j].c.resize(k + 1, Rational(0));
                row[j].c[k] = t.coeff;
            }
            cv.cx.trim(row[j]);
        }
        cv.rows.push_back(std::move(row));
    }
    return cv;
}

ScalarMatrix from_polys(const std::vector<PolyRow>& rows, size_t cols, const Converted& cv,
                        bool drop_zero_rows = true) {
    std::vector<const PolyRow*> keep;
    for (const auto& row : rows) {
        bool zero = true;
        for (size_t j = 0; j < cols && zero; ++j) zero = row[j].zero();
        if (!zero || !drop_zero_rows) keep.push_back(&row);
    }
    ScalarMatrix out(keep.size(), cols, cv.cx.f);
    Rational den(cv.exp_den);
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < cols; ++j) {
            const TPoly& p = (*keep[i])[j];
            std::vector<NovikovTerm> terms;
            for (size_t k = 0; k < p.c.size(); ++k)
                if (p.c[k] != 0) terms.push_back({Rational(static_cast<long>(k)) / den, p.c[k]});
            out.at(i, j) = NovikovScalar::from_terms(cv.cx.f, std::move(terms));
        }
    return out;
}

// Sort rows by pivot column for a canonical row order.
void sort_rows(std::vector<PolyRow>& rows, size_t cols) {
    auto pivot = [cols](const PolyRow& r) {
        for (size_t j = 0; j < cols; ++j)
            if (!r[j].zero()) return j;
        return cols;
    };
    std::stable_sort(rows.begin(), rows.end(),
                     [&](const PolyRow& a, const PolyRow& b) { return pivot(a) < pivot(b); });
}

} // namespace

ScalarMatrix row_reduce(const ScalarMatrix& M) {
    Converted cv = to_polys(M);
    eliminate(cv.rows, cv.cols, cv.cx);
    sort_rows(cv.rows, cv.cols);
    return from_polys(cv.rows, cv.cols, cv);
}

size_t rank(const ScalarMatrix& M) {
    Converted cv = to_polys(M);
    return eliminate(cv.rows, cv.cols, cv.cx);
}

ScalarMatrix left_kernel(const ScalarMatrix& M) {
    Converted cv = to_polys(M, /*per_row_shift=*/false);
    size_t n = cv.rows.size();
    for (size_t i = 0; i < n; ++i) {
        cv.rows[i].resize(cv.cols + n);
        cv.rows[i][cv.cols + i] = TPoly{{Rational(1)}};
    }
    eliminate(cv.rows, cv.cols, cv.cx);
    std::vector<PolyRow> kernel;
    for (const auto& row : cv.rows) {
        bool zero = true;
        for (size_t j = 0; j < cv.cols && zero; ++j) zero = row[j].zero();
        if (!zero) continue;
        PolyRow k(row.begin() + cv.cols, row.end());
        kernel.push_back(std::move(k));
    }
    eliminate(kernel, n, cv.cx);
    sort_rows(kernel, n);
    Converted shell = cv;
    return from_polys(kernel, n, shell);
}

bool in_row_space(const std::vector<NovikovScalar>& v, const ScalarMatrix& rows) {
    if (v.size() != rows.cols()) throw math_error("vector length mismatch in membership test");
    ScalarMatrix R = row_reduce(rows);
    ScalarMatrix stacked(R.rows() + 1, R.cols(), R.field());
    for (size_t i = 0; i < R.rows(); ++i)
        for (size_t j = 0; j < R.cols(); ++j) stacked.at(i, j) = R.at(i, j);
    for (size_t j = 0; j < R.cols(); ++j) stacked.at(R.rows(), j) = v[j];
    return rank(stacked) == R.rows();
}

ScalarMatrix stack(const ScalarMatrix& A, const ScalarMatrix& B) {
    if (A.cols() != B.cols()) throw math_error("column mismatch in stack");
    ScalarMatrix out(A.rows() + B.rows(), A.cols(), A.field());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) out.at(i, j) = A.at(i, j);
    for (size_t i = 0; i < B.rows(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) out.at(A.rows() + i, j) = B.at(i, j);
    return out;
}

ScalarMatrix sum_row_spaces(const ScalarMatrix& A, const ScalarMatrix& B) {
    return row_reduce(stack(A, B));
}

ScalarMatrix intersect_row_spaces(const ScalarMatrix& A, const ScalarMatrix& B) {
    // kernel rows (l | m) of [A; B] satisfy l*A = -m*B in the intersection
    ScalarMatrix M = stack(A, B);
    ScalarMatrix K = left_kernel(M);
    ScalarMatrix lpart(K.rows(), A.rows(), A.field());
    for (size_t i = 0; i < K.rows(); ++i)
        for (size_t j = 0; j < A.rows(); ++j) lpart.at(i, j) = K.at(i, j);
    return row_reduce(lpart * A);
}

} // namespace lambda_linalg
} // namespace ivmq
