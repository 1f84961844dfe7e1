#include "ivmq/graded_algebra.hpp"

#include "ivmq/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ivmq {

int shuffle_sign(const std::vector<int>& first, const std::vector<int>& second) {
    {
        std::set<int> seen(first.begin(), first.end());
        for (int b : second)
            if (!seen.insert(b).second) throw math_error("shuffle sign: arguments are not a partition");
    }
    long inversions = 0;
    for (int a : first)
        for (int b : second)
            if (a > b) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

long GradedAlgebra::reduce_degree(long d) const {
    if (modulus_ == 0) return d;
    long r = d % modulus_;
    return r < 0 ? r + modulus_ : r;
}

const std::vector<size_t>& GradedAlgebra::basis_of_degree(long d) const {
    static const std::vector<size_t> empty;
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? empty : it->second;
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::build(GroundField field, long modulus,
                                                          std::vector<AlgebraBasisElement> basis,
                                                          long unit, const Spec& products,
                                                          CoefficientRing coeff_ring) {
    if (modulus < 0 || modulus % 2 != 0) throw schema_error("grading modulus must be 0 or even positive");
    if (basis.empty()) throw schema_error("algebra needs a nonempty basis");
    if (unit < 0 || static_cast<size_t>(unit) >= basis.size()) throw schema_error("unit index out of range");
    auto A = std::make_shared<GradedAlgebra>();
    A->field_ = field;
    A->modulus_ = modulus;
    A->coeff_ring_ = coeff_ring;
    A->basis_ = std::move(basis);
    A->unit_ = unit;
    for (auto& b : A->basis_) b.degree = A->reduce_degree(b.degree);
    {
        std::set<std::string> labels;
        for (const auto& b : A->basis_)
            if (!labels.insert(b.label).second) throw schema_error("duplicate basis label: " + b.label);
    }
    A->products_.assign(A->basis_.size() * A->basis_.size(), {});
    for (const auto& [i, j, k, c] : products) {
        size_t d = A->basis_.size();
        if (i < 0 || j < 0 || k < 0 || static_cast<size_t>(i) >= d || static_cast<size_t>(j) >= d ||
            static_cast<size_t>(k) >= d)
            throw schema_error("product entry index out of range");
        if (c.field() != field) throw schema_error("structure constant over wrong ground field");
        if (c.precision()) throw schema_error("structure constants must be exact");
        if (c.is_zero()) continue;
        auto& list = A->products_[i * d + j];
        for (auto& pt : list)
            if (pt.k == k) throw schema_error("duplicate structure constant for the same (i,j,k)");
        list.push_back({k, c});
    }
    std::set<long> degs;
    for (size_t i = 0; i < A->basis_.size(); ++i) {
        degs.insert(A->basis_[i].degree);
        A->by_degree_[A->basis_[i].degree].push_back(i);
    }
    A->degrees_.assign(degs.begin(), degs.end());
    A->validate();
    return A;
}

void GradedAlgebra::validate() const {
    const size_t d = basis_.size();
    // degree additivity
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (const auto& pt : basis_product(i, j)) {
                long want = reduce_degree(basis_[i].degree + basis_[j].degree);
                if (basis_[pt.k].degree != want)
                    throw schema_error("degree additivity fails at (" + basis_[i].label + ", " +
                                       basis_[j].label + ") -> " + basis_[pt.k].label);
            }
    // unit laws
    for (size_t j = 0; j < d; ++j) {
        AlgElem left = mul(basis_elem(unit_), basis_elem(j));
        AlgElem right = mul(basis_elem(j), basis_elem(unit_));
        AlgElem expect = basis_elem(j);
        if (left != expect || right != expect)
            throw schema_error("unit law fails at basis element " + basis_[j].label);
    }
    // Koszul skew-commutativity: ab = (-1)^{|a||b|} ba
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            AlgElem ab = mul(basis_elem(i), basis_elem(j));
            AlgElem ba = mul(basis_elem(j), basis_elem(i));
            bool sign_neg = (basis_[i].degree % 2 != 0) && (basis_[j].degree % 2 != 0);
            if (sign_neg)
                for (auto& s : ba) s = -s;
            if (ab != ba)
                throw schema_error("skew-commutativity fails at (" + basis_[i].label + ", " +
                                   basis_[j].label + ")");
        }
    // associativity on every basis triple
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            AlgElem ij = mul(basis_elem(i), basis_elem(j));
            for (size_t k = 0; k < d; ++k) {
                AlgElem lhs = mul(ij, basis_elem(k));
                AlgElem rhs = mul(basis_elem(i), mul(basis_elem(j), basis_elem(k)));
                if (lhs != rhs)
                    throw schema_error("associativity fails at (" + basis_[i].label + ", " +
                                       basis_[j].label + ", " + basis_[k].label + ")");
            }
        }
}

AlgElem GradedAlgebra::unit_elem() const { return basis_elem(unit_); }

AlgElem GradedAlgebra::basis_elem(size_t i) const {
    AlgElem x = zero_elem();
    x[i] = NovikovScalar::one(field_);
    return x;
}

AlgElem GradedAlgebra::add(const AlgElem& x, const AlgElem& y) const {
    AlgElem out = x;
    for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] + y[i];
    return out;
}

AlgElem GradedAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
    AlgElem out = zero_elem();
    const size_t d = dim();
    for (size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            NovikovScalar c = x[i] * y[j];
            for (const auto& pt : basis_product(i, j)) out[pt.k] += c * pt.coeff;
        }
    }
    return out;
}

AlgElem GradedAlgebra::scale(const AlgElem& x, const NovikovScalar& c) const {
    AlgElem out = x;
    for (auto& s : out) s = s * c;
    return out;
}

bool GradedAlgebra::is_zero(const AlgElem& x) const {
    for (const auto& s : x)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<long> GradedAlgebra::homogeneous_degree(const AlgElem& x) const {
    std::optional<long> deg;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        if (deg && *deg != basis_[i].degree) throw math_error("element is not homogeneous");
        deg = basis_[i].degree;
    }
    return deg;
}

long GradedAlgebra::index_of_label(const std::string& label) const {
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return static_cast<long>(i);
    throw schema_error("unknown basis label: " + label);
}

std::string GradedAlgebra::elem_str(const AlgElem& x) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (x[i].is_one())
            os << basis_[i].label;
        else
            os << "(" << x[i].str() << ")*" << basis_[i].label;
    }
    if (first) os << "0";
    return os.str();
}

AlgebraPtr regrade_mod(const AlgebraPtr& A, long two_k) {
    if (A->modulus() != 0) throw schema_error("regrade_mod expects a Z-graded algebra");
    if (two_k == 0) return A;
    if (two_k < 0 || two_k % 2 != 0) throw schema_error("regrading modulus must be even positive");
    GradedAlgebra::Spec spec;
    for (size_t i = 0; i < A->dim(); ++i)
        for (size_t j = 0; j < A->dim(); ++j)
            for (const auto& pt : A->basis_product(i, j))
                spec.emplace_back(i, j, pt.k, pt.coeff);
    return GradedAlgebra::build(A->field(), two_k, A->basis(), A->unit_index(), spec,
                                A->coefficient_ring());
}

size_t tensor_index(const AlgebraPtr& A, const AlgebraPtr& B, size_t a, size_t b) {
    return a * B->dim() + b;
}

AlgebraPtr tensor_kunneth(const AlgebraPtr& A, const AlgebraPtr& B) {
    if (A->field() != B->field()) throw schema_error("tensor factors over different ground fields");
    long modulus;
    if (A->modulus() == B->modulus())
        modulus = A->modulus();
    else if (A->modulus() == 0)
        modulus = B->modulus();
    else if (B->modulus() == 0)
        modulus = A->modulus();
    else
        throw schema_error("incompatible grading moduli in tensor product");
    const GroundField& f = A->field();
    std::vector<AlgebraBasisElement> basis;
    basis.reserve(A->dim() * B->dim());
    for (size_t a = 0; a < A->dim(); ++a)
        for (size_t b = 0; b < B->dim(); ++b) {
            std::string label;
            if (static_cast<long>(a) == A->unit_index())
                label = B->basis()[b].label;
            else if (static_cast<long>(b) == B->unit_index())
                label = A->basis()[a].label;
            else
                label = A->basis()[a].label + "(x)" + B->basis()[b].label;
            basis.push_back({label, A->degree_of(a) + B->degree_of(b)});
        }
    GradedAlgebra::Spec spec;
    for (size_t a = 0; a < A->dim(); ++a)
        for (size_t b = 0; b < B->dim(); ++b)
            for (size_t a2 = 0; a2 < A->dim(); ++a2)
                for (size_t b2 = 0; b2 < B->dim(); ++b2) {
                    const auto& pa = A->basis_product(a, a2);
                    if (pa.empty()) continue;
                    const auto& pb = B->basis_product(b, b2);
                    if (pb.empty()) continue;
                    bool sign_neg = (B->degree_of(b) % 2 != 0) && (A->degree_of(a2) % 2 != 0);
                    for (const auto& ta : pa)
                        for (const auto& tb : pb) {
                            NovikovScalar c = ta.coeff * tb.coeff;
                            if (sign_neg) c = -c;
                            if (c.is_zero()) continue;
                            spec.emplace_back(tensor_index(A, B, a, b), tensor_index(A, B, a2, b2),
                                              tensor_index(A, B, ta.k, tb.k), c);
                        }
                }
    CoefficientRing ring = (A->coefficient_ring() == CoefficientRing::NovikovField ||
                            B->coefficient_ring() == CoefficientRing::NovikovField)
                               ? CoefficientRing::NovikovField
                               : CoefficientRing::Field;
    return GradedAlgebra::build(f, modulus, std::move(basis),
                                tensor_index(A, B, A->unit_index(), B->unit_index()), spec, ring);
}

void AlgebraMorphism::validate() const {
    if (matrix.rows() != source->dim() || matrix.cols() != target->dim())
        throw schema_error("morphism matrix shape mismatch");
    for (size_t i = 0; i < source->dim(); ++i)
        for (size_t j = 0; j < target->dim(); ++j)
            if (!matrix.at(i, j).is_zero() && target->degree_of(j) != target->reduce_degree(source->degree_of(i)))
                throw schema_error("morphism is not degree zero");
    AlgElem unit_image = matrix.apply(source->unit_elem());
    if (unit_image != target->unit_elem()) throw schema_error("morphism is not unital");
    for (size_t i = 0; i < source->dim(); ++i)
        for (size_t j = 0; j < source->dim(); ++j) {
            AlgElem lhs = matrix.apply(source->mul(source->basis_elem(i), source->basis_elem(j)));
            AlgElem rhs = target->mul(matrix.apply(source->basis_elem(i)), matrix.apply(source->basis_elem(j)));
            if (lhs != rhs) throw schema_error("morphism is not multiplicative");
        }
}

namespace {

// Exterior algebra on generators gen_names (all degree 1); basis indexed by
// subsets with label "1" for the empty set.
StandardModel exterior_model(const std::vector<std::string>& gen_names, const GroundField& f,
                             CoefficientRing ring) {
    int n = static_cast<int>(gen_names.size());
    size_t dim = size_t(1) << n;
    std::vector<AlgebraBasisElement> basis(dim);
    for (size_t s = 0; s < dim; ++s) {
        std::string label;
        int deg = 0;
        for (int a = 0; a < n; ++a)
            if (s & (size_t(1) << a)) {
                if (!label.empty()) label += "^";
                label += gen_names[a];
                ++deg;
            }
        if (label.empty()) label = "1";
        basis[s] = {label, deg};
    }
    GradedAlgebra::Spec spec;
    for (size_t s = 0; s < dim; ++s)
        for (size_t t = 0; t < dim; ++t) {
            if (s & t) continue;
            std::vector<int> sa, sb;
            for (int a = 0; a < n; ++a) {
                if (s & (size_t(1) << a)) sa.push_back(a);
                if (t & (size_t(1) << a)) sb.push_back(a);
            }
            int sign = shuffle_sign(sa, sb);
            NovikovScalar c = NovikovScalar::constant(f, sign);
            if (!c.is_zero()) spec.emplace_back(s, t, s | t, c);
        }
    StandardModel m;
    m.algebra = GradedAlgebra::build(f, 0, std::move(basis), 0, spec, ring);
    m.top_class = static_cast<long>(dim - 1);
    m.poincare_duality = true;
    return m;
}

} // namespace

StandardModel model_torus(int n, const GroundField& f, const std::vector<std::string>& names) {
    if (n < 0 || n > 20) throw schema_error("torus dimension out of range");
    std::vector<std::string> gen = names;
    if (gen.empty())
        for (int a = 1; a <= n; ++a) gen.push_back("dx" + std::to_string(a));
    if (static_cast<int>(gen.size()) != n) throw schema_error("torus generator name count mismatch");
    return exterior_model(gen, f, CoefficientRing::Field);
}

StandardModel model_cpn(int n, const GroundField& f) {
    if (n < 1) throw schema_error("CP^n needs n >= 1");
    std::vector<AlgebraBasisElement> basis;
    basis.push_back({"1", 0});
    for (int i = 1; i <= n; ++i)
        basis.push_back({i == 1 ? "h" : "h^" + std::to_string(i), 2 * i});
    GradedAlgebra::Spec spec;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i + j <= n) spec.emplace_back(i, j, i + j, NovikovScalar::one(f));
    StandardModel m;
    m.algebra = GradedAlgebra::build(f, 0, std::move(basis), 0, spec, CoefficientRing::Field);
    m.top_class = n;
    m.poincare_duality = true;
    return m;
}

StandardModel model_qh_sphere(const GroundField& f) {
    std::vector<AlgebraBasisElement> basis = {{"1", 0}, {"h", 2}};
    GradedAlgebra::Spec spec;
    spec.emplace_back(0, 0, 0, NovikovScalar::one(f));
    spec.emplace_back(0, 1, 1, NovikovScalar::one(f));
    spec.emplace_back(1, 0, 1, NovikovScalar::one(f));
    // h^2 = T * 1, grading modulo 2 N_{S^2} = 4
    spec.emplace_back(1, 1, 0, NovikovScalar::monomial(f, 1, 1));
    StandardModel m;
    m.algebra = GradedAlgebra::build(f, 4, std::move(basis), 0, spec, CoefficientRing::NovikovField);
    m.top_class = 1;
    m.poincare_duality = false; // ideals over Lambda are not enumerated
    return m;
}

StandardModel model_qh_torus(int two_n, const GroundField& f) {
    if (two_n < 2 || two_n % 2 != 0) throw schema_error("QH torus needs even positive dimension");
    int n = two_n / 2;
    std::vector<std::string> gen;
    for (int a = 1; a <= n; ++a) gen.push_back("dp" + std::to_string(a));
    for (int a = 1; a <= n; ++a) gen.push_back("dq" + std::to_string(a));
    return exterior_model(gen, f, CoefficientRing::NovikovField);
}

StandardModel model_product(const std::vector<StandardModel>& factors) {
    if (factors.empty()) throw schema_error("product of zero models");
    StandardModel acc = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) {
        const StandardModel& next = factors[i];
        long top = -1;
        if (acc.top_class >= 0 && next.top_class >= 0)
            top = static_cast<long>(tensor_index(acc.algebra, next.algebra, acc.top_class, next.top_class));
        StandardModel out;
        out.algebra = tensor_kunneth(acc.algebra, next.algebra);
        out.top_class = top;
        out.poincare_duality = acc.poincare_duality && next.poincare_duality;
        acc = std::move(out);
    }
    return acc;
}

} // namespace ivmq
