#pragma once

// Jordan algebras presented by structure constants: validation, rank,
// generic minimum polynomial, trace/norm/adjoint/inverse, and the standard
// constructions (symmetrization of associative algebras, direct products,
// spin factors, 3x3 Hermitian matrices over a composition algebra).

#include "jck/config.hpp"
#include "jck/errors.hpp"
#include "jck/linalg.hpp"
#include "jck/multipoly.hpp"
#include "jck/rational.hpp"
#include "jck/rng.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace jck {

// Structure constants of a commutative unital algebra: b_i * b_j has
// coordinates table[i][j].
struct AlgebraSpec {
    int dim = 0;
    std::vector<std::vector<std::vector<Rational>>> table;
    std::vector<Rational> unit;

    void check_shape() const;
};

struct GenericMinPoly {
    int m = 0;
    std::vector<MultiPoly> sigma; // sigma[i] is homogeneous of degree i+1
};

enum class CheckMode { automatic, symbolic, sampled };

// Jordan-identity check at 64 seeded pairs when not done symbolically.
inline constexpr int kSampledIdentityPoints = 64;

// Direct interpolation of a degree-i sigma form is used up to this many
// monomials; beyond it the form is derived from trace power sums instead.
// Either way the result is certified symbolically against the generic
// minimum polynomial.
inline constexpr int kInterpolationCap = 256;

// Symbolic sigma/adjoint/norm forms are computed on demand up to this
// dimension; larger algebras (the 27-dimensional one) use pointwise
// evaluation unless forms are explicitly requested.
inline constexpr int kAutoFormDim = 15;

class JordanAlgebra {
    struct Impl;
    std::shared_ptr<Impl> impl_;

    explicit JordanAlgebra(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

public:
    // Checks commutativity and the unit law exactly, then the Jordan
    // identity x^2(yx) = (x^2 y)x either symbolically (dim <= threshold or
    // forced) or at seeded sample pairs.
    static JordanAlgebra validate(const AlgebraSpec& spec,
                                  CheckMode mode = CheckMode::automatic,
                                  const RunConfig& cfg = RunConfig{});

    int dim() const;
    const AlgebraSpec& spec() const;
    const RunConfig& config() const;
    const std::vector<Rational>& unit() const;
    bool jordan_certified_symbolically() const;

    int rank() const;

    // The forms sigma_1..sigma_m with x^m - sigma_1 x^{m-1} + ... = 0,
    // certified symbolically. Throws for dim > kAutoFormDim unless
    // request_symbolic_forms() was called first.
    const GenericMinPoly& min_poly() const;
    void request_symbolic_forms() const;
    bool symbolic_forms_available() const;

    const MultiPoly& trace_form() const; // sigma_1; cheap at every dimension
    const MultiPoly& norm_form() const;  // sigma_m
    const RationalMapT& adjoint_form() const;

    // --- pointwise operations over any field F built from Rational ---

    template <typename F>
    std::vector<F> mul(const std::vector<F>& x, const std::vector<F>& y) const;

    // Product of two symbolic vectors through the structure constants.
    std::vector<MultiPoly> mul_symbolic(const std::vector<MultiPoly>& x,
                                        const std::vector<MultiPoly>& y) const;

    template <typename F>
    std::vector<F> unit_as() const;

    // Values (sigma_1(x), ..., sigma_m(x)). Works at every point: generic
    // points use the exact Krylov relation, degenerate ones are recovered by
    // restriction to a generic line through x.
    template <typename F>
    std::vector<F> sigma_at(const std::vector<F>& x) const;

    template <typename F>
    F trace_at(const std::vector<F>& x) const;

    template <typename F>
    F norm_at(const std::vector<F>& x) const;

    template <typename F>
    std::vector<F> adjoint_at(const std::vector<F>& x) const;

    // x^{-1} = N(x)^{-1} x^#; throws NotInvertible when N(x) = 0.
    template <typename F>
    std::vector<F> invert(const std::vector<F>& x) const;

    // x#y = (x+y)^# - x^# - y^#.
    template <typename F>
    std::vector<F> sharp(const std::vector<F>& x, const std::vector<F>& y) const;

private:
    template <typename F>
    std::optional<std::vector<F>> sigma_krylov(const std::vector<F>& x) const;
};

// Symmetrizes an associative table: x*y = (xy + yx)/2. The input table may
// be noncommutative; associativity and the two-sided unit law are checked
// exactly on basis triples.
AlgebraSpec from_associative(const AlgebraSpec& assoc);

AlgebraSpec direct_product(const AlgebraSpec& a, const AlgebraSpec& b);

// C + W with (l,y)(l',y') = (ll' - B(y,y'), l y' + l' y); rank 2.
AlgebraSpec spin_factor(const Matrix<Rational>& bilinear);

// A composition algebra over Q given by structure constants and a
// conjugation; models the split forms of R_C, C_C, H_C, O_C.
struct CompositionAlgebraSpec {
    int dim = 0; // 1, 2, 4 or 8
    std::vector<std::vector<std::vector<Rational>>> table;
    Matrix<Rational> conj;
    std::vector<Rational> unit;
};

// 3x3 Hermitian matrices over a composition algebra with M*N = (MN+NM)/2;
// dimension 3 + 3 dim(C), rank 3. Checks the composition property
// q(xy) = q(x) q(y) symbolically before building the table.
AlgebraSpec hermitian_h3(const CompositionAlgebraSpec& c);

// Split composition algebras of dimension 1, 2, 4, 8 (the last one via
// Zorn vector matrices).
CompositionAlgebraSpec split_composition(int dim);

// -------------------------------------------------------------------------
// inline / template implementation

struct JordanAlgebra::Impl {
    AlgebraSpec spec;
    RunConfig cfg;
    bool jordan_symbolic = false;

    // sparse view of the table: products[i][j] = {(l, c) : c != 0}
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> products;

    mutable std::once_flag rank_once;
    mutable int rank_value = 0;

    mutable std::once_flag trace_once;
    mutable MultiPoly trace_form;

    mutable std::mutex minpoly_mutex;
    mutable std::optional<GenericMinPoly> minpoly;
    mutable std::optional<RationalMapT> adjoint;
    mutable bool forms_requested = false;

    void build_sparse();
    void compute_rank() const;
    void compute_trace_form() const;
    void compute_min_poly_locked() const;

    template <typename F>
    std::vector<F> bilinear(const std::vector<F>& x, const std::vector<F>& y) const {
        const int k = spec.dim;
        if (int(x.size()) != k || int(y.size()) != k)
            throw std::invalid_argument("jordan.mul: vector length mismatch");
        std::vector<F> out(k, F(0));
        for (int i = 0; i < k; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                if (y[j].is_zero()) continue;
                F xy = x[i] * y[j];
                for (const auto& [l, c] : products[i][j]) out[l] += F(c) * xy;
            }
        }
        return out;
    }

    // Componentwise product of symbolic vectors through the table.
    std::vector<MultiPoly> symb_mul(const std::vector<MultiPoly>& x,
                                    const std::vector<MultiPoly>& y) const {
        const int k = spec.dim;
        int nv = 0;
        for (const auto& p : x)
            if (p.num_vars()) { nv = p.num_vars(); break; }
        std::vector<MultiPoly> out(k, MultiPoly(nv));
        for (int i = 0; i < k; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                if (y[j].is_zero() || products[i][j].empty()) continue;
                MultiPoly prod = x[i] * y[j];
                for (const auto& [l, c] : products[i][j]) out[l] += prod * c;
            }
        }
        return out;
    }
};

template <typename F>
std::vector<F> JordanAlgebra::mul(const std::vector<F>& x, const std::vector<F>& y) const {
    return impl_->bilinear(x, y);
}

template <typename F>
std::vector<F> JordanAlgebra::unit_as() const {
    std::vector<F> e;
    e.reserve(dim());
    for (const auto& c : impl_->spec.unit) e.push_back(F(c));
    return e;
}

template <typename F>
std::optional<std::vector<F>> JordanAlgebra::sigma_krylov(const std::vector<F>& x) const {
    const int k = dim(), m = rank();
    // powers e, x, ..., x^m
    std::vector<std::vector<F>> pw;
    pw.push_back(unit_as<F>());
    pw.push_back(x);
    for (int j = 2; j <= m; ++j) pw.push_back(impl_->bilinear(pw[j - 1], x));
    // x^m = a_1 x^{m-1} + a_2 x^{m-2} + ... + a_m e
    Matrix<F> a(k, std::vector<F>(m, F(0)));
    std::vector<F> b(k, F(0));
    for (int row = 0; row < k; ++row) {
        for (int j = 1; j <= m; ++j) a[row][j - 1] = pw[m - j][row];
        b[row] = pw[m][row];
    }
    auto sol = solve_unique(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    std::vector<F> sigma(m, F(0));
    for (int j = 1; j <= m; ++j) sigma[j - 1] = (j % 2 == 1) ? (*sol)[j - 1] : -(*sol)[j - 1];
    return sigma;
}

template <typename F>
std::vector<F> JordanAlgebra::sigma_at(const std::vector<F>& x) const {
    const int m = rank();
    if (symbolic_forms_available()) {
        const auto& mp = min_poly();
        std::vector<F> out;
        out.reserve(m);
        for (const auto& s : mp.sigma) out.push_back(s.template eval<F>(x));
        return out;
    }
    if (auto s = sigma_krylov(x)) return *s;
    // Degenerate point: sigma_i is a degree-i polynomial along any line
    // through x, so recover the value at t = 0 by Lagrange interpolation
    // from generic points of the line.
    const auto& cfg = impl_->cfg;
    Sampler sampler(cfg.seed, salt::minpoly + 17);
    for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
        auto dirq = sampler.next_nonzero_vector(dim(), cfg.sample_bound);
        std::vector<F> dir;
        dir.reserve(dirq.size());
        for (const auto& c : dirq) dir.push_back(F(c));
        std::vector<long> ts;
        std::vector<std::vector<F>> vals;
        for (long t = 1; int(ts.size()) < m + 1 && t <= 8 * (m + 1); ++t) {
            std::vector<F> pt(x);
            for (int i = 0; i < dim(); ++i) pt[i] += F(Rational(t)) * dir[i];
            if (auto s = sigma_krylov(pt)) {
                ts.push_back(t);
                vals.push_back(*s);
            }
        }
        if (int(ts.size()) < m + 1) continue;
        // Lagrange evaluation at t = 0
        std::vector<F> out(m, F(0));
        for (std::size_t a = 0; a < ts.size(); ++a) {
            Rational w(1);
            for (std::size_t b = 0; b < ts.size(); ++b)
                if (a != b) w *= Rational(-ts[b]) / Rational(ts[a] - ts[b]);
            for (int i = 0; i < m; ++i) out[i] += F(w) * vals[a][i];
        }
        return out;
    }
    throw InterpolationFailure("sigma evaluation failed at a degenerate point after retries");
}

template <typename F>
F JordanAlgebra::trace_at(const std::vector<F>& x) const {
    return trace_form().template eval<F>(x);
}

template <typename F>
F JordanAlgebra::norm_at(const std::vector<F>& x) const {
    return sigma_at(x).back();
}

template <typename F>
std::vector<F> JordanAlgebra::adjoint_at(const std::vector<F>& x) const {
    const int k = dim(), m = rank();
    auto sigma = sigma_at(x);
    // x^# = sum_{i=0}^{m-1} sigma_i(x) (-x)^{m-1-i}
    std::vector<std::vector<F>> pw;
    pw.push_back(unit_as<F>());
    if (m >= 2) pw.push_back(x);
    for (int j = 2; j <= m - 1; ++j) pw.push_back(impl_->bilinear(pw[j - 1], x));
    std::vector<F> out(k, F(0));
    for (int i = 0; i <= m - 1; ++i) {
        F s = (i == 0) ? F(1) : sigma[i - 1];
        int p = m - 1 - i;
        if (p % 2 == 1) s = -s;
        for (int c = 0; c < k; ++c) out[c] += s * pw[p][c];
    }
    return out;
}

template <typename F>
std::vector<F> JordanAlgebra::invert(const std::vector<F>& x) const {
    auto sigma = sigma_at(x);
    F n = sigma.back();
    if (n.is_zero()) throw NotInvertible("norm vanishes; element not invertible");
    auto adj = adjoint_at(x);
    F inv = F(1) / n;
    for (auto& c : adj) c = c * inv;
    return adj;
}

template <typename F>
std::vector<F> JordanAlgebra::sharp(const std::vector<F>& x, const std::vector<F>& y) const {
    std::vector<F> sum(x);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
    auto a = adjoint_at(sum);
    auto bx = adjoint_at(x);
    auto by = adjoint_at(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - bx[i] - by[i];
    return a;
}

} // namespace jck
