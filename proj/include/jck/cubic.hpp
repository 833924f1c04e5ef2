#pragma once

// The twisted cubic over a rank-3 Jordan algebra: points of P(Z_2(J)) in
// Zorn-matrix coordinates, the embedding nu3, the conformal automorphisms
// I, G_g, T_omega, and the twisted cubic through three general points.

#include "jck/jordan.hpp"
#include "jck/linalg.hpp"
#include "jck/projective.hpp"
#include "jck/unipoly.hpp"

#include <vector>

namespace jck {

// Homogeneous coordinates [s, x; y, t] on P^{2k+1}.
template <typename F>
struct ZornPointT {
    F s;
    std::vector<F> x, y;
    F t;

    std::vector<F> flat() const {
        std::vector<F> v;
        v.reserve(x.size() + y.size() + 2);
        v.push_back(s);
        v.insert(v.end(), x.begin(), x.end());
        v.insert(v.end(), y.begin(), y.end());
        v.push_back(t);
        return v;
    }

    static ZornPointT from_flat(const std::vector<F>& v) {
        if (v.size() < 4 || v.size() % 2 != 0)
            throw InputError("ZornPoint: flat vector must have even length 2k+2 >= 4");
        std::size_t k = v.size() / 2 - 1;
        ZornPointT p;
        p.s = v.front();
        p.x.assign(v.begin() + 1, v.begin() + 1 + k);
        p.y.assign(v.begin() + 1 + k, v.begin() + 1 + 2 * k);
        p.t = v.back();
        return p;
    }
};

using ZornPoint = ZornPointT<Rational>;

template <typename F>
bool zorn_equal(const ZornPointT<F>& a, const ZornPointT<F>& b) {
    return proj_equal(a.flat(), b.flat());
}

// nu3(x) = [1 : x : x^# : N(x)]; requires rank 3.
template <typename F>
ZornPointT<F> nu3(const JordanAlgebra& j, const std::vector<F>& x) {
    if (j.rank() != 3) throw Error("cubic", "nu3", "algebra rank is not 3");
    ZornPointT<F> p;
    p.s = F(1);
    p.x = x;
    p.y = j.adjoint_at(x);
    p.t = j.norm_at(x);
    return p;
}

// I swaps s <-> t and x <-> y; an involution.
template <typename F>
ZornPointT<F> inversion_I(const ZornPointT<F>& m) {
    ZornPointT<F> p;
    p.s = m.t;
    p.x = m.y;
    p.y = m.x;
    p.t = m.s;
    return p;
}

// T_omega(M) = [s, x + s w; y + w#x + s w^#, t + T(yw) + T(x w^#) + s N(w)].
template <typename F>
ZornPointT<F> translation_T(const JordanAlgebra& j, const std::vector<F>& omega,
                            const ZornPointT<F>& m) {
    if (j.rank() != 3) throw Error("cubic", "translation_T", "algebra rank is not 3");
    const int k = j.dim();
    auto omega_sharp = j.adjoint_at(omega);
    F n_omega = j.norm_at(omega);
    auto wx = j.sharp(omega, m.x);
    ZornPointT<F> p;
    p.s = m.s;
    p.x = m.x;
    p.y = m.y;
    for (int i = 0; i < k; ++i) {
        p.x[i] += m.s * omega[i];
        p.y[i] += wx[i] + m.s * omega_sharp[i];
    }
    p.t = m.t + j.trace_at(j.mul(m.y, omega)) + j.trace_at(j.mul(m.x, omega_sharp)) +
          m.s * n_omega;
    return p;
}

// G_g(M) = [s, g(x); eta g^#(y), eta t]. The pair (g^#, eta) must satisfy
// N(g(x)) = eta N(x) and g(x^{-1}) = (g^#(x))^{-1} exactly at seeded samples
// (the normalization that makes G_g fix the cubic); otherwise
// StructuralCheckFailed reports the witnessing sample.
struct StructuralElement {
    Matrix<Rational> g;
    Matrix<Rational> g_sharp;
    Rational eta;
};

StructuralElement make_structural(const JordanAlgebra& j, Matrix<Rational> g,
                                  Matrix<Rational> g_sharp, Rational eta);

template <typename F>
std::vector<F> apply_matrix(const Matrix<Rational>& m, const std::vector<F>& v) {
    std::vector<F> out(m.size(), F(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero()) out[i] += F(m[i][j]) * v[j];
    return out;
}

template <typename F>
ZornPointT<F> structural_G(const StructuralElement& el, const ZornPointT<F>& m) {
    ZornPointT<F> p;
    p.s = m.s;
    p.x = apply_matrix(el.g, m.x);
    p.y = apply_matrix(el.g_sharp, m.y);
    F eta(el.eta);
    for (auto& c : p.y) c = c * eta;
    p.t = m.t * eta;
    return p;
}

// A parametrized curve of degree <= 3 in P^{2k+1}: one univariate polynomial
// per Zorn coordinate, as a primitive tuple.
struct CurveParam {
    std::vector<UniPoly> components; // size 2k+2
    int algebra_dim = 0;

    int degree() const {
        int d = -1;
        for (const auto& p : components) d = std::max(d, p.degree());
        return d;
    }

    ZornPoint at(const Rational& t) const {
        std::vector<Rational> v;
        v.reserve(components.size());
        for (const auto& p : components) v.push_back(p.eval(t));
        return ZornPoint::from_flat(v);
    }

    ZornPoint at_infinity() const {
        int d = degree();
        std::vector<Rational> v;
        v.reserve(components.size());
        for (const auto& p : components) v.push_back(p.coeff(d));
        return ZornPoint::from_flat(v);
    }

    // Dimension of the projective span of the curve: rank of the
    // (coordinates x powers-of-t) coefficient matrix.
    int span_dim() const;

    // Does p lie on the image of the curve (over the algebraic closure)?
    bool passes_through(const ZornPoint& p) const;
};

// The rational normal cubic through nu3(x), nu3(y), nu3(z), parametrized so
// that t=0 gives nu3(y), t=1 gives nu3(z) and t=infinity gives nu3(x).
// Genericity: y1 = y-x, z1 = z-x and z2 = z1^{-1} - y1^{-1} must be
// invertible; violations raise GenericityFailure naming the culprit.
CurveParam twisted_cubic_through(const JordanAlgebra& j, const std::vector<Rational>& x,
                                 const std::vector<Rational>& y, const std::vector<Rational>& z);

} // namespace jck
