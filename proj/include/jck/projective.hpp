#pragma once

// Projective points and line restrictions of rational maps.

#include "jck/linalg.hpp"
#include "jck/multipoly.hpp"
#include "jck/unipoly.hpp"

#include <stdexcept>
#include <vector>

namespace jck {

template <typename F>
struct ProjectivePointT {
    std::vector<F> coords;

    explicit ProjectivePointT(std::vector<F> c) : coords(std::move(c)) {
        bool nonzero = false;
        for (const auto& x : coords)
            if (!x.is_zero()) { nonzero = true; break; }
        if (!nonzero) throw std::domain_error("ProjectivePoint: zero coordinate vector");
    }

    std::size_t size() const { return coords.size(); }

    // Scale so the first nonzero coordinate is 1.
    ProjectivePointT normalized() const {
        for (const auto& x : coords)
            if (!x.is_zero()) {
                ProjectivePointT p(*this);
                F inv = F(1) / x;
                for (auto& y : p.coords) y = y * inv;
                return p;
            }
        throw std::domain_error("ProjectivePoint: zero vector");
    }
};

using ProjectivePoint = ProjectivePointT<Rational>;

template <typename F>
bool proj_equal(const ProjectivePointT<F>& a, const ProjectivePointT<F>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("proj_equal: coordinate-count mismatch");
    // a = lambda * b iff all 2x2 minors vanish
    std::size_t i0 = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a.coords[i].is_zero()) { i0 = i; break; }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coords[i].is_zero() != b.coords[i].is_zero()) return false;
    }
    if (i0 == a.size()) throw std::domain_error("proj_equal: zero vector");
    for (std::size_t j = 0; j < a.size(); ++j) {
        F lhs = a.coords[i0] * b.coords[j];
        F rhs = b.coords[i0] * a.coords[j];
        if (!(lhs - rhs).is_zero()) return false;
    }
    return true;
}

template <typename F>
bool proj_equal(const std::vector<F>& a, const std::vector<F>& b) {
    return proj_equal(ProjectivePointT<F>(a), ProjectivePointT<F>(b));
}

// Substitutes x -> p + t q into every component of f and returns the
// primitive tuple (common univariate factor divided out).
inline std::vector<UniPoly> restrict_to_line(const RationalMapT& f,
                                             const std::vector<Rational>& p,
                                             const std::vector<Rational>& q) {
    if (int(p.size()) != f.source_vars || int(q.size()) != f.source_vars)
        throw std::invalid_argument("restrict_to_line: point arity mismatch");
    if (proj_equal(p, q))
        throw std::invalid_argument("restrict_to_line: p and q are proportional");
    std::vector<UniPoly> out;
    out.reserve(f.components.size());
    for (const auto& comp : f.components) {
        // substitute and collect by powers of t
        std::vector<Rational> coeffs(comp.degree() + 2, Rational(0));
        for (const auto& term : comp.terms()) {
            // expand prod_i (p_i + t q_i)^{e_i}
            std::vector<Rational> acc{term.coef};
            for (int i = 0; i < comp.num_vars(); ++i) {
                for (int rep = 0; rep < term.mono.e[i]; ++rep) {
                    std::vector<Rational> nxt(acc.size() + 1, Rational(0));
                    for (std::size_t d = 0; d < acc.size(); ++d) {
                        nxt[d] += acc[d] * p[i];
                        nxt[d + 1] += acc[d] * q[i];
                    }
                    acc = std::move(nxt);
                }
            }
            for (std::size_t d = 0; d < acc.size(); ++d) coeffs[d] += acc[d];
        }
        out.emplace_back(std::move(coeffs));
    }
    return primitive_tuple(std::move(out));
}

} // namespace jck
