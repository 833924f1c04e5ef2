#pragma once

// Cubic parametrizations of the varieties 3-covered by twisted cubics:
// the tuple (x0^3 : x0^2 x_i : x0 phi_j : n) built from a Cremona involution,
// the two scroll parametrizations, line-image certificates, and the
// one-apparent-double-point secant solver over a quadratic extension.

#include "jck/cremona.hpp"
#include "jck/cubic.hpp"
#include "jck/jordan.hpp"
#include "jck/multipoly.hpp"
#include "jck/projective.hpp"
#include "jck/quad.hpp"
#include "jck/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jck {

enum class VarietySource { from_cremona, scroll_122, scroll_113, a3_explicit };

struct VarietyParam {
    int r = 0;                        // variety dimension r+1, ambient P^{2r+3}
    std::vector<MultiPoly> components; // 2r+4 cubics in r+2 variables x0..x_{r+1}
    VarietySource source = VarietySource::from_cremona;

    RationalMapT as_map() const { return RationalMapT(r + 2, components); }

    template <typename F>
    std::vector<F> eval_affine(const std::vector<F>& x) const {
        std::vector<F> full;
        full.reserve(r + 2);
        full.push_back(F(1));
        full.insert(full.end(), x.begin(), x.end());
        std::vector<F> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(c.template eval<F>(full));
        return out;
    }
};

enum class ScrollKind { S122, S113 };

struct LineImage {
    std::vector<UniPoly> tuple;
    int degree = 0;
    int span_dim = 0;
};

struct SecantSolution {
    long long D = 0;        // lambda, mu live in Q(sqrt(D)); D = 0 means rational
    Rational lambda_mu;     // lambda * mu
    QuadScalar lambda, mu;
    std::vector<QuadScalar> p1, p2; // Zorn coordinates, length 2k+2
    bool line_check = false;
    std::string uniqueness = "derivation-forced";
};

// The 2r+4 cubics (x0^3 : x0^2 x_1 : ... : x0^2 x_{r+1} : x0 phi_0 : ... :
// x0 phi_r : n). For Jordan input this is the affine chart of nu3.
VarietyParam from_cremona(const CremonaMap& phi, const InvolutionCertificate& cert);

VarietyParam scroll_param(ScrollKind kind, int r);

// Restriction of the parametrization to the line p + t q in P^{r+1}.
LineImage line_image(const VarietyParam& v, const std::vector<Rational>& p,
                     const std::vector<Rational>& q);

// Builds the twisted cubic through three affine points and checks that all
// sampled curve points lie on the image of v.
bool three_point_curve_check(const VarietyParam& v, const JordanAlgebra& j,
                             const std::vector<Rational>& x, const std::vector<Rational>& y,
                             const std::vector<Rational>& z);

// Unique secant of the twisted cubic over J through a general ambient point
// q, solved exactly over Q(sqrt(D)). DegenerateQ names the violated
// genericity condition.
SecantSolution oadp_solve(const JordanAlgebra& j, const ZornPoint& q);

} // namespace jck
