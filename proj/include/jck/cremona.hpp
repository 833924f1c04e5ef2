#pragma once

// Quadro-quadric Cremona transformations and their involution certificates:
// ell . phi . phi (x) = n(x) x with n cubic, the companion cubic m with
// phi . ell . phi (y) = m(y) y, and m(phi(x)) = n(x)^2.

#include "jck/config.hpp"
#include "jck/jordan.hpp"
#include "jck/linalg.hpp"
#include "jck/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jck {

struct CremonaMap {
    RationalMapT map; // homogeneous degree-2 components in r+1 variables

    int vars() const { return map.source_vars; }
};

struct InvolutionCertificate {
    Matrix<Rational> ell;
    MultiPoly n_cubic;
    MultiPoly m_cubic;
    bool ell_is_identity = true;
};

// Common-factor status of a quadratic tuple, decided by univariate gcds
// along seeded lines (Monte Carlo; a factor must survive every line).
struct BidegreeReport {
    int component_degree = 0;
    bool probable_common_factor = false;
    int common_factor_degree = 0; // 0 when none detected
    bool scroll_case = false;     // common factor of degree >= 1 detected
    int lines_used = 0;
};

// phi = adjoint map of a rank-3 algebra, as a quadratic Cremona candidate.
CremonaMap adjoint_cremona(const JordanAlgebra& j);

// Verifies ell.phi.phi = n * id symbolically and recovers n by exact
// division after a cross-component proportionality check. ell defaults to
// the identity. Throws NotProportional when the composition is not a scaled
// identity.
InvolutionCertificate verify_involution(const CremonaMap& phi,
                                        const std::optional<Matrix<Rational>>& ell,
                                        const RunConfig& cfg = RunConfig{});

// The cubic m with phi.ell.phi(y) = m(y) y; checks m(phi(x)) = n(x)^2
// symbolically and stores m in the certificate.
MultiPoly companion_cubic(const CremonaMap& phi, InvolutionCertificate& cert);

BidegreeReport bidegree_certificate(const CremonaMap& phi, const RunConfig& cfg = RunConfig{});

// Same certificate computed from pointwise adjoint evaluations, so it works
// at every dimension without symbolic forms.
BidegreeReport bidegree_certificate(const JordanAlgebra& j, const RunConfig& cfg = RunConfig{});

} // namespace jck
