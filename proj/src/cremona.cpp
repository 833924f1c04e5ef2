#include "jck/cremona.hpp"

#include "jck/projective.hpp"
#include "jck/rng.hpp"
#include "jck/unipoly.hpp"

#include <functional>

namespace jck {

namespace {

// Lines used by the probabilistic no-common-factor certificate.
constexpr int kGcdLines = 5;

std::vector<MultiPoly> apply_linear(const Matrix<Rational>& m,
                                    const std::vector<MultiPoly>& v) {
    std::vector<MultiPoly> out(m.size(), MultiPoly(v[0].num_vars()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero()) out[i] += v[j] * m[i][j];
    return out;
}

bool is_identity(const Matrix<Rational>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

// psi must be n(x) * x; recover n by exact division after checking all
// cross-component proportionalities psi_i x_j = psi_j x_i.
MultiPoly scaled_identity_factor(const std::vector<MultiPoly>& psi, const std::string& what) {
    const int k = int(psi.size());
    const int nv = psi[0].num_vars();
    std::vector<MultiPoly> vars;
    for (int i = 0; i < k; ++i) vars.push_back(MultiPoly::variable(nv, i));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (psi[i] * vars[j] != psi[j] * vars[i])
                throw NotProportional(what + " is not a scaled identity (components " +
                                      std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                      " are not proportional)");
    for (int i = 0; i < k; ++i) {
        if (psi[i].is_zero()) continue;
        return psi[i].divide_by_variable(i);
    }
    throw NotProportional(what + " vanishes identically");
}

BidegreeReport line_gcd_report(int vars, int degree,
                               const std::function<std::vector<UniPoly>(
                                   const std::vector<Rational>&, const std::vector<Rational>&)>& restrict_fn,
                               const RunConfig& cfg) {
    BidegreeReport rep;
    rep.component_degree = degree;
    rep.lines_used = kGcdLines;
    Sampler sampler(cfg.seed, salt::gcd_lines);
    int common_deg = -1;
    for (int line = 0; line < kGcdLines; ++line) {
        // a line is general for this certificate when no component drops
        // degree along it; degenerate draws are retried
        std::vector<UniPoly> restricted;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= cfg.retry_limit)
                throw Error("cremona", "bidegree_certificate",
                            "could not sample a line in general position");
            auto p = sampler.next_nonzero_vector(vars, cfg.sample_bound);
            auto q = sampler.next_nonzero_vector(vars, cfg.sample_bound);
            if (proj_equal(p, q)) continue;
            auto cand = restrict_fn(p, q);
            bool full = true;
            for (const auto& comp : cand)
                if (comp.degree() != degree) { full = false; break; }
            if (!full) continue;
            restricted = std::move(cand);
            break;
        }
        UniPoly g;
        for (const auto& comp : restricted) g = g.is_zero() ? comp.monic() : gcd(g, comp);
        int d = g.is_zero() ? 0 : g.degree();
        common_deg = (common_deg < 0) ? d : std::min(common_deg, d);
        if (common_deg == 0) break;
    }
    rep.common_factor_degree = std::max(0, common_deg);
    rep.probable_common_factor = rep.common_factor_degree >= 1;
    rep.scroll_case = rep.probable_common_factor;
    return rep;
}

} // namespace

CremonaMap adjoint_cremona(const JordanAlgebra& j) {
    if (j.rank() != 3) throw Error("cremona", "adjoint_cremona", "algebra rank is not 3");
    return CremonaMap{j.adjoint_form()};
}

InvolutionCertificate verify_involution(const CremonaMap& phi,
                                        const std::optional<Matrix<Rational>>& ell,
                                        const RunConfig& cfg) {
    cfg.validate();
    if (phi.map.degree() != 2)
        throw InputError("verify_involution: map components must be quadratic");
    const int k = phi.vars();
    Matrix<Rational> l;
    if (ell) {
        l = *ell;
        if (int(l.size()) != k) throw InputError("verify_involution: ell has wrong size");
        for (const auto& row : l)
            if (int(row.size()) != k) throw InputError("verify_involution: ell not square");
    } else {
        l.assign(k, std::vector<Rational>(k, Rational(0)));
        for (int i = 0; i < k; ++i) l[i][i] = Rational(1);
    }

    auto phiphi = phi.map.compose(phi.map.components);
    auto lpp = apply_linear(l, phiphi);
    MultiPoly n = scaled_identity_factor(lpp, "ell.phi.phi");
    if (!n.is_homogeneous(3))
        throw NotProportional("recovered n is not a cubic form");

    InvolutionCertificate cert;
    cert.ell = std::move(l);
    cert.ell_is_identity = is_identity(cert.ell);
    cert.n_cubic = std::move(n);
    companion_cubic(phi, cert);
    return cert;
}

MultiPoly companion_cubic(const CremonaMap& phi, InvolutionCertificate& cert) {
    // m with phi.ell.phi(y) = m(y) y
    auto lphi = apply_linear(cert.ell, phi.map.components);
    RationalMapT lphi_map(phi.vars(), lphi);
    auto plp = phi.map.compose(lphi_map.components);
    MultiPoly m = scaled_identity_factor(plp, "phi.ell.phi");
    if (!m.is_homogeneous(3))
        throw NotProportional("recovered m is not a cubic form");
    // m(phi(x)) = n(x)^2
    MultiPoly mphi = m.compose(phi.map.components);
    if (mphi != cert.n_cubic * cert.n_cubic)
        throw NotProportional("m(phi(x)) != n(x)^2");
    cert.m_cubic = m;
    return m;
}

BidegreeReport bidegree_certificate(const CremonaMap& phi, const RunConfig& cfg) {
    cfg.validate();
    auto restrict_fn = [&phi](const std::vector<Rational>& p, const std::vector<Rational>& q) {
        std::vector<UniPoly> out;
        for (const auto& comp : phi.map.components) {
            // quadratic along the line: f(p) + t (f(p+q)-f(p)-f(q)) + t^2 f(q)
            Rational fp = comp.eval(p), fq = comp.eval(q);
            std::vector<Rational> pq(p);
            for (std::size_t i = 0; i < pq.size(); ++i) pq[i] += q[i];
            Rational fpq = comp.eval(pq);
            out.push_back(UniPoly({fp, fpq - fp - fq, fq}));
        }
        return out;
    };
    return line_gcd_report(phi.vars(), phi.map.degree(), restrict_fn, cfg);
}

BidegreeReport bidegree_certificate(const JordanAlgebra& j, const RunConfig& cfg) {
    cfg.validate();
    if (j.rank() != 3) throw Error("cremona", "bidegree_certificate", "algebra rank is not 3");
    auto restrict_fn = [&j](const std::vector<Rational>& p, const std::vector<Rational>& q) {
        auto fp = j.adjoint_at(p), fq = j.adjoint_at(q);
        std::vector<Rational> pq(p);
        for (std::size_t i = 0; i < pq.size(); ++i) pq[i] += q[i];
        auto fpq = j.adjoint_at(pq);
        std::vector<UniPoly> out;
        for (int i = 0; i < j.dim(); ++i)
            out.push_back(UniPoly({fp[i], fpq[i] - fp[i] - fq[i], fq[i]}));
        return out;
    };
    return line_gcd_report(j.dim(), 2, restrict_fn, cfg);
}

} // namespace jck
