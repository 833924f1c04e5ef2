#include "jck/cubic.hpp"

namespace jck {

namespace {

std::string vec_str(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + "]";
}

} // namespace

StructuralElement make_structural(const JordanAlgebra& j, Matrix<Rational> g,
                                  Matrix<Rational> g_sharp, Rational eta) {
    const int k = j.dim();
    if (int(g.size()) != k || int(g_sharp.size()) != k)
        throw InputError("structural_G: matrix size mismatch");
    for (const auto& row : g)
        if (int(row.size()) != k) throw InputError("structural_G: g not square");
    for (const auto& row : g_sharp)
        if (int(row.size()) != k) throw InputError("structural_G: g_sharp not square");
    if (eta.is_zero()) throw InputError("structural_G: eta must be nonzero");

    const auto& cfg = j.config();
    Sampler sampler(cfg.seed, salt::structural);
    int checked = 0, guard = 0;
    while (checked < cfg.samples && guard < cfg.samples * cfg.retry_limit) {
        ++guard;
        auto x = sampler.next_vector(k, cfg.sample_bound);
        if (j.norm_at(x).is_zero()) continue;
        auto gx = apply_matrix(g, x);
        // N(g(x)) = eta N(x)
        if (j.norm_at(gx) != eta * j.norm_at(x))
            throw StructuralCheckFailed("N(g(x)) != eta N(x) at sample x=" + vec_str(x));
        // g(x^{-1}) = (g^#(x))^{-1}, the exact normalization of the adjoint
        auto gsx = apply_matrix(g_sharp, x);
        if (j.norm_at(gsx).is_zero()) continue;
        auto lhs = j.invert(x);
        lhs = apply_matrix(g, lhs);
        auto rhs = j.invert(gsx);
        if (lhs != rhs)
            throw StructuralCheckFailed("g(x^{-1}) != (g^#(x))^{-1} at sample x=" + vec_str(x));
        ++checked;
    }
    if (checked < cfg.samples)
        throw StructuralCheckFailed("could not find enough invertible samples");
    return StructuralElement{std::move(g), std::move(g_sharp), std::move(eta)};
}

int CurveParam::span_dim() const {
    int d = degree();
    Matrix<Rational> m;
    for (const auto& p : components) {
        std::vector<Rational> row;
        for (int i = 0; i <= d; ++i) row.push_back(p.coeff(i));
        m.push_back(std::move(row));
    }
    return rank(std::move(m));
}

bool CurveParam::passes_through(const ZornPoint& p) const {
    auto pv = p.flat();
    if (pv.size() != components.size())
        throw InputError("CurveParam: point has wrong coordinate count");
    // reference coordinate with nonzero point entry
    std::size_t ref = pv.size();
    for (std::size_t i = 0; i < pv.size(); ++i)
        if (!pv[i].is_zero()) { ref = i; break; }
    if (ref == pv.size()) throw InputError("CurveParam: zero point");
    // common root of p_ref * comp_i(t) - p_i * comp_ref(t), or a match at
    // t = infinity via leading coefficients
    UniPoly g;
    bool nontrivial = false;
    for (std::size_t i = 0; i < pv.size(); ++i) {
        if (i == ref) continue;
        UniPoly m = components[i] * pv[ref] - components[ref] * pv[i];
        if (m.is_zero()) continue;
        nontrivial = true;
        g = g.is_zero() ? m.monic() : gcd(g, m);
        if (g.degree() == 0) break;
    }
    if (!nontrivial) return true; // curve is constant and proportional to p
    if (!g.is_zero() && g.degree() >= 1) return true;
    return proj_equal(at_infinity().flat(), pv);
}

CurveParam twisted_cubic_through(const JordanAlgebra& j, const std::vector<Rational>& x,
                                 const std::vector<Rational>& y,
                                 const std::vector<Rational>& z) {
    if (j.rank() != 3) throw Error("cubic", "twisted_cubic_through", "algebra rank is not 3");
    const int k = j.dim();
    if (int(x.size()) != k || int(y.size()) != k || int(z.size()) != k)
        throw InputError("twisted_cubic_through: point length mismatch");

    auto sub = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> d(a);
        for (int i = 0; i < k; ++i) d[i] -= b[i];
        return d;
    };
    auto y1 = sub(y, x);
    if (j.norm_at(y1).is_zero())
        throw GenericityFailure("twisted_cubic_through", "y1 = y - x is not invertible");
    auto z1 = sub(z, x);
    if (j.norm_at(z1).is_zero())
        throw GenericityFailure("twisted_cubic_through", "z1 = z - x is not invertible");
    auto y1inv = j.invert(y1);
    auto z1inv = j.invert(z1);
    auto z2 = sub(z1inv, y1inv);
    if (j.norm_at(z2).is_zero())
        throw GenericityFailure("twisted_cubic_through",
                                "z2 = z1^{-1} - y1^{-1} is not invertible");

    // The curve is t -> nu3(x + u(t)^{-1}) with u(t) = y1^{-1} + t z2.
    // Cleared by N(u(t)) this reads, with all blocks of degree <= 3 in t:
    //   s(t) = N(u)
    //   x-block = N(u) x + u^#
    //   y-block = N(u) x^# + x # u^# + u
    //   t(t) = N(u) N(x) + T(x^# u^#) + T(x u) + 1
    auto u_at = [&](long t) {
        std::vector<Rational> u(y1inv);
        for (int i = 0; i < k; ++i) u[i] += Rational(t) * z2[i];
        return u;
    };
    // vector-valued interpolation: quadratic from values at -1, 0, 1
    auto quad_vec = [&](const std::vector<std::vector<Rational>>& v) {
        // v[0] at t=-1, v[1] at t=0, v[2] at t=1 -> coefficient vectors c0,c1,c2
        std::vector<std::vector<Rational>> c(3, std::vector<Rational>(k));
        Rational half(1, 2);
        for (int i = 0; i < k; ++i) {
            c[0][i] = v[1][i];
            c[1][i] = (v[2][i] - v[0][i]) * half;
            c[2][i] = (v[2][i] + v[0][i]) * half - v[1][i];
        }
        return c;
    };
    auto usharp_vals = std::vector<std::vector<Rational>>{
        j.adjoint_at(u_at(-1)), j.adjoint_at(u_at(0)), j.adjoint_at(u_at(1))};
    auto usharp = quad_vec(usharp_vals); // u(t)^# coefficient vectors
    // N(u(t)) cubic from values at -1, 0, 1, 2
    Rational nm1 = j.norm_at(u_at(-1)), n0 = j.norm_at(u_at(0)), n1 = j.norm_at(u_at(1)),
             n2 = j.norm_at(u_at(2));
    // c0 = n0; c1, c2, c3 from the finite differences
    Rational c0 = n0;
    Rational c2 = (n1 + nm1) / Rational(2) - n0;
    Rational c3 = (n2 - n1 + nm1 - n0 - Rational(4) * c2) / Rational(6);
    Rational c1 = n1 - n0 - c2 - c3;
    UniPoly n_u(std::vector<Rational>{c0, c1, c2, c3});

    auto xsharp = j.adjoint_at(x);
    Rational nx = j.norm_at(x);

    // u(t) linear coefficients
    std::vector<std::vector<Rational>> ucoef = {y1inv, z2};

    const int total = 2 * k + 2;
    std::vector<UniPoly> comps(total);
    comps[0] = n_u;
    // x-block
    for (int i = 0; i < k; ++i) {
        UniPoly p = n_u * x[i];
        std::vector<Rational> add(3, Rational(0));
        for (int d = 0; d < 3; ++d) add[d] = usharp[d][i];
        p = p + UniPoly(add);
        comps[1 + i] = p;
    }
    // y-block: N(u) x^# + x # u^# + u
    // x # (.) is linear, so apply it to each coefficient vector of u^#
    std::vector<std::vector<Rational>> sharp_coef;
    for (int d = 0; d < 3; ++d) sharp_coef.push_back(j.sharp(x, usharp[d]));
    for (int i = 0; i < k; ++i) {
        UniPoly p = n_u * xsharp[i];
        std::vector<Rational> add(3, Rational(0));
        for (int d = 0; d < 3; ++d) add[d] += sharp_coef[d][i];
        for (int d = 0; d < 2; ++d) add[d] += ucoef[d][i];
        p = p + UniPoly(add);
        comps[1 + k + i] = p;
    }
    // t-block: N(u) N(x) + T(x^# u^#) + T(x u) + 1
    {
        UniPoly p = n_u * nx;
        std::vector<Rational> add(3, Rational(0));
        for (int d = 0; d < 3; ++d) add[d] += j.trace_at(j.mul(xsharp, usharp[d]));
        for (int d = 0; d < 2; ++d) add[d] += j.trace_at(j.mul(x, ucoef[d]));
        add[0] += Rational(1);
        p = p + UniPoly(add);
        comps[2 * k + 1] = p;
    }

    CurveParam curve;
    curve.components = primitive_tuple(std::move(comps));
    curve.algebra_dim = k;
    return curve;
}

} // namespace jck
