#include "jck/variety.hpp"

#include "jck/rng.hpp"

namespace jck {

namespace {

// x0^a * m for a monomial m in x1..x_{r+1}, inside r+2 variables.
MultiPoly lift(const MultiPoly& p, int extra_x0) {
    const int nv = p.num_vars() + 1;
    std::vector<MultiPoly::Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m{std::vector<std::uint8_t>(nv, 0)};
        int deg = t.mono.degree();
        int pad = extra_x0 - deg;
        if (pad < 0) throw InputError("from_cremona: component degree too high");
        m.e[0] = static_cast<std::uint8_t>(pad);
        for (int i = 0; i < p.num_vars(); ++i) m.e[i + 1] = t.mono.e[i];
        terms.push_back({m, t.coef});
    }
    return MultiPoly::from_terms(nv, std::move(terms));
}

long long squarefree_part(Int v) {
    // sign * product of primes with odd exponent; trial division, then
    // perfect-square extraction on the remaining cofactor.
    if (v == 0) return 0;
    int sign = (v < 0) ? -1 : 1;
    if (v < 0) v = -v;
    Int out(1);
    for (Int p(2); p * p <= v && p < 1000000; p += (p == 2 ? 1 : 2)) {
        if (v % p != 0) continue;
        int e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (e % 2 == 1) out *= p;
    }
    if (v > 1) {
        Int root, rem;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
        if (rem != 0) out *= v; // not a square: keep the cofactor
    }
    out *= sign;
    if (!out.fits_slong_p())
        throw DegenerateQ("discriminant exceeds the supported radicand range");
    return out.get_si();
}

} // namespace

VarietyParam from_cremona(const CremonaMap& phi, const InvolutionCertificate& cert) {
    const int k = phi.vars(); // r + 1
    VarietyParam v;
    v.r = k - 1;
    const int nv = k + 1;
    MultiPoly x0 = MultiPoly::variable(nv, 0);
    v.components.push_back(x0.pow(3));
    for (int i = 1; i <= k; ++i)
        v.components.push_back(x0 * x0 * MultiPoly::variable(nv, i));
    for (const auto& f : phi.map.components) v.components.push_back(x0 * lift(f, 2));
    v.components.push_back(lift(cert.n_cubic, 3));
    v.source = VarietySource::from_cremona;
    return v;
}

VarietyParam scroll_param(ScrollKind kind, int r) {
    if (r < 1) throw InputError("scroll_param: r must be >= 1");
    const int nv = r + 2;
    VarietyParam v;
    v.r = r;
    v.source = (kind == ScrollKind::S122) ? VarietySource::scroll_122 : VarietySource::scroll_113;
    MultiPoly x0 = MultiPoly::variable(nv, 0);
    MultiPoly x1 = MultiPoly::variable(nv, 1);
    v.components.push_back(x0.pow(3));
    for (int i = 1; i <= r + 1; ++i)
        v.components.push_back(x0 * x0 * MultiPoly::variable(nv, i));
    v.components.push_back(x0 * x1 * x1);
    for (int i = 2; i <= r + 1; ++i)
        v.components.push_back(x0 * x1 * MultiPoly::variable(nv, i));
    if (kind == ScrollKind::S122)
        v.components.push_back(x1 * x1 * MultiPoly::variable(nv, 2));
    else
        v.components.push_back(x1.pow(3));
    return v;
}

LineImage line_image(const VarietyParam& v, const std::vector<Rational>& p,
                     const std::vector<Rational>& q) {
    LineImage li;
    li.tuple = restrict_to_line(v.as_map(), p, q);
    li.degree = -1;
    for (const auto& c : li.tuple) li.degree = std::max(li.degree, c.degree());
    Matrix<Rational> m;
    for (const auto& c : li.tuple) {
        std::vector<Rational> row;
        for (int i = 0; i <= li.degree; ++i) row.push_back(c.coeff(i));
        m.push_back(std::move(row));
    }
    li.span_dim = rank(std::move(m));
    return li;
}

bool three_point_curve_check(const VarietyParam& v, const JordanAlgebra& j,
                             const std::vector<Rational>& x, const std::vector<Rational>& y,
                             const std::vector<Rational>& z) {
    if (v.source != VarietySource::from_cremona)
        throw InputError("three_point_curve_check: parametrization must come from a Cremona map");
    auto curve = twisted_cubic_through(j, x, y, z);
    // prescribed points at t = 0, 1 and infinity
    if (!zorn_equal(curve.at(Rational(0)), nu3(j, y))) return false;
    if (!zorn_equal(curve.at(Rational(1)), nu3(j, z))) return false;
    if (!proj_equal(curve.at_infinity().flat(), nu3(j, x).flat())) return false;
    // sampled curve points lie on the image of v: recover the source point
    // from the affine chart and compare against the parametrization
    const auto& cfg = j.config();
    Sampler sampler(cfg.seed, salt::variety + 3);
    int checked = 0, guard = 0;
    while (checked < cfg.samples && guard < 8 * cfg.samples) {
        ++guard;
        Rational t(sampler.next_int(8 * cfg.sample_bound));
        auto pt = curve.at(t).flat();
        if (pt[0].is_zero()) continue; // chart center
        Rational inv = pt[0].inverse();
        std::vector<Rational> affine;
        for (int i = 1; i <= j.dim(); ++i) affine.push_back(pt[i] * inv);
        auto on_v = v.eval_affine(affine);
        if (!proj_equal(on_v, pt)) return false;
        ++checked;
    }
    return checked == cfg.samples;
}

SecantSolution oadp_solve(const JordanAlgebra& j, const ZornPoint& q) {
    if (j.rank() != 3) throw Error("variety", "oadp_solve", "algebra rank is not 3");
    const int k = j.dim();
    if (int(q.x.size()) != k || int(q.y.size()) != k)
        throw InputError("oadp_solve: point has wrong coordinate count");
    if (q.s.is_zero())
        throw DegenerateQ("q lies in the hyperplane s = 0; expected a general point");

    // scale to s = 1, then translate the x-block to zero
    Rational inv = q.s.inverse();
    ZornPoint qn;
    qn.s = Rational(1);
    qn.x = q.x;
    qn.y = q.y;
    qn.t = q.t * inv;
    for (auto& c : qn.x) c *= inv;
    for (auto& c : qn.y) c *= inv;
    std::vector<Rational> shift(qn.x);
    std::vector<Rational> neg_shift(k);
    for (int i = 0; i < k; ++i) neg_shift[i] = -shift[i];
    ZornPoint qt = translation_T(j, neg_shift, qn); // now (1 : 0 : q' : z)

    const auto& qprime = qt.y;
    const Rational z = qt.t;
    if (z.is_zero()) throw DegenerateQ("z = 0 after the normalizing translation");
    Rational mq = j.norm_at(qprime); // m = n for the adjoint involution (ell = id)
    if (mq.is_zero()) throw DegenerateQ("m(q') = 0 after the normalizing translation");
    Rational denom = z * z + Rational(4) * mq;
    if (denom.is_zero()) throw DegenerateQ("z^2 + 4 m(q') = 0");

    SecantSolution sol;
    sol.lambda_mu = mq / denom;

    // 1 - 4 lambda mu = z^2 / denom; write it p/qden in lowest terms and
    // split sqrt(p/qden) = (c/qden) sqrt(D) with p*qden = D c^2.
    Rational w = Rational(1) - Rational(4) * sol.lambda_mu;
    Int pnum = w.num(), pden = w.den();
    Int prod = pnum * pden;
    long long D = squarefree_part(prod);
    sol.D = (D == 1) ? 0 : D;
    Int c2 = (D == 0) ? Int(0) : prod / Int(static_cast<long>(D));
    Int c;
    mpz_sqrt(c.get_mpz_t(), c2.get_mpz_t());
    Rational coef = Rational(c, pden); // sqrt(w) = coef * sqrt(D)
    QuadScalar sqrt_w(Rational(0), coef, D);
    QuadScalar half(Rational(1, 2));
    sol.lambda = (QuadScalar(1) + sqrt_w) * half;
    sol.mu = (QuadScalar(1) - sqrt_w) * half;

    // x1 = ((mu-lambda)/(lambda z)) (ell.phi)(q'), x2 with roles swapped
    std::vector<QuadScalar> phi_q;
    for (const auto& cc : j.adjoint_at(qprime)) phi_q.push_back(QuadScalar(cc));
    QuadScalar zq{z};
    QuadScalar f1 = (sol.mu - sol.lambda) / (sol.lambda * zq);
    QuadScalar f2 = (sol.lambda - sol.mu) / (sol.mu * zq);
    std::vector<QuadScalar> x1(k), x2(k);
    for (int i = 0; i < k; ++i) {
        x1[i] = f1 * phi_q[i];
        x2[i] = f2 * phi_q[i];
    }

    auto p1 = nu3(j, x1);
    auto p2 = nu3(j, x2);
    // undo the normalizing translation
    std::vector<QuadScalar> shift_q;
    for (const auto& cc : shift) shift_q.push_back(QuadScalar(cc));
    p1 = translation_T(j, shift_q, p1);
    p2 = translation_T(j, shift_q, p2);
    sol.p1 = p1.flat();
    sol.p2 = p2.flat();

    // q in span(p1, p2): the 3 x (2k+2) matrix has rank 2
    Matrix<QuadScalar> span;
    std::vector<QuadScalar> qrow;
    for (const auto& cc : qn.flat()) qrow.push_back(QuadScalar(cc));
    span.push_back(sol.p1);
    span.push_back(sol.p2);
    span.push_back(qrow);
    sol.line_check = (rank(span) == 2);
    return sol;
}

} // namespace jck
