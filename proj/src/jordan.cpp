#include "jck/jordan.hpp"

#include <algorithm>
#include <array>
#include <sstream>

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

// All exponent vectors of total degree d in k variables, lexicographically
// descending (matches the graded-lex term order within one degree).
void monomials_of_degree(int k, int d, std::vector<std::uint8_t>& cur, int pos,
                         std::vector<Monomial>& out) {
    if (pos == k - 1) {
        cur[pos] = static_cast<std::uint8_t>(d);
        out.push_back(Monomial{cur});
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[pos] = static_cast<std::uint8_t>(e);
        monomials_of_degree(k, d - e, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(int k, int d) {
    std::vector<Monomial> out;
    std::vector<std::uint8_t> cur(k, 0);
    monomials_of_degree(k, d, cur, 0, out);
    return out;
}

std::vector<MultiPoly> symbolic_vars(int nvars, int offset, int count) {
    std::vector<MultiPoly> v;
    v.reserve(count);
    for (int i = 0; i < count; ++i) v.push_back(MultiPoly::variable(nvars, offset + i));
    return v;
}

} // namespace

void AlgebraSpec::check_shape() const {
    if (dim <= 0) throw InputError("AlgebraSpec: dim must be >= 1");
    if (int(table.size()) != dim) throw InputError("AlgebraSpec: table has wrong row count");
    for (const auto& row : table) {
        if (int(row.size()) != dim) throw InputError("AlgebraSpec: table has wrong column count");
        for (const auto& cell : row)
            if (int(cell.size()) != dim)
                throw InputError("AlgebraSpec: table entry has wrong length");
    }
    if (int(unit.size()) != dim) throw InputError("AlgebraSpec: unit has wrong length");
}

void JordanAlgebra::Impl::build_sparse() {
    const int k = spec.dim;
    products.assign(k, std::vector<std::vector<std::pair<int, Rational>>>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (!spec.table[i][j][l].is_zero())
                    products[i][j].push_back({l, spec.table[i][j][l]});
}

JordanAlgebra JordanAlgebra::validate(const AlgebraSpec& spec, CheckMode mode,
                                      const RunConfig& cfg) {
    cfg.validate();
    spec.check_shape();
    auto impl = std::make_shared<Impl>();
    impl->spec = spec;
    impl->cfg = cfg;
    impl->build_sparse();
    const int k = spec.dim;

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (spec.table[i][j] != spec.table[j][i])
                throw CommutativityError("table asymmetric at basis pair (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

    for (int i = 0; i < k; ++i) {
        std::vector<Rational> basis(k, Rational(0));
        basis[i] = Rational(1);
        if (impl->bilinear(spec.unit, basis) != basis)
            throw UnitLawError("unit law fails on basis element " + std::to_string(i + 1));
    }

    bool symbolic = (mode == CheckMode::symbolic) ||
                    (mode == CheckMode::automatic && k <= cfg.symbolic_dim_threshold);
    if (symbolic) {
        auto x = symbolic_vars(2 * k, 0, k);
        auto y = symbolic_vars(2 * k, k, k);
        auto x2 = impl->symb_mul(x, x);
        auto lhs = impl->symb_mul(x2, impl->symb_mul(y, x));
        auto rhs = impl->symb_mul(impl->symb_mul(x2, y), x);
        for (int i = 0; i < k; ++i)
            if (lhs[i] != rhs[i])
                throw JordanIdentityError("x^2(yx) != (x^2 y)x; component " +
                                          std::to_string(i + 1) + " differs by " +
                                          (lhs[i] - rhs[i]).str());
        impl->jordan_symbolic = true;
    } else {
        Sampler sampler(cfg.seed, salt::jordan_check);
        for (int s = 0; s < kSampledIdentityPoints; ++s) {
            auto x = sampler.next_vector(k, cfg.sample_bound);
            auto y = sampler.next_vector(k, cfg.sample_bound);
            auto x2 = impl->bilinear(x, x);
            auto lhs = impl->bilinear(x2, impl->bilinear(y, x));
            auto rhs = impl->bilinear(impl->bilinear(x2, y), x);
            if (lhs != rhs)
                throw JordanIdentityError("x^2(yx) != (x^2 y)x at sample x=" + vec_str(x) +
                                          ", y=" + vec_str(y));
        }
        impl->jordan_symbolic = false;
    }
    return JordanAlgebra(std::move(impl));
}

std::vector<MultiPoly> JordanAlgebra::mul_symbolic(const std::vector<MultiPoly>& x,
                                                   const std::vector<MultiPoly>& y) const {
    return impl_->symb_mul(x, y);
}

int JordanAlgebra::dim() const { return impl_->spec.dim; }
const AlgebraSpec& JordanAlgebra::spec() const { return impl_->spec; }
const RunConfig& JordanAlgebra::config() const { return impl_->cfg; }
const std::vector<Rational>& JordanAlgebra::unit() const { return impl_->spec.unit; }
bool JordanAlgebra::jordan_certified_symbolically() const { return impl_->jordan_symbolic; }

void JordanAlgebra::Impl::compute_rank() const {
    const int k = spec.dim;
    Sampler sampler(cfg.seed, salt::rank);
    int best = 1;
    for (int s = 0; s < cfg.samples; ++s) {
        auto x = sampler.next_vector(k, cfg.sample_bound);
        Matrix<Rational> rows;
        rows.push_back(spec.unit);
        std::vector<Rational> p = x;
        for (int j = 1; j <= k; ++j) {
            rows.push_back(p);
            p = bilinear(p, x);
        }
        best = std::max(best, jck::rank(rows));
    }
    rank_value = best;
}

int JordanAlgebra::rank() const {
    std::call_once(impl_->rank_once, [this] { impl_->compute_rank(); });
    return impl_->rank_value;
}

void JordanAlgebra::Impl::compute_trace_form() const {
    // sigma_1 is linear: interpolate from dim generic samples.
    const int k = spec.dim;
    Sampler sampler(cfg.seed, salt::minpoly);
    for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
        Matrix<Rational> a;
        std::vector<Rational> b;
        int guard = 0;
        while (int(a.size()) < k && guard < 64 * k) {
            ++guard;
            auto x = sampler.next_vector(k, cfg.sample_bound);
            // Krylov relation at x (done inline to avoid recursion into caches)
            std::vector<std::vector<Rational>> pw;
            pw.push_back(spec.unit);
            pw.push_back(x);
            for (int j = 2; j <= rank_value; ++j) pw.push_back(bilinear(pw[j - 1], x));
            Matrix<Rational> sys(k, std::vector<Rational>(rank_value, Rational(0)));
            std::vector<Rational> rhs(k, Rational(0));
            for (int row = 0; row < k; ++row) {
                for (int j = 1; j <= rank_value; ++j) sys[row][j - 1] = pw[rank_value - j][row];
                rhs[row] = pw[rank_value][row];
            }
            auto sol = solve_unique(std::move(sys), std::move(rhs));
            if (!sol) continue;
            a.push_back(x);
            b.push_back((*sol)[0]); // sigma_1(x)
        }
        if (int(a.size()) < k) continue;
        auto coef = solve_unique(a, b);
        if (!coef) continue;
        std::vector<MultiPoly::Term> terms;
        for (int i = 0; i < k; ++i) {
            Monomial mono{std::vector<std::uint8_t>(k, 0)};
            mono.e[i] = 1;
            terms.push_back({mono, (*coef)[i]});
        }
        trace_form = MultiPoly::from_terms(k, std::move(terms));
        return;
    }
    throw InterpolationFailure("trace form interpolation exhausted its retry budget");
}

const MultiPoly& JordanAlgebra::trace_form() const {
    rank();
    std::call_once(impl_->trace_once, [this] { impl_->compute_trace_form(); });
    return impl_->trace_form;
}

void JordanAlgebra::request_symbolic_forms() const {
    std::lock_guard<std::mutex> lock(impl_->minpoly_mutex);
    impl_->forms_requested = true;
}

bool JordanAlgebra::symbolic_forms_available() const {
    std::lock_guard<std::mutex> lock(impl_->minpoly_mutex);
    return impl_->minpoly.has_value();
}

void JordanAlgebra::Impl::compute_min_poly_locked() const {
    const int k = spec.dim;
    const int m = rank_value;
    Sampler sampler(cfg.seed, salt::minpoly + 1);

    // pointwise sigma values at a (generic) sample, nullopt when degenerate
    auto sigma_sample = [&](const std::vector<Rational>& x)
        -> std::optional<std::vector<Rational>> {
        std::vector<std::vector<Rational>> pw;
        pw.push_back(spec.unit);
        pw.push_back(x);
        for (int j = 2; j <= m; ++j) pw.push_back(bilinear(pw[j - 1], x));
        Matrix<Rational> sys(k, std::vector<Rational>(m, Rational(0)));
        std::vector<Rational> rhs(k, Rational(0));
        for (int row = 0; row < k; ++row) {
            for (int j = 1; j <= m; ++j) sys[row][j - 1] = pw[m - j][row];
            rhs[row] = pw[m][row];
        }
        auto sol = solve_unique(std::move(sys), std::move(rhs));
        if (!sol) return std::nullopt;
        std::vector<Rational> sg(m);
        for (int j = 1; j <= m; ++j) sg[j - 1] = (j % 2 == 1) ? (*sol)[j - 1] : -(*sol)[j - 1];
        return sg;
    };

    // symbolic powers of the generic element
    std::vector<std::vector<MultiPoly>> pw;
    pw.push_back([&] {
        std::vector<MultiPoly> e;
        for (int i = 0; i < k; ++i) e.push_back(MultiPoly::constant(k, spec.unit[i]));
        return e;
    }());
    pw.push_back(symbolic_vars(k, 0, k));
    for (int j = 2; j <= m; ++j) pw.push_back(symb_mul(pw[j - 1], pw[1]));

    auto interpolate_sigma = [&](int degree) -> MultiPoly {
        auto monos = monomials_of_degree(k, degree);
        const int cols = int(monos.size());
        for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
            Matrix<Rational> a;
            std::vector<Rational> b;
            int guard = 0;
            while (int(a.size()) < cols && guard < 8 * cols + 64) {
                ++guard;
                auto x = sampler.next_vector(k, cfg.sample_bound);
                auto sg = sigma_sample(x);
                if (!sg) continue;
                std::vector<Rational> row;
                row.reserve(cols);
                for (const auto& mo : monos) {
                    Rational v(1);
                    for (int i = 0; i < k; ++i)
                        for (int r = 0; r < mo.e[i]; ++r) v *= x[i];
                    row.push_back(v);
                }
                a.push_back(std::move(row));
                b.push_back((*sg)[degree - 1]);
            }
            if (int(a.size()) < cols) continue;
            auto coef = solve_unique(a, b);
            if (!coef) continue;
            std::vector<MultiPoly::Term> terms;
            for (int c = 0; c < cols; ++c)
                if (!(*coef)[c].is_zero()) terms.push_back({monos[c], (*coef)[c]});
            return MultiPoly::from_terms(k, std::move(terms));
        }
        throw InterpolationFailure("sigma_" + std::to_string(degree) +
                                   " interpolation exhausted its retry budget "
                                   "(possible rank mis-estimation)");
    };

    auto newton_sigmas = [&](const MultiPoly& sigma1) -> std::vector<MultiPoly> {
        // p_j = T(x^j) symbolically; sigma_j from Newton's identities.
        std::vector<MultiPoly> p(m + 1, MultiPoly(k)); // p[j], j >= 1
        for (int j = 1; j <= m; ++j) {
            MultiPoly acc(k);
            for (const auto& t : sigma1.terms()) {
                int var = -1;
                for (int i = 0; i < k; ++i)
                    if (t.mono.e[i]) { var = i; break; }
                acc += pw[j][var] * t.coef;
            }
            p[j] = acc;
        }
        std::vector<MultiPoly> sig;
        sig.push_back(sigma1);
        for (int j = 2; j <= m; ++j) {
            MultiPoly acc = p[j];
            int sign = -1;
            for (int i = 1; i < j; ++i) {
                acc += sig[i - 1] * p[j - i] * Rational(sign);
                sign = -sign;
            }
            // acc = p_j - s1 p_{j-1} + ... = (-1)^{j+1} j sigma_j
            Rational f = Rational((j % 2 == 0) ? -1 : 1, j);
            sig.push_back(acc * f);
        }
        return sig;
    };

    auto certify = [&](const std::vector<MultiPoly>& sig) -> bool {
        for (int i = 1; i <= m; ++i)
            if (!sig[i - 1].is_homogeneous(i)) return false;
        // x^m - sigma_1 x^{m-1} + ... + (-1)^m sigma_m e = 0
        for (int comp = 0; comp < k; ++comp) {
            MultiPoly acc = pw[m][comp];
            int sign = -1;
            for (int i = 1; i <= m; ++i) {
                acc += sig[i - 1] * pw[m - i][comp] * Rational(sign);
                sign = -sign;
            }
            if (!acc.is_zero()) return false;
        }
        return true;
    };

    MultiPoly sigma1 = trace_form;
    std::vector<MultiPoly> sig;
    bool used_newton = false;
    {
        std::vector<MultiPoly> attempt;
        attempt.push_back(sigma1);
        for (int i = 2; i <= m; ++i) {
            Int count = binomial(k + i - 1, i);
            if (count > kInterpolationCap) {
                attempt = newton_sigmas(sigma1);
                used_newton = true;
                break;
            }
            attempt.push_back(interpolate_sigma(i));
        }
        sig = std::move(attempt);
    }
    if (!certify(sig)) {
        if (!used_newton)
            throw InterpolationFailure("interpolated sigmas fail the minimum polynomial "
                                       "identity (rank mis-estimation?)");
        // fall back to direct interpolation regardless of size
        sig.clear();
        sig.push_back(sigma1);
        for (int i = 2; i <= m; ++i) sig.push_back(interpolate_sigma(i));
        if (!certify(sig))
            throw InterpolationFailure("sigma forms fail certification after fallback");
    }

    GenericMinPoly mp;
    mp.m = m;
    mp.sigma = std::move(sig);
    minpoly = std::move(mp);

    // adjoint: x^# = sum_{i=0}^{m-1} sigma_i(x) (-x)^{m-1-i}
    std::vector<MultiPoly> adj(k, MultiPoly(k));
    for (int i = 0; i <= m - 1; ++i) {
        int p = m - 1 - i;
        Rational sgn((p % 2 == 0) ? 1 : -1);
        for (int comp = 0; comp < k; ++comp) {
            MultiPoly contrib = (i == 0) ? pw[p][comp] * sgn
                                         : minpoly->sigma[i - 1] * pw[p][comp] * sgn;
            adj[comp] += contrib;
        }
    }
    adjoint = RationalMapT(k, std::move(adj));
}

const GenericMinPoly& JordanAlgebra::min_poly() const {
    rank();
    trace_form();
    std::lock_guard<std::mutex> lock(impl_->minpoly_mutex);
    if (impl_->minpoly) return *impl_->minpoly;
    if (dim() > kAutoFormDim && !impl_->forms_requested)
        throw Error("jordan", "min_poly",
                    "symbolic forms for dim " + std::to_string(dim()) +
                        " need an explicit request (pointwise evaluation is the default); "
                        "call request_symbolic_forms() or pass --force-symbolic");
    impl_->compute_min_poly_locked();
    return *impl_->minpoly;
}

const MultiPoly& JordanAlgebra::norm_form() const { return min_poly().sigma.back(); }

const RationalMapT& JordanAlgebra::adjoint_form() const {
    min_poly();
    std::lock_guard<std::mutex> lock(impl_->minpoly_mutex);
    return *impl_->adjoint;
}

// ---------------------------------------------------------------------------
// constructions

namespace {

std::vector<Rational> table_mul(const AlgebraSpec& a, const std::vector<Rational>& x,
                                const std::vector<Rational>& y) {
    const int k = a.dim;
    std::vector<Rational> out(k, Rational(0));
    for (int i = 0; i < k; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < k; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (int l = 0; l < k; ++l)
                if (!a.table[i][j][l].is_zero()) out[l] += a.table[i][j][l] * f;
        }
    }
    return out;
}

std::vector<Rational> basis_vec(int k, int i) {
    std::vector<Rational> v(k, Rational(0));
    v[i] = Rational(1);
    return v;
}

} // namespace

AlgebraSpec from_associative(const AlgebraSpec& assoc) {
    assoc.check_shape();
    const int k = assoc.dim;
    // two-sided unit
    for (int i = 0; i < k; ++i) {
        auto bi = basis_vec(k, i);
        if (table_mul(assoc, assoc.unit, bi) != bi || table_mul(assoc, bi, assoc.unit) != bi)
            throw AssociativityError("unit law fails on basis element " + std::to_string(i + 1));
    }
    // associativity on basis triples (enough by trilinearity)
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                auto lhs = table_mul(assoc, assoc.table[i][j], basis_vec(k, l));
                auto rhs = table_mul(assoc, basis_vec(k, i), assoc.table[j][l]);
                if (lhs != rhs)
                    throw AssociativityError("associativity fails at basis triple (" +
                                             std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             "," + std::to_string(l + 1) + ")");
            }
    AlgebraSpec sym;
    sym.dim = k;
    sym.unit = assoc.unit;
    sym.table.assign(k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k)));
    Rational half(1, 2);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                sym.table[i][j][l] = (assoc.table[i][j][l] + assoc.table[j][i][l]) * half;
    return sym;
}

AlgebraSpec direct_product(const AlgebraSpec& a, const AlgebraSpec& b) {
    a.check_shape();
    b.check_shape();
    const int ka = a.dim, kb = b.dim, k = ka + kb;
    AlgebraSpec p;
    p.dim = k;
    p.table.assign(k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k, Rational(0))));
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < ka; ++j)
            for (int l = 0; l < ka; ++l) p.table[i][j][l] = a.table[i][j][l];
    for (int i = 0; i < kb; ++i)
        for (int j = 0; j < kb; ++j)
            for (int l = 0; l < kb; ++l) p.table[ka + i][ka + j][ka + l] = b.table[i][j][l];
    p.unit.assign(k, Rational(0));
    for (int i = 0; i < ka; ++i) p.unit[i] = a.unit[i];
    for (int i = 0; i < kb; ++i) p.unit[ka + i] = b.unit[i];
    return p;
}

AlgebraSpec spin_factor(const Matrix<Rational>& bilinear) {
    const int w = int(bilinear.size());
    if (w == 0) throw InputError("spin_factor: empty bilinear form");
    for (const auto& row : bilinear)
        if (int(row.size()) != w) throw InputError("spin_factor: form not square");
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
            if (bilinear[i][j] != bilinear[j][i])
                throw InputError("spin_factor: form not symmetric");
    const int k = w + 1;
    AlgebraSpec s;
    s.dim = k;
    s.table.assign(k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k, Rational(0))));
    s.unit = basis_vec(k, 0);
    s.table[0][0][0] = Rational(1);
    for (int i = 1; i < k; ++i) {
        s.table[0][i][i] = Rational(1);
        s.table[i][0][i] = Rational(1);
        for (int j = 1; j < k; ++j) s.table[i][j][0] = -bilinear[i - 1][j - 1];
    }
    return s;
}

CompositionAlgebraSpec split_composition(int dim) {
    CompositionAlgebraSpec c;
    c.dim = dim;
    c.table.assign(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
    c.conj.assign(dim, std::vector<Rational>(dim, Rational(0)));
    switch (dim) {
    case 1: // Q, trivial conjugation
        c.table[0][0][0] = Rational(1);
        c.conj[0][0] = Rational(1);
        c.unit = {Rational(1)};
        return c;
    case 2: // Q x Q, conjugation swaps the factors
        c.table[0][0][0] = Rational(1);
        c.table[1][1][1] = Rational(1);
        c.conj[0][1] = c.conj[1][0] = Rational(1);
        c.unit = {Rational(1), Rational(1)};
        return c;
    case 4: { // 2x2 matrices over Q, conjugation is the adjugate
        // basis: E11, E12, E21, E22 (row-major)
        auto idx = [](int r, int col) { return 2 * r + col; };
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t)
                    for (int u = 0; u < 2; ++u)
                        if (s == t) c.table[idx(r, s)][idx(t, u)][idx(r, u)] += Rational(1);
        // adj [[a,b],[c,d]] = [[d,-b],[-c,a]]
        c.conj[0][3] = Rational(1);
        c.conj[1][1] = Rational(-1);
        c.conj[2][2] = Rational(-1);
        c.conj[3][0] = Rational(1);
        c.unit = {Rational(1), Rational(0), Rational(0), Rational(1)};
        return c;
    }
    case 8: { // Zorn vector matrices (a, v; w, b), v, w in Q^3
        // basis: a, v1, v2, v3, w1, w2, w3, b
        auto cross_sign = [](int i, int j, int l) -> int {
            // epsilon_{ijl}
            if (i == j || j == l || i == l) return 0;
            if ((i + 1) % 3 == j) return 1;
            return -1;
        };
        c.table[0][0][0] = Rational(1);               // a a'
        c.table[7][7][7] = Rational(1);               // b b'
        for (int i = 0; i < 3; ++i) {
            c.table[1 + i][4 + i][0] = Rational(1);   // v . w'
            c.table[4 + i][1 + i][7] = Rational(1);   // w . v'
            c.table[0][1 + i][1 + i] = Rational(1);   // a v'
            c.table[1 + i][7][1 + i] = Rational(1);   // b' v
            c.table[4 + i][0][4 + i] = Rational(1);   // a' w
            c.table[7][4 + i][4 + i] = Rational(1);   // b w'
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) {
                    int eps = cross_sign(i, j, l);
                    if (!eps) continue;
                    c.table[4 + i][4 + j][1 + l] += Rational(eps);  // + w x w' in v-slot
                    c.table[1 + i][1 + j][4 + l] += Rational(-eps); // - v x v' in w-slot
                }
        }
        c.conj[0][7] = Rational(1);
        c.conj[7][0] = Rational(1);
        for (int i = 1; i <= 6; ++i) c.conj[i][i] = Rational(-1);
        c.unit.assign(8, Rational(0));
        c.unit[0] = c.unit[7] = Rational(1);
        return c;
    }
    default:
        throw InputError("split_composition: dim must be 1, 2, 4 or 8");
    }
}

namespace {

std::vector<Rational> comp_mul(const CompositionAlgebraSpec& c, const std::vector<Rational>& x,
                               const std::vector<Rational>& y) {
    const int k = c.dim;
    std::vector<Rational> out(k, Rational(0));
    for (int i = 0; i < k; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < k; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (int l = 0; l < k; ++l)
                if (!c.table[i][j][l].is_zero()) out[l] += c.table[i][j][l] * f;
        }
    }
    return out;
}

std::vector<Rational> comp_conj(const CompositionAlgebraSpec& c, const std::vector<Rational>& x) {
    const int k = c.dim;
    std::vector<Rational> out(k, Rational(0));
    for (int l = 0; l < k; ++l)
        for (int i = 0; i < k; ++i)
            if (!c.conj[l][i].is_zero()) out[l] += c.conj[l][i] * x[i];
    return out;
}

std::vector<MultiPoly> comp_symb_mul(const CompositionAlgebraSpec& c,
                                     const std::vector<MultiPoly>& x,
                                     const std::vector<MultiPoly>& y) {
    const int k = c.dim;
    int nv = x[0].num_vars();
    std::vector<MultiPoly> out(k, MultiPoly(nv));
    for (int i = 0; i < k; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < k; ++j) {
            if (y[j].is_zero()) continue;
            MultiPoly prod = x[i] * y[j];
            for (int l = 0; l < k; ++l)
                if (!c.table[i][j][l].is_zero()) out[l] += prod * c.table[i][j][l];
        }
    }
    return out;
}

} // namespace

AlgebraSpec hermitian_h3(const CompositionAlgebraSpec& c) {
    const int dc = c.dim;
    if (dc != 1 && dc != 2 && dc != 4 && dc != 8)
        throw InputError("hermitian_h3: composition algebra dim must be 1, 2, 4 or 8");

    // structural checks on the composition algebra
    for (int i = 0; i < dc; ++i) {
        auto bi = basis_vec(dc, i);
        if (comp_mul(c, c.unit, bi) != bi || comp_mul(c, bi, c.unit) != bi)
            throw CompositionError("composition unit law fails on basis element " +
                                   std::to_string(i + 1));
        if (comp_conj(c, comp_conj(c, bi)) != bi)
            throw CompositionError("conjugation is not an involution");
    }
    if (comp_conj(c, c.unit) != c.unit)
        throw CompositionError("conjugation does not fix the unit");
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dc; ++j) {
            auto lhs = comp_conj(c, comp_mul(c, basis_vec(dc, i), basis_vec(dc, j)));
            auto rhs = comp_mul(c, comp_conj(c, basis_vec(dc, j)), comp_conj(c, basis_vec(dc, i)));
            if (lhs != rhs)
                throw CompositionError("conjugation is not an anti-automorphism at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }

    // x * conj(x) must be q(x) * unit with q(xy) = q(x) q(y), all symbolic
    int u0 = -1;
    for (int i = 0; i < dc; ++i)
        if (!c.unit[i].is_zero()) { u0 = i; break; }
    auto xv = symbolic_vars(dc, 0, dc);
    std::vector<MultiPoly> xbar(dc, MultiPoly(dc));
    for (int l = 0; l < dc; ++l)
        for (int i = 0; i < dc; ++i)
            if (!c.conj[l][i].is_zero()) xbar[l] += xv[i] * c.conj[l][i];
    auto xxbar = comp_symb_mul(c, xv, xbar);
    MultiPoly q = xxbar[u0] / c.unit[u0];
    for (int l = 0; l < dc; ++l)
        if (xxbar[l] != q * c.unit[l])
            throw CompositionError("x * conj(x) is not a scalar multiple of the unit");
    {
        auto x2 = symbolic_vars(2 * dc, 0, dc);
        auto y2 = symbolic_vars(2 * dc, dc, dc);
        auto xy = comp_symb_mul(c, x2, y2);
        std::vector<MultiPoly> subs_x(dc), subs_y(dc);
        MultiPoly qx = q.compose(x2), qy = q.compose(y2), qxy = q.compose(xy);
        if (qxy != qx * qy)
            throw CompositionError("norm is not multiplicative: q(xy) != q(x) q(y)");
    }

    // Hermitian matrices (r1, r2, r3, x1, x2, x3), entries as in
    //   [ r1        conj(x3)  conj(x2) ]
    //   [ x3        r2        conj(x1) ]
    //   [ x2        x1        r3       ]
    const int k = 3 + 3 * dc;
    using Entry = std::vector<Rational>; // element of C
    using Mat3 = std::array<std::array<Entry, 3>, 3>;

    auto embed = [&](const std::vector<Rational>& v) -> Mat3 {
        Mat3 m;
        auto scal = [&](const Rational& s) {
            Entry e(dc, Rational(0));
            for (int i = 0; i < dc; ++i) e[i] = s * c.unit[i];
            return e;
        };
        Entry x1(v.begin() + 3, v.begin() + 3 + dc);
        Entry x2(v.begin() + 3 + dc, v.begin() + 3 + 2 * dc);
        Entry x3(v.begin() + 3 + 2 * dc, v.begin() + 3 + 3 * dc);
        m[0][0] = scal(v[0]); m[0][1] = comp_conj(c, x3); m[0][2] = comp_conj(c, x2);
        m[1][0] = x3; m[1][1] = scal(v[1]); m[1][2] = comp_conj(c, x1);
        m[2][0] = x2; m[2][1] = x1; m[2][2] = scal(v[2]);
        return m;
    };
    auto extract = [&](const Mat3& m) -> std::vector<Rational> {
        std::vector<Rational> v(k, Rational(0));
        auto as_scalar = [&](const Entry& e) {
            Rational s = e[u0] / c.unit[u0];
            for (int i = 0; i < dc; ++i)
                if (e[i] != s * c.unit[i])
                    throw CompositionError("diagonal of the symmetrized product is not scalar");
            return s;
        };
        v[0] = as_scalar(m[0][0]);
        v[1] = as_scalar(m[1][1]);
        v[2] = as_scalar(m[2][2]);
        for (int i = 0; i < dc; ++i) {
            v[3 + i] = m[2][1][i];
            v[3 + dc + i] = m[2][0][i];
            v[3 + 2 * dc + i] = m[1][0][i];
        }
        // hermitian consistency of the upper triangle
        if (comp_conj(c, m[2][1]) != m[1][2] || comp_conj(c, m[2][0]) != m[0][2] ||
            comp_conj(c, m[1][0]) != m[0][1])
            throw CompositionError("symmetrized product is not Hermitian");
        return v;
    };
    auto h3_product = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Mat3 A = embed(a), B = embed(b);
        Mat3 S;
        Rational half(1, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Entry acc(dc, Rational(0));
                for (int l = 0; l < 3; ++l) {
                    auto p = comp_mul(c, A[i][l], B[l][j]);
                    auto qq = comp_mul(c, B[i][l], A[l][j]);
                    for (int t = 0; t < dc; ++t) acc[t] += (p[t] + qq[t]) * half;
                }
                S[i][j] = std::move(acc);
            }
        return extract(S);
    };

    AlgebraSpec h;
    h.dim = k;
    h.table.assign(k, std::vector<std::vector<Rational>>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) h.table[i][j] = h3_product(basis_vec(k, i), basis_vec(k, j));
    h.unit = basis_vec(k, 0);
    h.unit[1] = h.unit[2] = Rational(1);
    return h;
}

} // namespace jck
