#include "jck/json_io.hpp"

#include "jck/errors.hpp"

namespace jck {

Json scalar_to_json(const Rational& r) { return r.str(); }

Rational scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InputError("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

Json scalar_vec_to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(scalar_to_json(c));
    return a;
}

std::vector<Rational> scalar_vec_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
    std::vector<Rational> v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

Json quad_to_json(const QuadScalar& q) {
    if (q.is_rational()) return q.rational_part().str();
    Json o;
    o["a"] = q.rational_part().str();
    o["b"] = q.radical_part().str();
    o["D"] = q.radicand();
    return o;
}

Json quad_vec_to_json(const std::vector<QuadScalar>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(quad_to_json(c));
    return a;
}

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json term;
        Json exps = Json::array();
        for (auto e : t.mono.e) exps.push_back(int(e));
        term["exp"] = exps;
        term["coef"] = t.coef.str();
        terms.push_back(term);
    }
    return terms;
}

MultiPoly poly_from_json(const Json& j, int expected_vars) {
    if (!j.is_array()) throw InputError("polynomial must be an array of terms, got " + j.dump());
    int nv = expected_vars;
    std::vector<MultiPoly::Term> terms;
    for (const auto& term : j) {
        if (!term.contains("exp") || !term.contains("coef"))
            throw InputError("polynomial term needs \"exp\" and \"coef\": " + term.dump());
        Monomial m;
        for (const auto& e : term["exp"]) m.e.push_back(static_cast<std::uint8_t>(e.get<int>()));
        if (nv < 0) nv = int(m.e.size());
        if (int(m.e.size()) != nv)
            throw InputError("polynomial terms disagree on variable count");
        terms.push_back({m, scalar_from_json(term["coef"])});
    }
    if (nv < 0) throw InputError("cannot infer variable count of an empty polynomial");
    return MultiPoly::from_terms(nv, std::move(terms));
}

Json unipoly_to_json(const UniPoly& p) {
    Json terms = Json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        Json term;
        term["exp"] = Json::array({i});
        term["coef"] = p.coeff(i).str();
        terms.push_back(term);
    }
    return terms;
}

Json map_to_json(const RationalMapT& m) {
    Json o;
    o["vars"] = m.source_vars;
    Json comps = Json::array();
    for (const auto& c : m.components) comps.push_back(poly_to_json(c));
    o["components"] = comps;
    return o;
}

RationalMapT map_from_json(const Json& j) {
    if (!j.contains("vars") || !j.contains("components"))
        throw InputError("map needs \"vars\" and \"components\"");
    int vars = j["vars"].get<int>();
    std::vector<MultiPoly> comps;
    for (const auto& c : j["components"]) comps.push_back(poly_from_json(c, vars));
    return RationalMapT(vars, std::move(comps));
}

Json algebra_spec_to_json(const AlgebraSpec& s) {
    Json o;
    o["dim"] = s.dim;
    o["unit"] = scalar_vec_to_json(s.unit);
    Json table = Json::array();
    for (const auto& row : s.table) {
        Json r = Json::array();
        for (const auto& cell : row) r.push_back(scalar_vec_to_json(cell));
        table.push_back(r);
    }
    o["table"] = table;
    return o;
}

AlgebraSpec algebra_spec_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("unit") || !j.contains("table"))
        throw InputError("algebra spec needs \"dim\", \"unit\" and \"table\"");
    AlgebraSpec s;
    s.dim = j["dim"].get<int>();
    s.unit = scalar_vec_from_json(j["unit"]);
    for (const auto& row : j["table"]) {
        std::vector<std::vector<Rational>> r;
        for (const auto& cell : row) r.push_back(scalar_vec_from_json(cell));
        s.table.push_back(std::move(r));
    }
    s.check_shape();
    return s;
}

Json jordan_certificate(const JordanAlgebra& alg, bool include_sigma) {
    Json o;
    o["jordan_identity"] = alg.jordan_certified_symbolically() ? "symbolic" : "sampled";
    o["rank"] = alg.rank();
    if (include_sigma) {
        Json sig = Json::array();
        for (const auto& s : alg.min_poly().sigma) sig.push_back(poly_to_json(s));
        o["sigma"] = sig;
    }
    return o;
}

Json involution_certificate_to_json(const InvolutionCertificate& c) {
    Json o;
    o["ell"] = c.ell_is_identity ? Json("identity") : [&] {
        Json rows = Json::array();
        for (const auto& row : c.ell) rows.push_back(scalar_vec_to_json(row));
        return rows;
    }();
    o["n"] = poly_to_json(c.n_cubic);
    o["n_str"] = c.n_cubic.str();
    o["m"] = poly_to_json(c.m_cubic);
    o["m_str"] = c.m_cubic.str();
    o["identities"] = Json::array({"ell.phi.phi(x) = n(x) x", "phi.ell.phi(y) = m(y) y",
                                   "m(phi(x)) = n(x)^2"});
    return o;
}

Json bidegree_report_to_json(const BidegreeReport& r) {
    Json o;
    o["component_degree"] = r.component_degree;
    o["probable_common_factor"] = r.probable_common_factor;
    o["common_factor_degree"] = r.common_factor_degree;
    o["scroll_case"] = r.scroll_case;
    o["lines_used"] = r.lines_used;
    return o;
}

Json curve_to_json(const CurveParam& c) {
    Json o;
    o["algebra_dim"] = c.algebra_dim;
    o["degree"] = c.degree();
    o["span_dim"] = c.span_dim();
    Json comps = Json::array();
    for (const auto& p : c.components) comps.push_back(unipoly_to_json(p));
    o["components"] = comps;
    return o;
}

Json variety_to_json(const VarietyParam& v) {
    Json o;
    o["r"] = v.r;
    o["ambient_dim"] = 2 * v.r + 3;
    switch (v.source) {
    case VarietySource::from_cremona: o["source"] = "from_cremona"; break;
    case VarietySource::scroll_122: o["source"] = "scroll_122"; break;
    case VarietySource::scroll_113: o["source"] = "scroll_113"; break;
    case VarietySource::a3_explicit: o["source"] = "a3_explicit"; break;
    }
    Json comps = Json::array();
    for (const auto& c : v.components) comps.push_back(poly_to_json(c));
    o["components"] = comps;
    return o;
}

Json secant_to_json(const SecantSolution& s) {
    Json o;
    o["D"] = s.D;
    o["lambda_mu"] = s.lambda_mu.str();
    o["lambda"] = quad_to_json(s.lambda);
    o["mu"] = quad_to_json(s.mu);
    o["p1"] = quad_vec_to_json(s.p1);
    o["p2"] = quad_vec_to_json(s.p2);
    o["line_check"] = s.line_check;
    o["uniqueness"] = s.uniqueness;
    return o;
}

} // namespace jck
