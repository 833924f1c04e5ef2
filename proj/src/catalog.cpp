#include "jck/catalog.hpp"

#include "jck/errors.hpp"

#include <array>

namespace jck {

namespace {

AlgebraSpec empty_spec(int k) {
    AlgebraSpec s;
    s.dim = k;
    s.table.assign(k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k, Rational(0))));
    s.unit.assign(k, Rational(0));
    return s;
}

// Commutative tables are filled symmetrically from the upper triangle.
void set_sym(AlgebraSpec& s, int i, int j, int l, const Rational& c) {
    s.table[i][j][l] = c;
    s.table[j][i][l] = c;
}

AlgebraSpec a1_spec() {
    auto s = empty_spec(3);
    for (int i = 0; i < 3; ++i) {
        s.table[i][i][i] = Rational(1);
        s.unit[i] = Rational(1);
    }
    return s;
}

AlgebraSpec a2_spec() {
    // Q x Q[X]/(X^2), basis (1-part, 1, X)
    auto s = empty_spec(3);
    s.table[0][0][0] = Rational(1);
    set_sym(s, 1, 1, 1, Rational(1));
    set_sym(s, 1, 2, 2, Rational(1));
    s.unit[0] = s.unit[1] = Rational(1);
    return s;
}

AlgebraSpec a3_spec() {
    // Q[X]/(X^3): (x,y,z)(x',y',z') = (xx', xy'+x'y, xz'+x'z+yy')
    auto s = empty_spec(3);
    set_sym(s, 0, 0, 0, Rational(1));
    set_sym(s, 0, 1, 1, Rational(1));
    set_sym(s, 0, 2, 2, Rational(1));
    set_sym(s, 1, 1, 2, Rational(1));
    s.unit[0] = Rational(1);
    return s;
}

AlgebraSpec a6_spec() {
    // Q x Q[X,Y]/(X,Y)^2, basis (1-part, 1, X, Y)
    auto s = empty_spec(4);
    s.table[0][0][0] = Rational(1);
    set_sym(s, 1, 1, 1, Rational(1));
    set_sym(s, 1, 2, 2, Rational(1));
    set_sym(s, 1, 3, 3, Rational(1));
    s.unit[0] = s.unit[1] = Rational(1);
    return s;
}

AlgebraSpec a7_spec() {
    // Q[X,Y]/(X^2,Y^2), basis (1, X, Y, XY)
    auto s = empty_spec(4);
    set_sym(s, 0, 0, 0, Rational(1));
    set_sym(s, 0, 1, 1, Rational(1));
    set_sym(s, 0, 2, 2, Rational(1));
    set_sym(s, 0, 3, 3, Rational(1));
    set_sym(s, 1, 2, 3, Rational(1));
    s.unit[0] = Rational(1);
    return s;
}

AlgebraSpec a8_spec() {
    // Q[X,Y]/(X^3, XY, Y^2), basis (1, X, Y, X^2)
    auto s = empty_spec(4);
    set_sym(s, 0, 0, 0, Rational(1));
    set_sym(s, 0, 1, 1, Rational(1));
    set_sym(s, 0, 2, 2, Rational(1));
    set_sym(s, 0, 3, 3, Rational(1));
    set_sym(s, 1, 1, 3, Rational(1));
    s.unit[0] = Rational(1);
    return s;
}

AlgebraSpec a13_assoc_spec() {
    // Q x upper-triangular 2x2 matrices, basis (1-part, E11, E12, E22)
    auto s = empty_spec(4);
    s.table[0][0][0] = Rational(1);
    s.table[1][1][1] = Rational(1); // E11 E11 = E11
    s.table[1][2][2] = Rational(1); // E11 E12 = E12
    s.table[2][3][2] = Rational(1); // E12 E22 = E12
    s.table[3][3][3] = Rational(1); // E22 E22 = E22
    s.unit = {Rational(1), Rational(1), Rational(0), Rational(1)};
    return s;
}

AlgebraSpec a14_assoc_spec() {
    // matrices [[a,0,0],[c,a,0],[d,0,b]], basis order (a, b, c, d);
    // (a,b,c,d)(a',b',c',d') = (aa', bb', ca'+ac', da'+bd')
    auto s = empty_spec(4);
    s.table[0][0][0] = Rational(1);
    s.table[1][1][1] = Rational(1);
    s.table[2][0][2] = Rational(1); // c a'
    s.table[0][2][2] = Rational(1); // a c'
    s.table[3][0][3] = Rational(1); // d a'
    s.table[1][3][3] = Rational(1); // b d'
    s.unit = {Rational(1), Rational(1), Rational(0), Rational(0)};
    return s;
}

AlgebraSpec a18_assoc_spec(const Rational& lambda) {
    // Q<X,Y>/(X^2, Y^2, YX - lambda XY), basis (1, X, Y, XY)
    auto s = empty_spec(4);
    s.table[0][0][0] = Rational(1);
    s.table[0][1][1] = s.table[1][0][1] = Rational(1);
    s.table[0][2][2] = s.table[2][0][2] = Rational(1);
    s.table[0][3][3] = s.table[3][0][3] = Rational(1);
    s.table[1][2][3] = Rational(1);    // X Y = XY
    s.table[2][1][3] = lambda;         // Y X = lambda XY
    s.unit = {Rational(1), Rational(0), Rational(0), Rational(0)};
    return s;
}

AlgebraSpec a19_assoc_spec() {
    // Q<X,Y>/(Y^2, X^2+YX, XY+YX): X^2 = XY, YX = -XY; basis (1, X, Y, XY)
    auto s = empty_spec(4);
    s.table[0][0][0] = Rational(1);
    s.table[0][1][1] = s.table[1][0][1] = Rational(1);
    s.table[0][2][2] = s.table[2][0][2] = Rational(1);
    s.table[0][3][3] = s.table[3][0][3] = Rational(1);
    s.table[1][1][3] = Rational(1);     // X X = XY
    s.table[1][2][3] = Rational(1);     // X Y = XY
    s.table[2][1][3] = Rational(-1);    // Y X = -XY
    s.unit = {Rational(1), Rational(0), Rational(0), Rational(0)};
    return s;
}

AlgebraSpec jstar_spec() {
    // x*y = (-x1y1, x2y2, x4y4 - x1y3 - x3y1, (x2y4 + x4y2 - x1y4 - x4y1)/2)
    auto s = empty_spec(4);
    Rational half(1, 2);
    s.table[0][0][0] = Rational(-1);
    s.table[1][1][1] = Rational(1);
    set_sym(s, 3, 3, 2, Rational(1));
    set_sym(s, 0, 2, 2, Rational(-1));
    set_sym(s, 1, 3, 3, half);
    set_sym(s, 0, 3, 3, -half);
    s.unit = {Rational(-1), Rational(1), Rational(0), Rational(0)};
    return s;
}

Matrix<Rational> identity_form(int n) {
    Matrix<Rational> b(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) b[i][i] = Rational(1);
    return b;
}

AlgebraSpec rational_line() {
    auto s = empty_spec(1);
    s.table[0][0][0] = Rational(1);
    s.unit[0] = Rational(1);
    return s;
}

MultiPoly mono(int nv, std::initializer_list<int> vars, const Rational& c = Rational(1)) {
    Monomial m{std::vector<std::uint8_t>(nv, 0)};
    for (int v : vars) m.e[v] += 1;
    return MultiPoly::from_terms(nv, {{m, c}});
}

struct ParsedName {
    std::string base;
    std::optional<std::string> arg;
};

ParsedName parse_name(const std::string& name) {
    auto open = name.find('(');
    if (open == std::string::npos) return {name, std::nullopt};
    if (name.back() != ')') throw InputError("catalog: malformed name '" + name + "'");
    return {name.substr(0, open), name.substr(open + 1, name.size() - open - 2)};
}

} // namespace

CatalogEntry catalog_get(const std::string& raw_name, const RunConfig& cfg) {
    auto [base, arg] = parse_name(raw_name);
    if (base == "CxCxC") base = "A1";

    AlgebraSpec spec;
    std::optional<RationalMapT> ref_adj;
    std::optional<MultiPoly> ref_norm;
    std::string provenance;
    int expected_rank = 3;
    std::string canonical = base;

    if (base == "A1") {
        spec = a1_spec();
        ref_adj = RationalMapT(3, {mono(3, {1, 2}), mono(3, {0, 2}), mono(3, {0, 1})});
        ref_norm = mono(3, {0, 1, 2});
        provenance = "dim-3 associative list; adjoint is the ordinary quadratic transformation";
    } else if (base == "A2") {
        spec = a2_spec();
        provenance = "dim-3 associative list, C x C[X]/(X^2); cubic is P1 x S02";
    } else if (base == "A3") {
        spec = a3_spec();
        ref_adj = RationalMapT(3, {mono(3, {0, 0}), mono(3, {0, 1}, Rational(-1)),
                                   mono(3, {1, 1}) - mono(3, {0, 2})});
        ref_norm = mono(3, {0, 0, 0});
        provenance = "dim-3 associative list, C[X]/(X^3), with its displayed adjoint and norm";
    } else if (base == "A6") {
        spec = a6_spec();
        ref_adj = RationalMapT(4, {mono(4, {1, 1}), mono(4, {0, 1}),
                                   mono(4, {0, 2}, Rational(-1)), mono(4, {0, 3}, Rational(-1))});
        ref_norm = mono(4, {0, 1, 1});
        provenance = "dim-4 table, row A6; cubic is P1 x S002";
    } else if (base == "A7") {
        spec = a7_spec();
        ref_adj = RationalMapT(4, {mono(4, {0, 0}), mono(4, {0, 1}, Rational(-1)),
                                   mono(4, {0, 2}, Rational(-1)),
                                   mono(4, {1, 2}, Rational(2)) - mono(4, {0, 3})});
        ref_norm = mono(4, {0, 0, 0});
        provenance = "dim-4 table, row A7";
    } else if (base == "A8") {
        spec = a8_spec();
        ref_adj = RationalMapT(4, {mono(4, {0, 0}), mono(4, {0, 1}, Rational(-1)),
                                   mono(4, {0, 2}, Rational(-1)),
                                   mono(4, {1, 1}) - mono(4, {0, 3})});
        ref_norm = mono(4, {0, 0, 0});
        provenance = "dim-4 table, row A8";
    } else if (base == "A13") {
        spec = from_associative(a13_assoc_spec());
        ref_adj = RationalMapT(4, {mono(4, {1, 3}), mono(4, {0, 3}),
                                   mono(4, {0, 2}, Rational(-1)), mono(4, {0, 1})});
        ref_norm = mono(4, {0, 1, 3});
        provenance = "dim-4 table, row A13+ (C x triangular 2x2 matrices); cubic is P1 x S011";
    } else if (base == "A14") {
        spec = from_associative(a14_assoc_spec());
        ref_adj = RationalMapT(4, {mono(4, {0, 1}), mono(4, {0, 0}),
                                   mono(4, {1, 2}, Rational(-1)), mono(4, {0, 3}, Rational(-1))});
        ref_norm = mono(4, {0, 0, 1});
        provenance = "dim-4 table, row A14+";
    } else if (base == "A18") {
        Rational lambda = arg ? Rational::parse(*arg) : Rational(2);
        if (lambda == Rational(1))
            throw InputError("catalog: A18 requires lambda != 1 (lambda = 1 is A7)");
        if (lambda == Rational(-1))
            throw InputError("catalog: A18 with lambda = -1 has rank 2, not 3");
        spec = from_associative(a18_assoc_spec(lambda));
        canonical = "A18(" + lambda.str() + ")";
        provenance = "dim-4 noncommutative case A18(lambda); A18(lambda)+ ~ A7";
    } else if (base == "A19") {
        spec = from_associative(a19_assoc_spec());
        provenance = "dim-4 noncommutative case A19; A19+ ~ A8";
    } else if (base == "Jstar") {
        spec = jstar_spec();
        ref_adj = RationalMapT(4, {mono(4, {0, 1}), mono(4, {0, 0}),
                                   mono(4, {3, 3}) - mono(4, {1, 2}), mono(4, {0, 3})});
        ref_norm = mono(4, {0, 0, 1});
        provenance = "dim-4 table, row Jstar (non-associative example with displayed product)";
    } else if (base == "CxJprime") {
        int r = arg ? std::stoi(*arg) : 3;
        if (r < 2) throw InputError("catalog: CxJprime needs r >= 2");
        spec = direct_product(rational_line(), spin_factor(identity_form(r - 1)));
        canonical = (r == 3) ? "CxJprime" : "CxJprime(" + std::to_string(r) + ")";
        if (r == 3) {
            ref_adj = RationalMapT(
                4, {mono(4, {1, 1}) + mono(4, {2, 2}) + mono(4, {3, 3}), mono(4, {0, 1}),
                    mono(4, {0, 2}, Rational(-1)), mono(4, {0, 3}, Rational(-1))});
            ref_norm = mono(4, {0, 1, 1}) + mono(4, {0, 2, 2}) + mono(4, {0, 3, 3});
        }
        provenance = "dim-4 table, row C x J'; cubic is P1 x Q";
    } else if (base == "Spin") {
        int n = arg ? std::stoi(*arg) : 2;
        if (n < 1) throw InputError("catalog: Spin needs n >= 1");
        spec = spin_factor(identity_form(n));
        canonical = (n == 2) ? "Spin" : "Spin(" + std::to_string(n) + ")";
        expected_rank = 2;
        provenance = "rank-2 spin factor C + W with the identity form";
    } else if (base == "H3R") {
        spec = hermitian_h3(split_composition(1));
        provenance = "simple rank-3 table: Sym3, Lagrangian grassmannian LG3(C6) in P13";
    } else if (base == "H3C") {
        spec = hermitian_h3(split_composition(2));
        provenance = "simple rank-3 table: M3, Grassmannian G3(C6) in P19";
    } else if (base == "H3H") {
        spec = hermitian_h3(split_composition(4));
        provenance = "simple rank-3 table: Alt6, orthogonal Grassmannian OG6(C12) in P31";
    } else if (base == "H3O") {
        spec = hermitian_h3(split_composition(8));
        provenance = "simple rank-3 table: 27-dimensional E7-variety in P55";
    } else {
        throw InputError("catalog: unknown algebra '" + raw_name + "'");
    }

    CatalogEntry entry{canonical,
                       spec,
                       JordanAlgebra::validate(spec, CheckMode::automatic, cfg),
                       std::move(ref_adj),
                       std::move(ref_norm),
                       std::move(provenance),
                       expected_rank};
    return entry;
}

std::vector<CatalogRow> catalog_list(const RunConfig& cfg) {
    static const char* names[] = {"A1",   "A2",  "A3",  "A6",  "A7",  "A8",
                                  "A13",  "A14", "A18", "A19", "Jstar",
                                  "CxJprime", "Spin", "H3R", "H3C", "H3H", "H3O"};
    std::vector<CatalogRow> rows;
    for (const char* n : names) {
        auto e = catalog_get(n, cfg);
        rows.push_back({e.name, e.algebra.dim(), e.algebra.rank(), e.provenance});
    }
    return rows;
}

std::vector<std::string> catalog_rank3_names(int max_dim) {
    static const std::array<std::pair<const char*, int>, 16> all = {{
        {"A1", 3}, {"A2", 3}, {"A3", 3}, {"A6", 4}, {"A7", 4}, {"A8", 4},
        {"A13", 4}, {"A14", 4}, {"A18", 4}, {"A19", 4}, {"Jstar", 4},
        {"CxJprime", 4}, {"H3R", 6}, {"H3C", 9}, {"H3H", 15}, {"H3O", 27},
    }};
    std::vector<std::string> out;
    for (const auto& [n, d] : all)
        if (d <= max_dim) out.push_back(n);
    return out;
}

} // namespace jck
