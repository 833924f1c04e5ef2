#include "jck/cli.hpp"

#include "jck/acceptance.hpp"
#include "jck/bounds.hpp"
#include "jck/catalog.hpp"
#include "jck/cremona.hpp"
#include "jck/cubic.hpp"
#include "jck/errors.hpp"
#include "jck/json_io.hpp"
#include "jck/variety.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace jck {

namespace {

struct CliState {
    RunConfig cfg;
    std::string format = "json";
    std::string algebra_name;
    std::string algebra_file;

    JordanAlgebra load_algebra() const {
        if (!algebra_name.empty()) return catalog_get(algebra_name, cfg).algebra;
        if (!algebra_file.empty()) {
            std::ifstream in(algebra_file);
            if (!in) throw InputError("cannot open " + algebra_file);
            Json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                throw InputError("malformed JSON in " + algebra_file + ": " + e.what());
            }
            return JordanAlgebra::validate(algebra_spec_from_json(j), CheckMode::automatic, cfg);
        }
        throw InputError("need --algebra <name> or --file <spec.json>");
    }
};

Json parse_json_arg(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError("malformed JSON for " + what + ": " + e.what());
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void add_config_flags(CLI::App* cmd, CliState& st) {
    cmd->add_option("--seed", st.cfg.seed, "sampling seed");
    cmd->add_option("--samples", st.cfg.samples, "samples per certificate");
    cmd->add_option("--bound", st.cfg.sample_bound, "sample entries lie in [-B,B]");
    cmd->add_option("--retry-limit", st.cfg.retry_limit, "resampling budget");
    cmd->add_option("--symbolic-dim", st.cfg.symbolic_dim_threshold,
                    "symbolic Jordan check up to this dimension");
    cmd->add_option("--format", st.format, "json or text");
}

void add_algebra_flags(CLI::App* cmd, CliState& st) {
    cmd->add_option("--algebra", st.algebra_name, "catalog algebra name");
    cmd->add_option("--file", st.algebra_file, "JSON algebra spec file");
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliState st;
    st.cfg = RunConfig::from_env();

    CLI::App app{"exact certificates for cubic Jordan algebras, twisted cubics over them, "
                 "quadro-quadric Cremona involutions and genus-bound combinatorics"};
    app.require_subcommand(1);

    // ---- algebra ----
    auto* algebra = app.add_subcommand("algebra", "validate and query a Jordan algebra");
    algebra->require_subcommand(1);
    std::string mode = "auto";
    std::string point_text, point2_text;
    bool force_symbolic = false;

    auto* a_check = algebra->add_subcommand("check", "validate the structure constants");
    a_check->add_option("--mode", mode, "auto, symbolic or sampled");
    auto* a_rank = algebra->add_subcommand("rank", "rank of the algebra");
    auto* a_minpoly = algebra->add_subcommand("minpoly", "generic minimum polynomial");
    a_minpoly->add_flag("--force-symbolic", force_symbolic,
                        "compute symbolic forms beyond the default dimension limit");
    auto* a_adjoint = algebra->add_subcommand("adjoint", "adjoint form or value");
    a_adjoint->add_option("--point", point_text, "evaluate at a point (JSON vector)");
    a_adjoint->add_flag("--force-symbolic", force_symbolic);
    auto* a_norm = algebra->add_subcommand("norm", "norm form or value");
    a_norm->add_option("--point", point_text, "evaluate at a point (JSON vector)");
    a_norm->add_flag("--force-symbolic", force_symbolic);
    auto* a_invert = algebra->add_subcommand("invert", "Jordan inverse of a point");
    a_invert->add_option("--point", point_text, "point (JSON vector)")->required();
    for (auto* c : {a_check, a_rank, a_minpoly, a_adjoint, a_norm, a_invert}) {
        add_algebra_flags(c, st);
        add_config_flags(c, st);
    }

    // ---- catalog ----
    auto* catalog = app.add_subcommand("catalog", "the classified algebras");
    catalog->require_subcommand(1);
    auto* c_list = catalog->add_subcommand("list", "all entries with dim, rank, provenance");
    std::string show_name;
    auto* c_show = catalog->add_subcommand("show", "spec and reference forms of one entry");
    c_show->add_option("name", show_name, "catalog name")->required();
    for (auto* c : {c_list, c_show}) add_config_flags(c, st);

    // ---- cubic ----
    auto* cubic = app.add_subcommand("cubic", "twisted cubic over a rank-3 algebra");
    cubic->require_subcommand(1);
    auto* cu_nu3 = cubic->add_subcommand("nu3", "embed a point: [1 : x : x# : N(x)]");
    cu_nu3->add_option("--point", point_text, "algebra element (JSON vector)")->required();
    std::string points_text, kind_text, omega_text, gmat_text, gsharp_text, eta_text;
    auto* cu_through = cubic->add_subcommand("through", "twisted cubic through three points");
    cu_through->add_option("--points", points_text, "three algebra elements (JSON)")->required();
    auto* cu_auto = cubic->add_subcommand("automorphism", "apply I, T_omega or G_g");
    cu_auto->add_option("--kind", kind_text, "I, T or G")->required();
    cu_auto->add_option("--point", point_text, "Zorn coordinates, flat 2k+2 vector")->required();
    cu_auto->add_option("--omega", omega_text, "translation parameter (for T)");
    cu_auto->add_option("--g", gmat_text, "matrix g (for G)");
    cu_auto->add_option("--g-sharp", gsharp_text, "matrix g# (for G)");
    cu_auto->add_option("--eta", eta_text, "norm multiplier eta (for G)");
    for (auto* c : {cu_nu3, cu_through, cu_auto}) {
        add_algebra_flags(c, st);
        add_config_flags(c, st);
    }

    // ---- cremona ----
    auto* cremona = app.add_subcommand("cremona", "quadro-quadric involution certificates");
    cremona->require_subcommand(1);
    std::string map_text, ell_text;
    auto* cr_verify = cremona->add_subcommand("verify", "involution certificate");
    cr_verify->add_option("--map", map_text, "quadratic map (JSON)");
    cr_verify->add_option("--ell", ell_text, "matrix ell (JSON rows); identity if omitted");
    auto* cr_bidegree = cremona->add_subcommand("bidegree", "type report and factor check");
    cr_bidegree->add_option("--map", map_text, "quadratic map (JSON)");
    for (auto* c : {cr_verify, cr_bidegree}) {
        add_algebra_flags(c, st);
        add_config_flags(c, st);
    }

    // ---- variety ----
    auto* variety = app.add_subcommand("variety", "cubic parametrizations and the secant solver");
    variety->require_subcommand(1);
    std::string line_text, q_text, scroll_text;
    int scroll_r = 2;
    auto* v_param = variety->add_subcommand("param", "the 2r+4 cubics of the parametrization");
    v_param->add_option("--scroll", scroll_text, "S122 or S113 instead of an algebra");
    v_param->add_option("--r", scroll_r, "scroll parameter r");
    auto* v_line = variety->add_subcommand("line-image", "restriction to a line");
    v_line->add_option("--line", line_text, "[p, q] in JSON, points of P^{r+1}")->required();
    auto* v_three = variety->add_subcommand("three-point", "curve through three points + membership");
    v_three->add_option("--points", points_text, "three affine points (JSON)")->required();
    auto* v_oadp = variety->add_subcommand("oadp", "unique secant through a general point");
    v_oadp->add_option("--q", q_text, "ambient point, flat 2k+2 vector (JSON)")->required();
    for (auto* c : {v_param, v_line, v_three, v_oadp}) {
        add_algebra_flags(c, st);
        add_config_flags(c, st);
    }

    // ---- bounds ----
    auto* bnd = app.add_subcommand("bounds", "genus-bound combinatorics");
    bnd->require_subcommand(1);
    long br = 1, bn = 2, bdelta = -1, bd = -1, bk = 1;
    long tr_hi = 6, tn_hi = 8, tdelta_hi = 20;
    auto* b_pi = bnd->add_subcommand("pi", "Castelnuovo-Harris bound pi(r,n,d)");
    b_pi->add_option("--r", br)->required();
    b_pi->add_option("--n", bn)->required();
    b_pi->add_option("--d", bd)->required();
    auto* b_pibar = bnd->add_subcommand("pibar", "pibar(r,n,delta)");
    b_pibar->add_option("--r", br)->required();
    b_pibar->add_option("--n", bn)->required();
    b_pibar->add_option("--delta", bdelta)->required();
    auto* b_equal = bnd->add_subcommand("equal", "pibar(r,n,delta) = pi(r,n,delta+r(n-1)+2)");
    b_equal->add_option("--r", br)->required();
    b_equal->add_option("--n", bn)->required();
    b_equal->add_option("--delta", bdelta)->required();
    auto* b_degree = bnd->add_subcommand("degree", "degree bound delta^{r+1}/(n-1)^r");
    b_degree->add_option("--r", br)->required();
    b_degree->add_option("--n", bn)->required();
    b_degree->add_option("--delta", bdelta)->required();
    auto* b_theta = bnd->add_subcommand("theta", "scroll threshold theta(r,n,k)");
    b_theta->add_option("--r", br)->required();
    b_theta->add_option("--n", bn)->required();
    b_theta->add_option("--k", bk)->required();
    auto* b_table = bnd->add_subcommand("table", "TSV grid of pibar/pi values");
    b_table->add_option("--r-max", tr_hi);
    b_table->add_option("--n-max", tn_hi);
    b_table->add_option("--delta-max", tdelta_hi);
    for (auto* c : {b_pi, b_pibar, b_equal, b_degree, b_theta, b_table}) add_config_flags(c, st);

    // ---- verify-all ----
    auto* verify_all = app.add_subcommand("verify-all", "run the whole certificate suite");
    add_config_flags(verify_all, st);

    std::vector<std::string> argv_copy(args);
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>("jck"));
    for (auto& a : argv_copy) argv.push_back(a.data());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        st.cfg.validate();

        if (a_check->parsed()) {
            CheckMode m = mode == "symbolic" ? CheckMode::symbolic
                        : mode == "sampled" ? CheckMode::sampled
                        : CheckMode::automatic;
            JordanAlgebra j = st.algebra_name.empty()
                                  ? JordanAlgebra::validate(st.load_algebra().spec(), m, st.cfg)
                                  : JordanAlgebra::validate(
                                        catalog_get(st.algebra_name, st.cfg).spec, m, st.cfg);
            emit(out, jordan_certificate(j, false));
            return 0;
        }
        if (a_rank->parsed()) {
            out << st.load_algebra().rank() << "\n";
            return 0;
        }
        if (a_minpoly->parsed()) {
            auto j = st.load_algebra();
            if (force_symbolic) j.request_symbolic_forms();
            auto cert = jordan_certificate(j, true);
            Json strs = Json::array();
            for (const auto& s : j.min_poly().sigma) strs.push_back(s.str());
            cert["sigma_str"] = strs;
            emit(out, cert);
            return 0;
        }
        if (a_adjoint->parsed() || a_norm->parsed()) {
            auto j = st.load_algebra();
            if (force_symbolic) j.request_symbolic_forms();
            bool adjoint = a_adjoint->parsed();
            if (!point_text.empty()) {
                auto x = scalar_vec_from_json(parse_json_arg(point_text, "--point"));
                if (adjoint) emit(out, scalar_vec_to_json(j.adjoint_at(x)));
                else emit(out, scalar_to_json(j.norm_at(x)));
            } else if (adjoint) {
                auto form = map_to_json(j.adjoint_form());
                Json strs = Json::array();
                for (const auto& c : j.adjoint_form().components) strs.push_back(c.str());
                form["components_str"] = strs;
                emit(out, form);
            } else {
                Json o;
                o["norm"] = poly_to_json(j.norm_form());
                o["norm_str"] = j.norm_form().str();
                emit(out, o);
            }
            return 0;
        }
        if (a_invert->parsed()) {
            auto j = st.load_algebra();
            auto x = scalar_vec_from_json(parse_json_arg(point_text, "--point"));
            emit(out, scalar_vec_to_json(j.invert(x)));
            return 0;
        }

        if (c_list->parsed()) {
            auto rows = catalog_list(st.cfg);
            if (st.format == "text") {
                out << std::left << std::setw(14) << "name" << std::setw(6) << "dim"
                    << std::setw(6) << "rank" << "provenance\n";
                for (const auto& r : rows)
                    out << std::left << std::setw(14) << r.name << std::setw(6) << r.dim
                        << std::setw(6) << r.rank << r.provenance << "\n";
            } else {
                Json a = Json::array();
                for (const auto& r : rows) {
                    Json o;
                    o["name"] = r.name;
                    o["dim"] = r.dim;
                    o["rank"] = r.rank;
                    o["provenance"] = r.provenance;
                    a.push_back(o);
                }
                emit(out, a);
            }
            return 0;
        }
        if (c_show->parsed()) {
            auto e = catalog_get(show_name, st.cfg);
            Json o;
            o["name"] = e.name;
            o["dim"] = e.algebra.dim();
            o["rank"] = e.algebra.rank();
            o["provenance"] = e.provenance;
            o["spec"] = algebra_spec_to_json(e.spec);
            if (e.reference_adjoint) {
                o["reference_adjoint"] = map_to_json(*e.reference_adjoint);
                Json strs = Json::array();
                for (const auto& c : e.reference_adjoint->components) strs.push_back(c.str());
                o["reference_adjoint_str"] = strs;
            }
            if (e.reference_norm) {
                o["reference_norm"] = poly_to_json(*e.reference_norm);
                o["reference_norm_str"] = e.reference_norm->str();
            }
            emit(out, o);
            return 0;
        }

        if (cu_nu3->parsed()) {
            auto j = st.load_algebra();
            auto x = scalar_vec_from_json(parse_json_arg(point_text, "--point"));
            emit(out, scalar_vec_to_json(nu3(j, x).flat()));
            return 0;
        }
        if (cu_through->parsed()) {
            auto j = st.load_algebra();
            auto pts = parse_json_arg(points_text, "--points");
            if (!pts.is_array() || pts.size() != 3)
                throw InputError("--points must be a JSON array of three vectors");
            auto curve = twisted_cubic_through(j, scalar_vec_from_json(pts[0]),
                                               scalar_vec_from_json(pts[1]),
                                               scalar_vec_from_json(pts[2]));
            emit(out, curve_to_json(curve));
            return 0;
        }
        if (cu_auto->parsed()) {
            auto j = st.load_algebra();
            auto p = ZornPoint::from_flat(scalar_vec_from_json(parse_json_arg(point_text, "--point")));
            ZornPoint result;
            if (kind_text == "I") {
                result = inversion_I(p);
            } else if (kind_text == "T") {
                if (omega_text.empty()) throw InputError("T needs --omega");
                result = translation_T(j, scalar_vec_from_json(parse_json_arg(omega_text, "--omega")), p);
            } else if (kind_text == "G") {
                if (gmat_text.empty() || gsharp_text.empty() || eta_text.empty())
                    throw InputError("G needs --g, --g-sharp and --eta");
                Matrix<Rational> g, gs;
                for (const auto& row : parse_json_arg(gmat_text, "--g"))
                    g.push_back(scalar_vec_from_json(row));
                for (const auto& row : parse_json_arg(gsharp_text, "--g-sharp"))
                    gs.push_back(scalar_vec_from_json(row));
                auto el = make_structural(j, g, gs, Rational::parse(eta_text));
                result = structural_G(el, p);
            } else {
                throw InputError("--kind must be I, T or G");
            }
            emit(out, scalar_vec_to_json(result.flat()));
            return 0;
        }

        auto load_cremona = [&]() -> CremonaMap {
            if (!map_text.empty())
                return CremonaMap{map_from_json(parse_json_arg(map_text, "--map"))};
            return adjoint_cremona(st.load_algebra());
        };
        if (cr_verify->parsed()) {
            auto phi = load_cremona();
            std::optional<Matrix<Rational>> ell;
            if (!ell_text.empty()) {
                Matrix<Rational> l;
                for (const auto& row : parse_json_arg(ell_text, "--ell"))
                    l.push_back(scalar_vec_from_json(row));
                ell = l;
            }
            auto cert = verify_involution(phi, ell, st.cfg);
            emit(out, involution_certificate_to_json(cert));
            return 0;
        }
        if (cr_bidegree->parsed()) {
            if (!map_text.empty()) {
                auto rep = bidegree_certificate(CremonaMap{map_from_json(
                                                    parse_json_arg(map_text, "--map"))},
                                                st.cfg);
                emit(out, bidegree_report_to_json(rep));
            } else {
                emit(out, bidegree_report_to_json(bidegree_certificate(st.load_algebra(), st.cfg)));
            }
            return 0;
        }

        auto jordan_variety = [&](const JordanAlgebra& j) {
            auto phi = adjoint_cremona(j);
            auto cert = verify_involution(phi, std::nullopt, st.cfg);
            return from_cremona(phi, cert);
        };
        if (v_param->parsed()) {
            if (!scroll_text.empty()) {
                ScrollKind kind = scroll_text == "S122" ? ScrollKind::S122
                                : scroll_text == "S113" ? ScrollKind::S113
                                : throw InputError("--scroll must be S122 or S113");
                emit(out, variety_to_json(scroll_param(kind, scroll_r)));
            } else {
                emit(out, variety_to_json(jordan_variety(st.load_algebra())));
            }
            return 0;
        }
        if (v_line->parsed()) {
            auto j = st.load_algebra();
            auto line = parse_json_arg(line_text, "--line");
            if (!line.is_array() || line.size() != 2)
                throw InputError("--line must be [p, q]");
            auto v = jordan_variety(j);
            auto li = line_image(v, scalar_vec_from_json(line[0]), scalar_vec_from_json(line[1]));
            Json o;
            o["degree"] = li.degree;
            o["span_dim"] = li.span_dim;
            Json comps = Json::array();
            for (const auto& c : li.tuple) comps.push_back(unipoly_to_json(c));
            o["tuple"] = comps;
            emit(out, o);
            return 0;
        }
        if (v_three->parsed()) {
            auto j = st.load_algebra();
            auto pts = parse_json_arg(points_text, "--points");
            if (!pts.is_array() || pts.size() != 3)
                throw InputError("--points must be a JSON array of three vectors");
            auto v = jordan_variety(j);
            bool okay = three_point_curve_check(v, j, scalar_vec_from_json(pts[0]),
                                                scalar_vec_from_json(pts[1]),
                                                scalar_vec_from_json(pts[2]));
            Json o;
            o["member"] = okay;
            emit(out, o);
            return okay ? 0 : 1;
        }
        if (v_oadp->parsed()) {
            auto j = st.load_algebra();
            auto q = ZornPoint::from_flat(scalar_vec_from_json(parse_json_arg(q_text, "--q")));
            emit(out, secant_to_json(oadp_solve(j, q)));
            return 0;
        }

        if (b_pi->parsed()) { out << bounds::pi(br, bn, bd).get_str() << "\n"; return 0; }
        if (b_pibar->parsed()) { out << bounds::pibar(br, bn, bdelta).get_str() << "\n"; return 0; }
        if (b_equal->parsed()) {
            auto w = bounds::pibar_equals_pi(br, bn, bdelta);
            Json o;
            o["equal"] = w.equal;
            o["value"] = w.value.get_str();
            o["d"] = w.d;
            emit(out, o);
            return w.equal ? 0 : 1;
        }
        if (b_degree->parsed()) { out << bounds::degree_bound(br, bn, bdelta).str() << "\n"; return 0; }
        if (b_theta->parsed()) { out << bounds::theta(br, bn, bk).get_str() << "\n"; return 0; }
        if (b_table->parsed()) {
            out << "r\tn\tdelta\td\tpibar\tpi\tequal\n";
            for (const auto& row : bounds::table(1, tr_hi, 2, tn_hi, tdelta_hi))
                out << row.r << "\t" << row.n << "\t" << row.delta << "\t" << row.d << "\t"
                    << row.pibar_value.get_str() << "\t" << row.pi_value.get_str() << "\t"
                    << (row.equal ? "yes" : "NO") << "\n";
            return 0;
        }

        if (verify_all->parsed()) {
            auto results = run_acceptance(st.cfg);
            bool all = true;
            if (st.format == "text") {
                for (const auto& r : results) {
                    all = all && r.passed;
                    out << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << " - "
                        << r.name << " (" << r.detail << ")\n";
                }
            } else {
                Json a = Json::array();
                for (const auto& r : results) {
                    all = all && r.passed;
                    Json o;
                    o["criterion"] = r.id;
                    o["name"] = r.name;
                    o["passed"] = r.passed;
                    o["detail"] = r.detail;
                    a.push_back(o);
                }
                emit(out, a);
            }
            return all ? 0 : 1;
        }
    } catch (const InputError& e) {
        Json diag;
        diag["error"] = "input";
        diag["message"] = e.what();
        err << diag.dump(2) << "\n";
        return 2;
    } catch (const Error& e) {
        Json diag;
        diag["error"] = "verification";
        diag["module"] = e.module_name;
        diag["op"] = e.op;
        diag["message"] = e.what();
        out << diag.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json diag;
        diag["error"] = "input";
        diag["message"] = e.what();
        err << diag.dump(2) << "\n";
        return 2;
    }
    err << "no subcommand handled\n";
    return 2;
}

} // namespace jck
