#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jck/catalog.hpp"
#include "jck/errors.hpp"

using namespace jck;

namespace {
RunConfig cfg() { return RunConfig{}; }
}

TEST_CASE("catalog_get: A7 row") {
    auto e = catalog_get("A7", cfg());
    REQUIRE(e.reference_adjoint.has_value());
    MultiPoly x1 = MultiPoly::variable(4, 0), x2 = MultiPoly::variable(4, 1),
              x3 = MultiPoly::variable(4, 2), x4 = MultiPoly::variable(4, 3);
    CHECK(e.reference_adjoint->components[0] == x1 * x1);
    CHECK(e.reference_adjoint->components[1] == -(x1 * x2));
    CHECK(e.reference_adjoint->components[2] == -(x1 * x3));
    CHECK(e.reference_adjoint->components[3] == Rational(2) * x2 * x3 - x1 * x4);
    CHECK(*e.reference_norm == x1 * x1 * x1);
}

TEST_CASE("catalog_get: A8 row") {
    auto e = catalog_get("A8", cfg());
    MultiPoly x1 = MultiPoly::variable(4, 0), x2 = MultiPoly::variable(4, 1),
              x3 = MultiPoly::variable(4, 2), x4 = MultiPoly::variable(4, 3);
    CHECK(e.reference_adjoint->components[3] == x2 * x2 - x1 * x4);
    CHECK(*e.reference_norm == x1 * x1 * x1);
}

TEST_CASE("catalog_get: Jstar product formula") {
    auto e = catalog_get("Jstar", cfg());
    const auto& j = e.algebra;
    Sampler s(0, salt::property);
    for (int i = 0; i < 20; ++i) {
        auto x = s.next_vector(4, 10), y = s.next_vector(4, 10);
        std::vector<Rational> expect = {
            -x[0] * y[0], x[1] * y[1], x[3] * y[3] - x[0] * y[2] - x[2] * y[0],
            (x[1] * y[3] + x[3] * y[1] - x[0] * y[3] - x[3] * y[0]) / Rational(2)};
        CHECK(j.mul(x, y) == expect);
    }
}

TEST_CASE("catalog_get: unknown names and bad parameters") {
    CHECK_THROWS_AS(catalog_get("Nope", cfg()), InputError);
    CHECK_THROWS_AS(catalog_get("A18(1)", cfg()), InputError);
    CHECK_NOTHROW(catalog_get("A18(5/3)", cfg()));
    CHECK_NOTHROW(catalog_get("CxCxC", cfg())); // alias of A1
}

TEST_CASE("reference forms match computed forms symbolically") {
    for (const auto& name :
         {"A1", "A3", "A6", "A7", "A8", "A13", "A14", "CxJprime", "Jstar"}) {
        auto e = catalog_get(name, cfg());
        REQUIRE(e.reference_adjoint.has_value());
        REQUIRE(e.reference_norm.has_value());
        const auto& adj = e.algebra.adjoint_form();
        REQUIRE(adj.components.size() == e.reference_adjoint->components.size());
        for (std::size_t i = 0; i < adj.components.size(); ++i)
            CHECK(adj.components[i] == e.reference_adjoint->components[i]);
        CHECK(e.algebra.norm_form() == *e.reference_norm);
    }
}

TEST_CASE("every entry validates with the stated rank") {
    for (const auto& row : catalog_list(cfg())) {
        if (row.name == "Spin")
            CHECK(row.rank == 2);
        else
            CHECK(row.rank == 3);
    }
}

TEST_CASE("catalog_list contents and determinism") {
    auto rows = catalog_list(cfg());
    auto find = [&](const std::string& n) -> const CatalogRow* {
        for (const auto& r : rows)
            if (r.name == n) return &r;
        return nullptr;
    };
    auto a3 = find("A3");
    REQUIRE(a3 != nullptr);
    CHECK(a3->dim == 3);
    CHECK(a3->rank == 3);
    auto h3o = find("H3O");
    REQUIRE(h3o != nullptr);
    CHECK(h3o->dim == 27);
    CHECK(h3o->rank == 3);
    CHECK(h3o->provenance.find("E7") != std::string::npos);
    auto h3r = find("H3R");
    REQUIRE(h3r != nullptr);
    CHECK(h3r->dim == 6);
    CHECK(h3r->provenance.find("LG3") != std::string::npos);

    auto rows2 = catalog_list(cfg());
    REQUIRE(rows.size() == rows2.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].name == rows2[i].name);
}

TEST_CASE("hermitian dimensions follow 3 + 3 dim(C)") {
    CHECK(catalog_get("H3R", cfg()).algebra.dim() == 6);
    CHECK(catalog_get("H3C", cfg()).algebra.dim() == 9);
    CHECK(catalog_get("H3H", cfg()).algebra.dim() == 15);
    CHECK(catalog_get("H3O", cfg()).algebra.dim() == 27);
}

TEST_CASE("dim-27 entry reports a sampled Jordan certificate by default") {
    auto e = catalog_get("H3O", cfg());
    CHECK_FALSE(e.algebra.jordan_certified_symbolically());
    auto small = catalog_get("A3", cfg());
    CHECK(small.algebra.jordan_certified_symbolically());
}
