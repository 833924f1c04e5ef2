#pragma once

// Named constructors for the classified cubic Jordan algebras, each with its
// published adjoint/norm forms (where the source tabulates them) kept as
// reference data for cross-validation.

#include "jck/jordan.hpp"
#include "jck/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jck {

struct CatalogEntry {
    std::string name;
    AlgebraSpec spec;
    JordanAlgebra algebra;
    std::optional<RationalMapT> reference_adjoint;
    std::optional<MultiPoly> reference_norm;
    std::string provenance;
    int expected_rank = 3;
};

// Accepted names: A1 (alias CxCxC), A2, A3, A6, A7, A8, A13, A14,
// A18(lambda) with rational lambda != 1, A19, Jstar, CxJprime or
// CxJprime(r), Spin or Spin(n) (identity form on Q^n), H3R, H3C, H3H, H3O.
CatalogEntry catalog_get(const std::string& name, const RunConfig& cfg = RunConfig{});

struct CatalogRow {
    std::string name;
    int dim;
    int rank;
    std::string provenance;
};

std::vector<CatalogRow> catalog_list(const RunConfig& cfg = RunConfig{});

// The rank-3 entries of dimension <= max_dim, in listing order; the working
// set for certificate sweeps.
std::vector<std::string> catalog_rank3_names(int max_dim);

} // namespace jck
