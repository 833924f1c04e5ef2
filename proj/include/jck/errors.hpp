#pragma once

#include <stdexcept>
#include <string>

namespace jck {

// Base for all verification-level failures (CLI exit code 1).
struct Error : std::runtime_error {
    std::string module_name;
    std::string op;
    Error(std::string mod, std::string operation, const std::string& what)
        : std::runtime_error(mod + "." + operation + ": " + what),
          module_name(std::move(mod)), op(std::move(operation)) {}
};

// Malformed input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommutativityError : Error {
    CommutativityError(const std::string& w) : Error("jordan", "validate", w) {}
};
struct UnitLawError : Error {
    UnitLawError(const std::string& w) : Error("jordan", "validate", w) {}
};
struct JordanIdentityError : Error {
    JordanIdentityError(const std::string& w) : Error("jordan", "validate", w) {}
};
struct AssociativityError : Error {
    AssociativityError(const std::string& w) : Error("jordan", "from_associative", w) {}
};
struct CompositionError : Error {
    CompositionError(const std::string& w) : Error("jordan", "hermitian_h3", w) {}
};
struct NotInvertible : Error {
    NotInvertible(const std::string& w) : Error("jordan", "invert", w) {}
};
struct InterpolationFailure : Error {
    InterpolationFailure(const std::string& w) : Error("jordan", "generic_min_poly", w) {}
};
struct StructuralCheckFailed : Error {
    StructuralCheckFailed(const std::string& w) : Error("cubic", "structural_G", w) {}
};
struct GenericityFailure : Error {
    GenericityFailure(const std::string& op, const std::string& w) : Error("cubic", op, w) {}
};
struct NotProportional : Error {
    NotProportional(const std::string& w) : Error("cremona", "verify_involution", w) {}
};
struct DegenerateQ : Error {
    DegenerateQ(const std::string& w) : Error("variety", "oadp_solve", w) {}
};

} // namespace jck
