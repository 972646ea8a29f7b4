#pragma once

#include "cgr/algebra.hpp"
#include "cgr/graded.hpp"

namespace cgr {

/// Outcome of loading a ring-spec file: exactly one of `algebra`,
/// `parse_error` (malformed JSON or schema, CLI exit 2) or
/// `validation_error` (an identity violation with its witness, CLI exit 1)
/// is set.
struct SpecLoadResult {
    std::optional<Algebra> algebra;
    std::optional<std::string> parse_error;
    std::optional<std::string> validation_error;
};

SpecLoadResult load_spec_text(const std::string& json_text);
SpecLoadResult load_spec_file(const std::string& path);

/// Canonical spec-file serialization; `catalog emit` prints exactly this.
std::string serialize_spec(const Algebra& a);

/// Element expressions in the grammar "coeff*u[name] + ...", e.g.
/// "u[a]", "(1-i)*u[x] + 2*u[e]", "-3*u[g]". A bare coefficient is a term of
/// degree e. Throws Error on malformed input or unknown element names.
GradedElement parse_graded_expression(const Algebra& a, const std::string& text);

}  // namespace cgr
