#pragma once

#include "cgr/algebra.hpp"

namespace cgr {

struct CatalogEntry {
    std::string name;
    std::string description;
};

/// Names and one-line descriptions of the shipped examples, in a fixed order.
const std::vector<CatalogEntry>& catalog_list();

/// Builds (and fully validates) a shipped example. Throws Error on unknown
/// names.
Algebra catalog_build(const std::string& name);

/// Canonical spec-file text of a shipped example; identical bytes to the
/// golden fixtures.
std::string catalog_emit(const std::string& name);

}  // namespace cgr
