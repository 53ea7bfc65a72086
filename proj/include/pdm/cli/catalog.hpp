#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pdm/profile.hpp"

namespace pdm::cli {

/// A named mass profile with its default domain, F anchor and grid size.
struct CatalogEntry {
    std::string name;
    std::string expr;
    Interval domain;
    real anchor;
    std::size_t grid;
};

const std::vector<CatalogEntry>& catalog();

/// nullptr when the name is unknown.
const CatalogEntry* find_profile(const std::string& name);

}  // namespace pdm::cli
