#pragma once

#include <vector>

#include "fssrank/types.hpp"

namespace fssrank {

// Checks every type invariant and referential link of the dataset.
// Violations are returned as data; an empty list means the dataset is valid.
std::vector<Violation> validate_dataset(const Dataset& d);

}  // namespace fssrank
