#pragma once

// Exhaustive cut enumeration straight from the definition (every elementary
// cycle meets the set exactly once), independent of height functions.

#include <optional>
#include <vector>

#include "mckay/quiver.hpp"

namespace mckay {

/// All cuts, optionally restricted to one type, in increasing arrow-set
/// order. Backtracks over arrows with per-cycle hit counting.
std::vector<Cut> brute_force_cuts(const McKayQuiver& q,
                                  const std::optional<TypeVector>& type = std::nullopt);

/// Distinct types over all cuts.
std::vector<TypeVector> brute_force_types(const McKayQuiver& q);

}  // namespace mckay
