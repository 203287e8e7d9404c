#pragma once

#include <optional>
#include <vector>

#include "gmodule.hpp"

namespace blockeq::mod {

// Basis of the intertwiner space Hom_kG(M, N), direct fixed-point solver.
// Cost grows like (dim M * dim N)^3; use AlgebraCache::hom for big modules.
std::vector<Matrix> homSpaceDirect(const GModule& m, const GModule& n);

// Intertwiner space between two action-matrix lists (same generator count).
std::vector<Matrix> intertwinerSpace(const std::vector<Matrix>& src,
                                     const std::vector<Matrix>& dst,
                                     unsigned p, size_t dimSrc, size_t dimDst);

// Search basis combinations for a map of maximal rank: greedy coordinate
// sweep after seeded random trials. Returns (matrix, rank).
std::pair<Matrix, size_t> maxRankCombination(const std::vector<Matrix>& basis,
                                             unsigned p, Rng rng, size_t randomTries = 64);

// Quick non-isomorphism invariants, then invertible-combination search.
// Certified when both modules are known indecomposable via the composition
// pairing; see AlgebraCache::isIsomorphic for the full route.
std::optional<Matrix> isoViaHomSearch(const GModule& m, const GModule& n,
                                      const std::vector<Matrix>& homMN,
                                      const std::vector<Matrix>& homNM,
                                      Rng rng);

} // namespace blockeq::mod
