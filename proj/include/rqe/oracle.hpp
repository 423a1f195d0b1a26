#pragma once

#include <compare>
#include <vector>

#include "rqe/envelope.hpp"

namespace rqe {

// Exhaustive table search is only meant to cross-check the folder space
// pipeline on small orders; beyond these degrees it is hopeless anyway.
inline constexpr unsigned kOracleRackCap = 5;
inline constexpr unsigned kOracleQuandleCap = 6;

// Every labelled rack (or quandle) table on n points, by row-by-row
// backtracking over permutations with partial distributivity pruning.
std::vector<MulTable> enumerate_raw(unsigned n, Kind kind);

// Lexicographically least relabelling of the flattened table; equal forms
// characterize isomorphic tables.
struct CanonicalForm {
  std::vector<Point> bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const MulTable& table);

// One representative per isomorphism class, rebuilt from the canonical
// forms and sorted by them.
std::vector<MulTable> reduce_up_to_iso(const std::vector<MulTable>& tables);

std::vector<MulTable> enumerate_up_to_iso(unsigned n, Kind kind);

} // namespace rqe
