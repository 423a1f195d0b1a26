#pragma once

#include <cstdint>
#include <vector>

#include "rqe/perm.hpp"

namespace rqe {

// Guard for full element enumeration; well above every desk-scale order
// (|S_8| = 40320) but stops runaway closures of ingested generators.
inline constexpr std::size_t kMaxEnumeratedOrder = std::size_t(1) << 20;

// Degree cap for brute-force scans over the full symmetric group
// (normalizers, conjugacy tests, canonical forms).
inline constexpr unsigned kMaxSymScanDegree = 9;

// A permutation group given by generators, with its full element list
// enumerated at construction and kept sorted by image tuple. All state is
// immutable after construction, so values can be shared freely across
// threads without locking.
class PermGroup {
public:
  explicit PermGroup(unsigned degree); // trivial group
  PermGroup(unsigned degree, std::vector<Perm> generators);

  // `elements` must be the sorted element list of a subgroup; a small
  // generating set is extracted from it deterministically.
  static PermGroup from_elements(unsigned degree, std::vector<Perm> elements);

  static PermGroup symmetric(unsigned degree);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }

  bool contains(const Perm& p) const;
  bool is_trivial() const { return elements_.size() == 1; }

  // Pairwise commutation of the generators; equivalent to commutativity of
  // the whole group.
  bool is_abelian() const;

  // Same degree and same element set; generator lists may differ.
  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

private:
  PermGroup() = default;

  unsigned degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

// Orbits of the natural action, ordered by their minimal point. reps[i] is
// the minimum of orbits[i]; transversal[y] carries rep(y) to y and is the
// identity on every rep (BFS from the rep, expanding generators in list
// order, first discovery wins). stabilizers[i] is the full point stabilizer
// of reps[i].
struct OrbitData {
  std::vector<std::vector<Point>> orbits;
  std::vector<Point> reps;
  std::vector<unsigned> orbit_index_of;
  std::vector<Perm> transversal;
  std::vector<PermGroup> stabilizers;
};

OrbitData orbit_data(const PermGroup& g);

// Elements of g commuting with every generator of h. h need not be a
// subgroup of g, but degrees must match.
PermGroup centralizer_in(const PermGroup& g, const PermGroup& h);

PermGroup center(const PermGroup& g);

// Normalizer of g in the full symmetric group, by scanning S_n with the
// orbit-partition prune. Throws CapError for degrees above `cap`; compute
// the normalizer externally and use normalizer_from_generators instead.
PermGroup normalizer_in_sym(const PermGroup& g, unsigned cap = 8);

// Builds a normalizer from externally supplied generators: validates that
// each one normalizes g, then closes over them together with g's own
// generators.
PermGroup normalizer_from_generators(const PermGroup& g, const std::vector<Perm>& gens);

bool normalizes(const Perm& f, const PermGroup& g);

// All of S_n in lexicographic order.
std::vector<Perm> symmetric_elements(unsigned degree);

// Greedy generating set of a subgroup given by its sorted element list:
// scan in order, keep every element not generated by those kept so far.
// Deterministic, so catalogs and libraries are byte-reproducible.
std::vector<Perm> extract_generators(unsigned degree, const std::vector<Perm>& sorted_elements);

// Sorted element list of the subgroup generated by `seed`. Throws CapError
// when the closure exceeds `limit`.
std::vector<Perm> close_under_composition(unsigned degree, const std::vector<Perm>& seed,
                                          std::size_t limit = kMaxEnumeratedOrder);

} // namespace rqe
