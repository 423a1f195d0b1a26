#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rqe/envelope.hpp"
#include "rqe/perm_group.hpp"

namespace rqe {

// Permutation induced by a normalizer element on orbit representative
// indices: xi maps to the index of the orbit containing f(reps[xi]).
Perm induced_perm(const OrbitData& orbits, const Perm& f);

// Functional digraph of one normalizer element on candidate vertices.
// Vertex (part zi, digit c) has the single out-edge to
// (target_part[zi], target_index[zi][c]); a folder is fixed by f exactly
// when its digits follow every edge.
struct FixDigraph {
  std::vector<unsigned> target_part;
  std::vector<std::vector<std::uint32_t>> target_index;
  Perm induced;                       // target_part as a permutation of parts
  std::vector<unsigned> cycle_reps;   // minimal part index per induced cycle
  std::vector<std::uint64_t> part_sizes;
};

FixDigraph fix_digraph(const FolderSpace& space, const Perm& f);

// Per induced cycle: how many vertices of the representative part return
// to themselves after exactly the cycle length out-steps. The fixed
// folders factor over the cycles, one free digit choice each.
struct CycleCount {
  unsigned part = 0;   // cycle representative part index
  unsigned length = 0; // induced cycle length
  std::uint64_t count = 0;
};

std::vector<CycleCount> short_cycle_counts(const FixDigraph& digraph);

// Number of folders fixed by the digraph's normalizer element: the
// product of the per-cycle counts.
std::uint64_t fixed_point_count(const FixDigraph& digraph);

// Number of normalizer orbits on the whole folder space, by averaging
// fixed-point counts. Throws InternalError when the sum fails to divide,
// which would mean a broken action.
std::uint64_t folder_orbit_count(const FolderSpace& space, const PermGroup& normalizer);

// Graphviz rendering: one cluster per part, nodes labelled with the
// candidate permutation in cycle notation.
void write_dot(const FixDigraph& digraph, const FolderSpace& space, std::ostream& out);

} // namespace rqe
