#include "rqe/burnside.hpp"

#include <cassert>
#include <limits>
#include <ostream>

#include "rqe/action_orbits.hpp"
#include "rqe/errors.hpp"

namespace rqe {

Perm induced_perm(const OrbitData& orbits, const Perm& f) {
  std::vector<Point> images;
  images.reserve(orbits.reps.size());
  for (Point rep : orbits.reps)
    images.push_back(Point(orbits.orbit_index_of[f.apply(rep)]));
  return Perm::from_images(std::move(images));
}

FixDigraph fix_digraph(const FolderSpace& space, const Perm& f) {
  const ActionTable table = precompute_action(space, f);
  const std::size_t k = space.orbits.reps.size();

  FixDigraph digraph;
  digraph.target_part.assign(k, unsigned(k));
  digraph.target_index.resize(k);
  for (std::size_t xi = 0; xi < k; ++xi) {
    const unsigned zi = table.source_rep[xi];
    if (digraph.target_part[zi] != k)
      throw InternalError("normalizer element does not permute the parts");
    digraph.target_part[zi] = unsigned(xi);
    digraph.target_index[zi] = table.lookup[xi];
  }
  for (unsigned t : digraph.target_part)
    if (t == k)
      throw InternalError("normalizer element does not permute the parts");

  digraph.induced = induced_perm(space.orbits, f);
  for (std::size_t zi = 0; zi < k; ++zi)
    assert(digraph.induced.apply(Point(zi)) == digraph.target_part[zi]);

  std::vector<bool> visited(k, false);
  for (std::size_t start = 0; start < k; ++start) {
    if (visited[start])
      continue;
    digraph.cycle_reps.push_back(unsigned(start));
    for (std::size_t p = start; !visited[p]; p = digraph.target_part[p])
      visited[p] = true;
  }

  for (std::uint32_t r : space.radices)
    digraph.part_sizes.push_back(r);
  return digraph;
}

std::vector<CycleCount> short_cycle_counts(const FixDigraph& digraph) {
  std::vector<CycleCount> counts;
  counts.reserve(digraph.cycle_reps.size());
  for (unsigned rep : digraph.cycle_reps) {
    unsigned length = 0;
    for (unsigned p = rep; length == 0 || p != rep; p = digraph.target_part[p])
      ++length;

    std::uint64_t returning = 0;
    for (std::uint64_t c = 0; c < digraph.part_sizes[rep]; ++c) {
      unsigned part = rep;
      std::uint64_t vertex = c;
      for (unsigned step = 0; step < length; ++step) {
        vertex = digraph.target_index[part][vertex];
        part = digraph.target_part[part];
      }
      assert(part == rep);
      if (vertex == c)
        ++returning;
    }
    counts.push_back(CycleCount{rep, length, returning});
  }
  return counts;
}

std::uint64_t fixed_point_count(const FixDigraph& digraph) {
  std::uint64_t product = 1;
  for (const CycleCount& cycle : short_cycle_counts(digraph)) {
    if (cycle.count == 0)
      return 0;
    if (product > std::numeric_limits<std::uint64_t>::max() / cycle.count)
      throw CapError("fixed point count overflows 64 bits");
    product *= cycle.count;
  }
  return product;
}

std::uint64_t folder_orbit_count(const FolderSpace& space, const PermGroup& normalizer) {
  unsigned __int128 sum = 0;
  for (const Perm& f : normalizer.elements())
    sum += fixed_point_count(fix_digraph(space, f));
  if (sum % normalizer.order() != 0)
    throw InternalError("fixed point sum is not divisible by the normalizer order");
  const unsigned __int128 quotient = sum / normalizer.order();
  if (quotient > std::numeric_limits<std::uint64_t>::max())
    throw CapError("orbit count overflows 64 bits");
  return std::uint64_t(quotient);
}

void write_dot(const FixDigraph& digraph, const FolderSpace& space, std::ostream& out) {
  const std::size_t k = space.orbits.reps.size();
  out << "digraph fix {\n  rankdir=LR;\n";
  for (std::size_t zi = 0; zi < k; ++zi) {
    out << "  subgraph cluster_p" << zi << " {\n    label=\"part "
        << unsigned(space.orbits.reps[zi]) + 1 << "\";\n";
    for (std::size_t c = 0; c < space.candidates[zi].size(); ++c)
      out << "    p" << zi << "c" << c << " [label=\""
          << space.candidates[zi][c].to_cycle_string() << "\"];\n";
    out << "  }\n";
  }
  for (std::size_t zi = 0; zi < k; ++zi)
    for (std::size_t c = 0; c < digraph.target_index[zi].size(); ++c)
      out << "  p" << zi << "c" << c << " -> p" << digraph.target_part[zi] << "c"
          << digraph.target_index[zi][c] << ";\n";
  out << "}\n";
}

} // namespace rqe
