#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "rqe/perm_group.hpp"

namespace rqe {

// One conjugacy class of subgroups of S_n. `group` is the canonical class
// representative: the conjugate copy with the lexicographically least
// sorted element list, with a deterministically extracted generating set.
struct SubgroupClass {
  PermGroup group;
  int class_id = 0;
  bool is_abelian = false;
};

// All subgroups of S_n up to conjugacy, sorted by (order, generator image
// tuples). Classes are produced by breadth-first extension: starting from
// the trivial group, each class representative is extended by elements of
// prime-power order (taken up to conjugacy under its normalizer) until no
// new classes appear. Every finite group is generated by its prime-power
// elements, so the walk is exhaustive. Throws CapError above `cap`.
std::vector<SubgroupClass> subgroups_up_to_conjugacy(unsigned n, unsigned cap = 7);

// Keeps only classes with nonabelian representative; class ids are kept so
// entries stay traceable to the full catalog.
std::vector<SubgroupClass> filter_nonabelian(std::vector<SubgroupClass> catalog);

// Reads a catalog in the text format written by export_catalog:
//
//   n=5
//   (1,2)             # one class per line,
//   (1,2);(1,2,3)     # generators separated by ';'
//
// "()" denotes the trivial group. Anything after '#' is ignored. Parsed
// groups are deduplicated up to conjugacy via conjugacy_test; the first
// occurrence of each class wins. Errors carry 1-based line numbers.
std::vector<SubgroupClass> ingest_generators(std::istream& in);

// Inverse of ingest_generators, plus a class id comment per line.
void export_catalog(const std::vector<SubgroupClass>& catalog, std::ostream& out);

// Some f with g^f == h, or nullopt if the groups are not conjugate in S_n.
// Cheap invariants (order, orbit-size multiset, cycle-type histogram) are
// compared before the scan over S_n.
std::optional<Perm> conjugacy_test(const PermGroup& g, const PermGroup& h);

} // namespace rqe
