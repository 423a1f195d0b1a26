#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rqe/bitvec.hpp"
#include "rqe/envelope.hpp"
#include "rqe/perm_group.hpp"
#include "rqe/subgroup_catalog.hpp"

namespace rqe {

// Default ceiling on the orbit sweep bit vector: 2^31 bits = 256 MiB.
inline constexpr std::uint64_t kDefaultMemCapBits = std::uint64_t(1) << 31;

// Image of a folder under an element f of the symmetric-group normalizer
// of space.group. Entry at representative x is pulled back through f to
// the orbit of y = f^-1(x) and conjugated into place:
//
//   kappa_x = (lambda_z ^ t_y) ^ f,  y = f^-1(x),  z = rep of y's orbit,
//
// with t_y the transversal element mapping z to y. The result stays in
// the same folder space, and the map is a right action:
// apply(f, apply(h, folder)) == apply(h * f, folder).
Folder apply_normalizer(const FolderSpace& space, const Perm& f, const Folder& folder);

// Digit-level table for one normalizer element: the folder image at
// representative index xi only depends on the source digit at
// source_rep[xi], via lookup[xi].
struct ActionTable {
  std::vector<unsigned> source_rep;              // per rep index
  std::vector<std::vector<std::uint32_t>> lookup; // [rep index][source digit]
};

ActionTable precompute_action(const FolderSpace& space, const Perm& f);

// Index-level application of a precomputed table.
std::uint64_t apply_table(const FolderSpace& space, const ActionTable& table,
                          std::uint64_t index);

struct SweepResult {
  BitVec survivors;         // bit per folder index: orbit-minimal envelope
  std::vector<Folder> reps; // decoded survivors, ascending by index
  std::uint64_t orbit_count_all = 0; // all normalizer orbits, envelope or not
};

// Sweeps the whole folder space once, marking for each normalizer orbit
// its minimal index, and keeping exactly the minima whose folder is an
// envelope. Throws MemoryCapError when the space needs more bits than
// mem_cap_bits.
SweepResult orbit_sweep(const FolderSpace& space, const PermGroup& normalizer,
                        std::uint64_t mem_cap_bits = kDefaultMemCapBits);

struct EnumOptions {
  std::uint64_t mem_cap_bits = kDefaultMemCapBits;
  unsigned workers = 1;
  bool nonabelian_only = false;
  unsigned normalizer_cap = 8;
  std::ostream* progress = nullptr; // optional per-class log
};

// Everything the sweep learned about one subgroup class.
struct ClassEnumeration {
  int class_id = 0;
  PermGroup group;
  std::vector<std::uint32_t> radices;
  std::uint64_t space_size = 0;
  SweepResult sweep;
  // Per survivor (in ascending index order): classification bits of the
  // reconstructed rack.
  BitVec survivor_medial;
  BitVec survivor_two_reductive;
};

struct EnumerationResult {
  unsigned degree = 0;
  Kind kind = Kind::rack;
  std::vector<ClassEnumeration> classes;
  unsigned skipped_inadmissible = 0;
  unsigned skipped_abelian = 0;
  std::uint64_t total = 0;
  std::uint64_t medial = 0;
  std::uint64_t two_reductive = 0;
  std::uint64_t non_two_reductive = 0;
};

// Classifies all racks or quandles of the given order up to isomorphism
// by sweeping the folder space of every subgroup class in the catalog.
EnumerationResult enumerate_order(unsigned n, Kind kind,
                                  const std::vector<SubgroupClass>& catalog,
                                  const EnumOptions& options = {});

} // namespace rqe
