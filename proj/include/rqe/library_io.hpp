#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rqe/action_orbits.hpp"
#include "rqe/bitvec.hpp"
#include "rqe/envelope.hpp"
#include "rqe/perm.hpp"

namespace rqe {

// One subgroup class worth of survivors. The group is stored by its
// generators; the folder space is rebuilt from them on demand, and the
// stored radices and space size let a reader sanity-check the rebuild.
struct LibraryClass {
  std::uint32_t class_id = 0;
  std::vector<Perm> generators;
  std::vector<std::uint32_t> radices;
  std::uint64_t space_size = 0;
  BitVec survivors;
};

struct LibraryTotals {
  std::uint64_t total = 0;
  std::uint64_t medial = 0;
  std::uint64_t two_reductive = 0;
  std::uint64_t non_two_reductive = 0;

  bool operator==(const LibraryTotals&) const = default;
};

struct Library {
  Kind kind = Kind::rack;
  unsigned degree = 0;
  std::vector<LibraryClass> classes;
  LibraryTotals totals;
};

// On-disk layout (little-endian):
//   magic "RQE" + version byte '1'
//   u8 kind (0 rack, 1 quandle), u8 degree, u16 reserved (zero)
//   u32 class count, then per class:
//     u32 class id, u8 generator count, generators as degree bytes of
//     1-based images, u8 representative count, that many u32 radices,
//     u64 space size, u64 survivor count, ceil(size/8) survivor bytes
//   trailer of four u64 totals, then u32 CRC-32 of everything before it
void write_library(const Library& lib, std::ostream& out);
void write_library(const Library& lib, const std::string& path);

Library read_library(std::istream& in);
Library read_library(const std::string& path);

Library library_from_enumeration(const EnumerationResult& result);

// Decodes every survivor back into a multiplication table, blank-line
// separated, classes in stored order and indices ascending.
void export_tables(const Library& lib, std::ostream& out);

// Column header plus one row with the four totals; header only when the
// library is empty.
void export_counts(const Library& lib, std::ostream& out);

struct VerifyStats {
  std::uint64_t classes_checked = 0;
  std::uint64_t envelopes_checked = 0;
};

// Re-derives everything checkable from the stored generators: folder
// space shape, survivor bits really being orbit envelopes, reconstructed
// tables having the declared kind and multiplication group, and totals
// matching the trailer. Throws FormatError when the stored data lies.
VerifyStats verify_library(const Library& lib);

} // namespace rqe
