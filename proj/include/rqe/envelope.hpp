#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rqe/perm_group.hpp"

namespace rqe {

enum class Kind { rack, quandle };

const char* to_string(Kind kind);
Kind parse_kind(std::string_view text);

// Multiplication table of a binary operation on {0..n-1} in which every row
// is a permutation (a left quasigroup): at(x, y) = x*y and row(x) is the
// left translation y ↦ x*y.
class MulTable {
public:
  static MulTable from_rows(std::vector<std::vector<Point>> rows);
  static MulTable from_row_perms(const std::vector<Perm>& rows);

  unsigned size() const { return n_; }
  Point at(Point x, Point y) const { return flat_[std::size_t(x) * n_ + y]; }
  const Perm& row(Point x) const { return rows_[x]; }
  const std::vector<Perm>& rows() const { return rows_; }
  const std::vector<Point>& flat() const { return flat_; }

  bool operator==(const MulTable&) const = default;

  // Text format: first line n, then n lines of n space-separated 1-based
  // values. parse stops after one table so several can share a stream.
  std::string to_text() const;
  static MulTable parse(std::istream& in);

private:
  MulTable() = default;

  unsigned n_ = 0;
  std::vector<Point> flat_;
  std::vector<Perm> rows_;
};

// One candidate translation per orbit representative, in rep order.
struct Folder {
  std::vector<Perm> entries;

  bool operator==(const Folder&) const = default;
};

// The mixed-radix search space attached to a group: for each orbit rep x
// the sorted candidate list (centralizer of the stabilizer for racks, its
// center for quandles), with radices and index weights. Index 0 is the
// all-identity folder; the first rep is the most significant digit.
struct FolderSpace {
  PermGroup group;
  OrbitData orbits;
  Kind kind = Kind::rack;
  std::vector<std::vector<Perm>> candidates;
  std::vector<std::uint32_t> radices;
  std::vector<std::uint64_t> weights;
  std::uint64_t size = 0;
};

FolderSpace folder_space(const PermGroup& g, Kind kind);

Folder element_at(const FolderSpace& space, std::uint64_t index);
std::uint64_t position_of(const FolderSpace& space, const Folder& folder);

std::vector<std::uint32_t> digits_at(const FolderSpace& space, std::uint64_t index);
std::uint64_t index_of_digits(const FolderSpace& space, const std::vector<std::uint32_t>& digits);

// Index of the entry in the rep's sorted candidate list; throws ConfigError
// for entries outside the list.
std::uint32_t candidate_index(const FolderSpace& space, unsigned rep_index, const Perm& entry);

// Necessary condition for the group to admit any envelope of this kind:
// the candidate lists, closed under conjugation by the group, must generate
// the whole group.
bool might_be_admissible(const FolderSpace& space);
bool might_be_admissible(const PermGroup& g, Kind kind);

// Whether the folder's entries, closed under conjugation by the group,
// generate the whole group.
bool is_envelope(const FolderSpace& space, const Folder& folder);
bool is_envelope(const PermGroup& g, const Folder& folder);

// Table with left translations L_y = (λ_x)^(g_y), x the rep of y's orbit.
// Entries are checked against the folder condition (λ_x centralizes the
// stabilizer of x).
MulTable rack_from_envelope(const FolderSpace& space, const Folder& folder);
MulTable rack_from_envelope(const PermGroup& g, const Folder& folder);

// Left multiplication group of a rack table together with the folder of
// translations at the orbit reps. Throws ConfigError if the table is not a
// rack.
std::pair<PermGroup, Folder> envelope_of_rack(const MulTable& table);

// Embeds an envelope on n points into one on n+1 points by adjoining a
// fixed point with identity translation.
std::pair<PermGroup, Folder> extend(const PermGroup& g, const Folder& folder);

struct Classification {
  bool left_quasigroup = false;
  bool rack = false;
  bool quandle = false;
  bool two_reductive = false; // left multiplication group abelian
  bool medial = false;        // displacement group abelian
  PermGroup lmlt;
  PermGroup dis;
};

// Evaluates the predicates by exhaustive scans. For rack tables the group
// characterizations of 2-reductivity and mediality are cross-checked
// against the defining identities; disagreement throws InternalError.
Classification classify(const MulTable& table);

// Text form: one line of ';'-separated generators in cycle notation, then
// one candidate per orbit rep as a 1-based image array.
std::string envelope_to_text(const PermGroup& g, const Folder& folder);
std::pair<PermGroup, Folder> envelope_from_text(std::istream& in);

} // namespace rqe
