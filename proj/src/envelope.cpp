#include "rqe/envelope.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "rqe/errors.hpp"

namespace rqe {

const char* to_string(Kind kind) {
  return kind == Kind::rack ? "rack" : "quandle";
}

Kind parse_kind(std::string_view text) {
  if (text == "rack")
    return Kind::rack;
  if (text == "quandle")
    return Kind::quandle;
  throw ConfigError("kind must be \"rack\" or \"quandle\"");
}

MulTable MulTable::from_rows(std::vector<std::vector<Point>> rows) {
  const std::size_t n = rows.size();
  if (n == 0 || n > kMaxDegree)
    throw ConfigError("table size must be in 1.." + std::to_string(kMaxDegree));
  MulTable t;
  t.n_ = unsigned(n);
  t.flat_.reserve(n * n);
  for (auto& row : rows) {
    if (row.size() != n)
      throw ConfigError("table is not square");
    t.rows_.push_back(Perm::from_images(row)); // validates the row
    t.flat_.insert(t.flat_.end(), row.begin(), row.end());
  }
  return t;
}

MulTable MulTable::from_row_perms(const std::vector<Perm>& rows) {
  std::vector<std::vector<Point>> images;
  images.reserve(rows.size());
  for (const Perm& r : rows) {
    if (r.degree() != rows.size())
      throw ConfigError("row degree does not match table size");
    images.push_back(r.images());
  }
  return from_rows(std::move(images));
}

std::string MulTable::to_text() const {
  std::string s = std::to_string(n_);
  s += '\n';
  for (unsigned x = 0; x < n_; ++x) {
    s += rows_[x].to_image_string();
    s += '\n';
  }
  return s;
}

MulTable MulTable::parse(std::istream& in) {
  unsigned long n = 0;
  if (!(in >> n))
    throw FormatError("missing table size");
  if (n == 0 || n > kMaxDegree)
    throw FormatError("table size out of range");
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  for (unsigned long x = 0; x < n; ++x)
    for (unsigned long y = 0; y < n; ++y) {
      unsigned long v = 0;
      if (!(in >> v))
        throw FormatError("table row " + std::to_string(x + 1) + " is incomplete");
      if (v == 0 || v > n)
        throw FormatError("table value out of range");
      rows[x][y] = Point(v - 1);
    }
  try {
    return from_rows(std::move(rows));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

FolderSpace folder_space(const PermGroup& g, Kind kind) {
  FolderSpace space{g, orbit_data(g), kind, {}, {}, {}, 0};

  for (const PermGroup& stab : space.orbits.stabilizers) {
    PermGroup pool = kind == Kind::rack ? centralizer_in(g, stab) : center(stab);
    space.candidates.push_back(pool.elements());
    space.radices.push_back(std::uint32_t(pool.order()));
  }

  // weights[i] is the suffix product of the radices past i, which is
  // exactly the running size before radices[i] is folded in.
  space.weights.assign(space.radices.size(), 1);
  space.size = 1;
  for (std::size_t i = space.radices.size(); i-- > 0;) {
    space.weights[i] = space.size;
    if (space.size > std::uint64_t(-1) / space.radices[i])
      throw CapError("folder space size overflows 64 bits");
    space.size *= space.radices[i];
  }
  return space;
}

std::vector<std::uint32_t> digits_at(const FolderSpace& space, std::uint64_t index) {
  if (index >= space.size)
    throw ConfigError("folder index out of range");
  std::vector<std::uint32_t> digits(space.radices.size());
  for (std::size_t i = 0; i < space.radices.size(); ++i)
    digits[i] = std::uint32_t((index / space.weights[i]) % space.radices[i]);
  return digits;
}

std::uint64_t index_of_digits(const FolderSpace& space, const std::vector<std::uint32_t>& digits) {
  if (digits.size() != space.radices.size())
    throw ConfigError("digit vector length mismatch");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= space.radices[i])
      throw ConfigError("digit out of range");
    index += digits[i] * space.weights[i];
  }
  return index;
}

Folder element_at(const FolderSpace& space, std::uint64_t index) {
  Folder folder;
  const auto digits = digits_at(space, index);
  folder.entries.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i)
    folder.entries.push_back(space.candidates[i][digits[i]]);
  return folder;
}

std::uint32_t candidate_index(const FolderSpace& space, unsigned rep_index, const Perm& entry) {
  const auto& pool = space.candidates[rep_index];
  auto pos = std::lower_bound(pool.begin(), pool.end(), entry);
  if (pos == pool.end() || *pos != entry)
    throw ConfigError("permutation is not a candidate at orbit representative " +
                      std::to_string(space.orbits.reps[rep_index] + 1));
  return std::uint32_t(pos - pool.begin());
}

std::uint64_t position_of(const FolderSpace& space, const Folder& folder) {
  if (folder.entries.size() != space.candidates.size())
    throw ConfigError("folder entry count does not match orbit count");
  std::vector<std::uint32_t> digits(folder.entries.size());
  for (std::size_t i = 0; i < folder.entries.size(); ++i)
    digits[i] = candidate_index(space, unsigned(i), folder.entries[i]);
  return index_of_digits(space, digits);
}

namespace {

// Closure of the conjugates of `seeds` under the whole group; equals the
// group iff the seeds form an envelope-generating set.
bool conjugates_generate(const PermGroup& g, const std::vector<Perm>& seeds) {
  std::unordered_set<Perm, PermHash> conjugates;
  for (const Perm& s : seeds)
    for (const Perm& e : g.elements())
      conjugates.insert(s.conjugated_by(e));
  std::vector<Perm> seed_list(conjugates.begin(), conjugates.end());
  return close_under_composition(g.degree(), seed_list).size() == g.order();
}

} // namespace

bool might_be_admissible(const FolderSpace& space) {
  std::vector<Perm> seeds;
  for (const auto& pool : space.candidates)
    seeds.insert(seeds.end(), pool.begin(), pool.end());
  return conjugates_generate(space.group, seeds);
}

bool might_be_admissible(const PermGroup& g, Kind kind) {
  return might_be_admissible(folder_space(g, kind));
}

bool is_envelope(const FolderSpace& space, const Folder& folder) {
  if (folder.entries.size() != space.candidates.size())
    throw ConfigError("folder entry count does not match orbit count");
  return conjugates_generate(space.group, folder.entries);
}

bool is_envelope(const PermGroup& g, const Folder& folder) {
  if (folder.entries.size() != orbit_data(g).reps.size())
    throw ConfigError("folder entry count does not match orbit count");
  for (const Perm& e : folder.entries)
    if (!g.contains(e))
      throw ConfigError("folder entry is not a group element");
  return conjugates_generate(g, folder.entries);
}

MulTable rack_from_envelope(const FolderSpace& space, const Folder& folder) {
  if (folder.entries.size() != space.candidates.size())
    throw ConfigError("folder entry count does not match orbit count");
  for (std::size_t i = 0; i < folder.entries.size(); ++i)
    candidate_index(space, unsigned(i), folder.entries[i]); // folder condition

  const unsigned n = space.group.degree();
  std::vector<Perm> rows;
  rows.reserve(n);
  for (unsigned y = 0; y < n; ++y) {
    unsigned xi = space.orbits.orbit_index_of[y];
    rows.push_back(folder.entries[xi].conjugated_by(space.orbits.transversal[y]));
  }
  return MulTable::from_row_perms(rows);
}

MulTable rack_from_envelope(const PermGroup& g, const Folder& folder) {
  return rack_from_envelope(folder_space(g, Kind::rack), folder);
}

namespace {

bool is_rack_table(const MulTable& t) {
  const unsigned n = t.size();
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      for (unsigned z = 0; z < n; ++z)
        if (t.at(Point(x), t.at(Point(y), Point(z))) !=
            t.at(t.at(Point(x), Point(y)), t.at(Point(x), Point(z))))
          return false;
  return true;
}

std::vector<Perm> distinct_rows(const MulTable& t) {
  std::vector<Perm> gens;
  for (const Perm& r : t.rows())
    if (std::find(gens.begin(), gens.end(), r) == gens.end())
      gens.push_back(r);
  return gens;
}

} // namespace

std::pair<PermGroup, Folder> envelope_of_rack(const MulTable& table) {
  if (!is_rack_table(table))
    throw ConfigError("table is not a rack");
  PermGroup g(table.size(), distinct_rows(table));
  OrbitData orbits = orbit_data(g);
  Folder folder;
  for (Point rep : orbits.reps)
    folder.entries.push_back(table.row(rep));
  return {std::move(g), std::move(folder)};
}

std::pair<PermGroup, Folder> extend(const PermGroup& g, const Folder& folder) {
  if (!is_envelope(g, folder))
    throw ConfigError("input is not an envelope");
  const unsigned n = g.degree();
  if (n + 1 > kMaxDegree)
    throw ConfigError("extension exceeds the maximum degree");

  auto lift = [n](const Perm& p) {
    std::vector<Point> images = p.images();
    images.push_back(Point(n));
    return Perm::from_images(std::move(images));
  };

  std::vector<Perm> gens;
  for (const Perm& s : g.generators())
    gens.push_back(lift(s));
  PermGroup extended(n + 1, std::move(gens));

  // Orbits are those of g plus the new fixed point, whose rep comes last.
  Folder lifted;
  for (const Perm& e : folder.entries)
    lifted.entries.push_back(lift(e));
  lifted.entries.push_back(Perm(n + 1));
  assert(is_envelope(extended, lifted));
  return {std::move(extended), std::move(lifted)};
}

Classification classify(const MulTable& table) {
  const unsigned n = table.size();

  bool rack = is_rack_table(table);
  bool quandle = rack;
  for (unsigned x = 0; x < n && quandle; ++x)
    if (table.at(Point(x), Point(x)) != x)
      quandle = false;

  PermGroup lmlt(n, distinct_rows(table));

  std::vector<Perm> dis_gens;
  {
    std::unordered_set<Perm, PermHash> seen;
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y) {
        Perm d = table.row(Point(x)).inverse() * table.row(Point(y));
        if (seen.insert(d).second)
          dis_gens.push_back(std::move(d));
      }
  }
  PermGroup dis(n, std::move(dis_gens));

  const bool two_reductive = lmlt.is_abelian();
  const bool medial = dis.is_abelian();

  if (rack) {
    // Cross-check against the defining identities; the equivalences hold
    // for racks, so disagreement is a bug.
    bool identity_2red = true;
    bool identity_medial = true;
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y)
        for (unsigned u = 0; u < n; ++u)
          for (unsigned v = 0; v < n; ++v) {
            const Point xu = table.at(Point(x), Point(u));
            const Point yu = table.at(Point(y), Point(u));
            const Point xv = table.at(Point(x), Point(v));
            const Point vy = table.at(Point(v), Point(y));
            const Point uy = table.at(Point(u), Point(y));
            if (table.at(xu, Point(v)) != table.at(yu, Point(v)))
              identity_2red = false;
            if (table.at(xu, vy) != table.at(xv, uy))
              identity_medial = false;
          }
    if (identity_2red != two_reductive)
      throw InternalError("2-reductivity cross-check failed");
    if (identity_medial != medial)
      throw InternalError("mediality cross-check failed");
  }

  return Classification{true,  rack,  quandle, two_reductive, medial,
                        std::move(lmlt), std::move(dis)};
}

std::string envelope_to_text(const PermGroup& g, const Folder& folder) {
  std::string s;
  const auto& gens = g.generators();
  if (gens.empty()) {
    s += "()";
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i)
        s += ';';
      s += gens[i].to_cycle_string();
    }
  }
  s += '\n';
  for (const Perm& e : folder.entries) {
    s += e.to_image_string();
    s += '\n';
  }
  return s;
}

std::pair<PermGroup, Folder> envelope_from_text(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    if (line.empty()) {
      if (!lines.empty())
        break; // blank line ends the block
      continue;
    }
    lines.push_back(line);
  }
  if (lines.size() < 2)
    throw FormatError("envelope text needs a generator line and candidates");

  // Degree comes from the first candidate image array.
  std::istringstream probe(lines[1]);
  unsigned n = 0;
  for (std::string tok; probe >> tok;)
    ++n;
  if (n == 0 || n > kMaxDegree)
    throw FormatError("bad candidate line in envelope text");

  std::vector<Perm> gens;
  std::size_t start = 0;
  const std::string& gen_line = lines[0];
  while (start <= gen_line.size()) {
    std::size_t end = gen_line.find(';', start);
    std::string token = gen_line.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    if (token.find_first_not_of(" \t") != std::string::npos) {
      Perm p = parse_perm(token, n);
      if (!p.is_identity())
        gens.push_back(std::move(p));
    }
    if (end == std::string::npos)
      break;
    start = end + 1;
  }

  PermGroup g(n, std::move(gens));
  const std::size_t reps = orbit_data(g).reps.size();
  if (lines.size() - 1 != reps)
    throw FormatError("envelope text has " + std::to_string(lines.size() - 1) +
                      " candidates, expected " + std::to_string(reps));
  Folder folder;
  for (std::size_t i = 1; i < lines.size(); ++i)
    folder.entries.push_back(parse_images(lines[i], n));
  return {std::move(g), std::move(folder)};
}

} // namespace rqe
