#include "rqe/subgroup_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "rqe/errors.hpp"

namespace rqe {

namespace {

bool is_prime_power(unsigned m) {
  if (m < 2)
    return false;
  unsigned p = 2;
  while (p * p <= m && m % p != 0)
    ++p;
  if (p * p > m)
    p = m;
  while (m % p == 0)
    m /= p;
  return m == 1;
}

// Conjugation-invariant fingerprint used to prune conjugacy tests: order,
// orbit-size multiset, and the multiset of element cycle types.
struct InvariantKey {
  std::uint64_t order;
  std::vector<unsigned> orbit_sizes;
  std::vector<std::vector<unsigned>> cycle_types;

  auto operator<=>(const InvariantKey&) const = default;
};

InvariantKey invariant_key(const PermGroup& g) {
  InvariantKey key;
  key.order = g.order();
  for (const auto& orbit : orbit_data(g).orbits)
    key.orbit_sizes.push_back(unsigned(orbit.size()));
  std::sort(key.orbit_sizes.begin(), key.orbit_sizes.end());
  for (const Perm& e : g.elements())
    key.cycle_types.push_back(e.cycle_type());
  std::sort(key.cycle_types.begin(), key.cycle_types.end());
  return key;
}

std::string element_list_bytes(const std::vector<Perm>& sorted_elements) {
  std::string bytes;
  bytes.reserve(sorted_elements.size() * (sorted_elements.empty() ? 0 : sorted_elements[0].degree()));
  for (const Perm& e : sorted_elements)
    bytes.append(reinterpret_cast<const char*>(e.images().data()), e.images().size());
  return bytes;
}

std::vector<Perm> conjugate_elements(const std::vector<Perm>& elements, const Perm& f) {
  std::vector<Perm> result;
  result.reserve(elements.size());
  for (const Perm& e : elements)
    result.push_back(e.conjugated_by(f));
  std::sort(result.begin(), result.end());
  return result;
}

struct ClassRec {
  PermGroup group;      // canonical copy: least element list over the class
  PermGroup normalizer; // normalizer of the canonical copy in S_n
};

// Enumerates every S_n-copy of the class of `elements`, keyed by element
// list bytes, and returns the canonical record. Copies are constant on
// right cosets of the normalizer, so each distinct copy is materialized
// exactly once.
ClassRec register_class(unsigned n, const std::vector<Perm>& elements,
                        const std::vector<Perm>& sym, int id,
                        std::unordered_map<std::string, int>& copy_index) {
  PermGroup as_group = PermGroup::from_elements(n, elements);
  PermGroup norm = normalizer_in_sym(as_group, kMaxSymScanDegree);

  std::unordered_set<Perm, PermHash> seen_coset;
  seen_coset.reserve(sym.size() * 2);
  std::string min_bytes;
  Perm min_f;
  for (const Perm& f : sym) {
    if (seen_coset.contains(f))
      continue;
    for (const Perm& nu : norm.elements())
      seen_coset.insert(nu * f);
    std::vector<Perm> copy = conjugate_elements(elements, f);
    std::string bytes = element_list_bytes(copy);
    if (min_bytes.empty() || bytes < min_bytes) {
      min_bytes = bytes;
      min_f = f;
    }
    copy_index.emplace(std::move(bytes), id);
  }

  ClassRec rec{PermGroup::from_elements(n, conjugate_elements(elements, min_f)),
               PermGroup::from_elements(n, conjugate_elements(norm.elements(), min_f))};
  return rec;
}

} // namespace

std::vector<SubgroupClass> subgroups_up_to_conjugacy(unsigned n, unsigned cap) {
  if (n == 0)
    throw ConfigError("degree must be positive");
  if (n > cap)
    throw CapError("built-in subgroup generation capped at degree " +
                   std::to_string(cap) + "; ingest a catalog instead");

  const std::vector<Perm> sym = symmetric_elements(n);
  std::vector<Perm> prime_power_elements;
  for (const Perm& e : sym)
    if (is_prime_power(e.order()))
      prime_power_elements.push_back(e);

  std::unordered_map<std::string, int> copy_index;
  std::vector<ClassRec> classes;

  auto lookup_or_register = [&](const std::vector<Perm>& elements) -> int {
    auto it = copy_index.find(element_list_bytes(elements));
    if (it != copy_index.end())
      return it->second;
    int id = int(classes.size());
    classes.push_back(register_class(n, elements, sym, id, copy_index));
    return id;
  };

  lookup_or_register({Perm(n)});

  for (std::size_t at = 0; at < classes.size(); ++at) {
    // Copy out what the loop body needs: `classes` may reallocate.
    const PermGroup group = classes[at].group;
    const std::vector<Perm> norm_gens = classes[at].normalizer.generators();

    // Extension elements up to conjugacy under the normalizer: conjugate
    // extensions generate conjugate subgroups.
    std::vector<bool> visited(prime_power_elements.size(), false);
    for (std::size_t i = 0; i < prime_power_elements.size(); ++i) {
      if (visited[i])
        continue;
      std::deque<std::size_t> queue{i};
      visited[i] = true;
      while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        for (const Perm& s : norm_gens) {
          Perm img = prime_power_elements[j].conjugated_by(s);
          auto pos = std::lower_bound(prime_power_elements.begin(),
                                      prime_power_elements.end(), img);
          if (pos == prime_power_elements.end() || *pos != img)
            throw InternalError("conjugation left the prime-power element set");
          std::size_t k = std::size_t(pos - prime_power_elements.begin());
          if (!visited[k]) {
            visited[k] = true;
            queue.push_back(k);
          }
        }
      }
      const Perm& candidate = prime_power_elements[i];
      if (group.contains(candidate))
        continue; // whole orbit lies inside the group
      std::vector<Perm> gens = group.generators();
      gens.push_back(candidate);
      lookup_or_register(close_under_composition(n, gens));
    }
  }

  std::vector<SubgroupClass> catalog;
  catalog.reserve(classes.size());
  for (ClassRec& rec : classes)
    catalog.push_back(SubgroupClass{std::move(rec.group), 0, false});
  std::sort(catalog.begin(), catalog.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) {
              if (a.group.order() != b.group.order())
                return a.group.order() < b.group.order();
              return a.group.generators() < b.group.generators();
            });
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    catalog[i].class_id = int(i) + 1;
    catalog[i].is_abelian = catalog[i].group.is_abelian();
  }
  return catalog;
}

std::vector<SubgroupClass> filter_nonabelian(std::vector<SubgroupClass> catalog) {
  std::erase_if(catalog, [](const SubgroupClass& c) { return c.is_abelian; });
  return catalog;
}

std::optional<Perm> conjugacy_test(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree())
    throw ConfigError("degree mismatch in conjugacy test");
  if (invariant_key(g) != invariant_key(h))
    return std::nullopt;

  const unsigned n = g.degree();
  const OrbitData og = orbit_data(g);
  const OrbitData oh = orbit_data(h);
  std::vector<unsigned> size_g(og.orbits.size()), size_h(oh.orbits.size());
  for (std::size_t i = 0; i < og.orbits.size(); ++i)
    size_g[i] = unsigned(og.orbits[i].size());
  for (std::size_t i = 0; i < oh.orbits.size(); ++i)
    size_h[i] = unsigned(oh.orbits[i].size());

  for (const Perm& f : symmetric_elements(n)) {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) {
      unsigned src = og.orbit_index_of[x];
      unsigned dst = oh.orbit_index_of[f.apply(Point(x))];
      if (size_g[src] != size_h[dst] ||
          dst != oh.orbit_index_of[f.apply(og.reps[src])])
        ok = false;
    }
    if (!ok)
      continue;
    for (const Perm& s : g.generators())
      if (!h.contains(s.conjugated_by(f))) {
        ok = false;
        break;
      }
    if (ok)
      return f; // g^f ⊆ h and orders match, so g^f = h
  }
  return std::nullopt;
}

namespace {

std::string strip_comment_and_trim(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos)
    line.erase(pos);
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!line.empty() && is_space(line.back()))
    line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && is_space(line[start]))
    ++start;
  return line.substr(start);
}

std::vector<Perm> parse_generator_line(const std::string& line, unsigned n) {
  std::vector<Perm> gens;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(';', start);
    std::string token = line.substr(start, end == std::string::npos
                                               ? std::string::npos
                                               : end - start);
    token = strip_comment_and_trim(token);
    if (!token.empty()) {
      Perm p = parse_perm(token, n);
      if (!p.is_identity())
        gens.push_back(std::move(p));
    }
    if (end == std::string::npos)
      break;
    start = end + 1;
  }
  return gens;
}

} // namespace

std::vector<SubgroupClass> ingest_generators(std::istream& in) {
  std::vector<SubgroupClass> catalog;
  std::vector<InvariantKey> keys;
  unsigned n = 0;
  bool have_header = false;

  std::string raw;
  for (unsigned lineno = 1; std::getline(in, raw); ++lineno) {
    std::string line = strip_comment_and_trim(raw);
    if (line.empty())
      continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!have_header) {
      if (line.rfind("n=", 0) != 0)
        throw FormatError(where + "expected degree header \"n=<degree>\"");
      try {
        std::size_t used = 0;
        unsigned long value = std::stoul(line.substr(2), &used);
        if (used != line.size() - 2 || value == 0 || value > kMaxDegree)
          throw std::invalid_argument("range");
        n = unsigned(value);
      } catch (const std::exception&) {
        throw FormatError(where + "bad degree header \"" + line + "\"");
      }
      have_header = true;
      continue;
    }

    PermGroup group = [&] {
      try {
        return PermGroup(n, parse_generator_line(line, n));
      } catch (const Error& e) {
        throw FormatError(where + e.what());
      }
    }();

    InvariantKey key = invariant_key(group);
    bool duplicate = false;
    for (std::size_t i = 0; i < catalog.size() && !duplicate; ++i)
      if (keys[i] == key && conjugacy_test(catalog[i].group, group))
        duplicate = true;
    if (duplicate)
      continue;
    SubgroupClass cls{std::move(group), int(catalog.size()) + 1, false};
    cls.is_abelian = cls.group.is_abelian();
    catalog.push_back(std::move(cls));
    keys.push_back(std::move(key));
  }
  return catalog;
}

void export_catalog(const std::vector<SubgroupClass>& catalog, std::ostream& out) {
  if (catalog.empty())
    return;
  out << "n=" << catalog.front().group.degree() << "\n";
  for (const SubgroupClass& cls : catalog) {
    const auto& gens = cls.group.generators();
    if (gens.empty()) {
      out << "()";
    } else {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i)
          out << ';';
        out << gens[i].to_cycle_string();
      }
    }
    out << " # class " << cls.class_id << "\n";
  }
}

} // namespace rqe
