#include "rqe/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_set>

#include "rqe/errors.hpp"

namespace rqe {

namespace {

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

void check_degree(unsigned degree, const Perm& p, const char* what) {
  if (p.degree() != degree)
    throw ConfigError(std::string("degree mismatch in ") + what);
}

} // namespace

std::vector<Perm> close_under_composition(unsigned degree, const std::vector<Perm>& seed,
                                          std::size_t limit) {
  const Perm id(degree);
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  seen.insert(id);
  queue.push_back(id);

  // In a finite group the generated subsemigroup is the subgroup, so plain
  // right-multiplication BFS from the identity is enough.
  const std::uint64_t full = degree <= 12 ? factorial(degree) : 0;
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& s : seed) {
      check_degree(degree, s, "closure");
      Perm next = cur * s;
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw CapError("element enumeration exceeds limit");
        // A subgroup with more than n!/2 elements is S_n itself.
        if (full && seen.size() > full / 2)
          return symmetric_elements(degree);
        queue.push_back(std::move(next));
      }
    }
  }

  std::vector<Perm> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<Perm> symmetric_elements(unsigned degree) {
  if (degree > kMaxSymScanDegree)
    throw CapError("degree too large for a symmetric group scan");
  std::vector<Point> images(degree);
  for (unsigned i = 0; i < degree; ++i)
    images[i] = Point(i);
  std::vector<Perm> result;
  result.reserve(std::size_t(factorial(degree)));
  do {
    result.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::vector<Perm> extract_generators(unsigned degree, const std::vector<Perm>& sorted_elements) {
  std::vector<Perm> gens;
  std::vector<Perm> closed = {Perm(degree)};
  for (const Perm& e : sorted_elements) {
    if (std::binary_search(closed.begin(), closed.end(), e))
      continue;
    gens.push_back(e);
    closed = close_under_composition(degree, gens);
    if (closed.size() == sorted_elements.size())
      break;
  }
  return gens;
}

PermGroup::PermGroup(unsigned degree) : degree_(degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw ConfigError("group degree must be in 1.." + std::to_string(kMaxDegree));
  elements_.push_back(Perm(degree));
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators) : degree_(degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw ConfigError("group degree must be in 1.." + std::to_string(kMaxDegree));
  for (const Perm& g : generators)
    check_degree(degree, g, "group construction");
  generators_ = std::move(generators);
  elements_ = close_under_composition(degree, generators_);
}

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Perm> elements) {
  if (degree == 0 || degree > kMaxDegree)
    throw ConfigError("group degree must be in 1.." + std::to_string(kMaxDegree));
  if (elements.empty())
    throw ConfigError("element list must contain the identity");
  if (!std::is_sorted(elements.begin(), elements.end()))
    throw ConfigError("element list must be sorted");
  if (!elements.front().is_identity())
    throw ConfigError("element list must contain the identity");
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = extract_generators(degree, elements);
  g.elements_ = std::move(elements);
#ifndef NDEBUG
  assert(close_under_composition(degree, g.generators_).size() == g.elements_.size());
#endif
  return g;
}

PermGroup PermGroup::symmetric(unsigned degree) {
  if (degree == 0)
    throw ConfigError("group degree must be positive");
  PermGroup g;
  g.degree_ = degree;
  if (degree >= 2) {
    std::vector<Point> t(degree), c(degree);
    for (unsigned i = 0; i < degree; ++i) {
      t[i] = Point(i);
      c[i] = Point((i + 1) % degree);
    }
    std::swap(t[0], t[1]);
    g.generators_.push_back(Perm::from_images(t));
    if (degree >= 3)
      g.generators_.push_back(Perm::from_images(c));
  }
  g.elements_ = symmetric_elements(degree);
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  return p.degree() == degree_ &&
         std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
  return true;
}

OrbitData orbit_data(const PermGroup& g) {
  const unsigned n = g.degree();
  OrbitData data;
  data.orbit_index_of.assign(n, unsigned(-1));
  data.transversal.assign(n, Perm(n));

  for (unsigned x = 0; x < n; ++x) {
    if (data.orbit_index_of[x] != unsigned(-1))
      continue;
    // x is the minimum of a fresh orbit: smaller points are all assigned.
    const unsigned index = unsigned(data.reps.size());
    data.reps.push_back(Point(x));
    std::vector<Point> orbit;
    std::deque<Point> queue;
    data.orbit_index_of[x] = index;
    queue.push_back(Point(x));
    orbit.push_back(Point(x));
    while (!queue.empty()) {
      Point y = queue.front();
      queue.pop_front();
      for (const Perm& s : g.generators()) {
        Point z = s.apply(y);
        if (data.orbit_index_of[z] == unsigned(-1)) {
          data.orbit_index_of[z] = index;
          data.transversal[z] = data.transversal[y] * s;
          queue.push_back(z);
          orbit.push_back(z);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    data.orbits.push_back(std::move(orbit));
  }

  for (Point rep : data.reps) {
    std::vector<Perm> fixing;
    for (const Perm& e : g.elements())
      if (e.apply(rep) == rep)
        fixing.push_back(e);
    data.stabilizers.push_back(PermGroup::from_elements(n, std::move(fixing)));
  }
  return data;
}

PermGroup centralizer_in(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree())
    throw ConfigError("degree mismatch in centralizer");
  std::vector<Perm> kept;
  for (const Perm& e : g.elements()) {
    bool commutes = true;
    for (const Perm& s : h.generators())
      if (e * s != s * e) {
        commutes = false;
        break;
      }
    if (commutes)
      kept.push_back(e);
  }
  return PermGroup::from_elements(g.degree(), std::move(kept));
}

PermGroup center(const PermGroup& g) { return centralizer_in(g, g); }

bool normalizes(const Perm& f, const PermGroup& g) {
  if (f.degree() != g.degree())
    throw ConfigError("degree mismatch in normalizer check");
  for (const Perm& s : g.generators())
    if (!g.contains(s.conjugated_by(f)))
      return false;
  return true;
}

PermGroup normalizer_in_sym(const PermGroup& g, unsigned cap) {
  const unsigned n = g.degree();
  if (n > cap)
    throw CapError("normalizer scan capped at degree " + std::to_string(cap) +
                   "; supply generators externally");

  const OrbitData orbits = orbit_data(g);
  std::vector<std::uint32_t> orbit_size(orbits.orbits.size());
  for (std::size_t i = 0; i < orbits.orbits.size(); ++i)
    orbit_size[i] = std::uint32_t(orbits.orbits[i].size());

  std::vector<Perm> kept;
  for (const Perm& f : symmetric_elements(n)) {
    // A normalizing element permutes the orbits of g.
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) {
      unsigned src = orbits.orbit_index_of[x];
      unsigned dst = orbits.orbit_index_of[f.apply(Point(x))];
      if (orbit_size[src] != orbit_size[dst] ||
          dst != orbits.orbit_index_of[f.apply(orbits.reps[src])])
        ok = false;
    }
    if (ok && normalizes(f, g))
      kept.push_back(f);
  }
  return PermGroup::from_elements(n, std::move(kept));
}

PermGroup normalizer_from_generators(const PermGroup& g, const std::vector<Perm>& gens) {
  for (const Perm& f : gens)
    if (!normalizes(f, g))
      throw ConfigError("supplied element does not normalize the group: " +
                        f.to_cycle_string());
  std::vector<Perm> all = g.generators();
  all.insert(all.end(), gens.begin(), gens.end());
  return PermGroup(g.degree(), std::move(all));
}

} // namespace rqe
