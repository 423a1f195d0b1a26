#include "rqe/oracle.hpp"

#include <algorithm>
#include <set>

#include "rqe/errors.hpp"
#include "rqe/perm_group.hpp"

namespace rqe {

namespace {

// Distributivity triples (a, b, *) become checkable once rows a, b and
// t[a][b] are all filled; with rows assigned in order that happens exactly
// when the last of the three indices equals the row just placed.
bool partial_distributive(const std::vector<std::vector<Point>>& rows,
                          unsigned last, unsigned n) {
  for (unsigned a = 0; a <= last; ++a)
    for (unsigned b = 0; b <= last; ++b) {
      const unsigned ab = rows[a][b];
      if (ab > last)
        continue;
      if (a != last && b != last && ab != last)
        continue;
      for (unsigned z = 0; z < n; ++z)
        if (rows[a][rows[b][z]] != rows[ab][rows[a][z]])
          return false;
    }
  return true;
}

void search(unsigned n, Kind kind, const std::vector<Perm>& perms,
            std::vector<std::vector<Point>>& rows, std::vector<MulTable>& out) {
  const unsigned x = unsigned(rows.size());
  if (x == n) {
    MulTable table = MulTable::from_rows(rows);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned z = 0; z < n; ++z)
          if (table.at(Point(a), table.at(Point(b), Point(z))) !=
              table.at(table.at(Point(a), Point(b)), table.at(Point(a), Point(z))))
            throw InternalError("partial pruning admitted a non-rack");
    out.push_back(std::move(table));
    return;
  }
  for (const Perm& p : perms) {
    if (kind == Kind::quandle && p.apply(Point(x)) != x)
      continue;
    rows.push_back(p.images());
    if (partial_distributive(rows, x, n))
      search(n, kind, perms, rows, out);
    rows.pop_back();
  }
}

} // namespace

std::vector<MulTable> enumerate_raw(unsigned n, Kind kind) {
  if (n == 0)
    throw ConfigError("order must be positive");
  const unsigned cap = kind == Kind::rack ? kOracleRackCap : kOracleQuandleCap;
  if (n > cap)
    throw CapError("exhaustive " + std::string(to_string(kind)) +
                   " search is capped at order " + std::to_string(cap));

  const std::vector<Perm> perms = symmetric_elements(n);
  std::vector<std::vector<Point>> rows;
  rows.reserve(n);
  std::vector<MulTable> out;
  search(n, kind, perms, rows, out);
  return out;
}

CanonicalForm canonical_form(const MulTable& table) {
  const unsigned n = table.size();
  std::vector<Point> best;
  for (const Perm& f : symmetric_elements(n)) {
    const auto& forward = f.images();
    const auto backward = f.inverse().images();
    std::vector<Point> flat(std::size_t(n) * n);
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y)
        flat[std::size_t(x) * n + y] = forward[table.at(backward[x], backward[y])];
    if (best.empty() || flat < best)
      best = std::move(flat);
  }
  return CanonicalForm{std::move(best)};
}

std::vector<MulTable> reduce_up_to_iso(const std::vector<MulTable>& tables) {
  std::set<std::vector<Point>> forms;
  unsigned n = 0;
  for (const MulTable& t : tables) {
    if (n == 0)
      n = t.size();
    else if (t.size() != n)
      throw ConfigError("tables have mixed sizes");
    forms.insert(canonical_form(t).bytes);
  }

  std::vector<MulTable> out;
  out.reserve(forms.size());
  for (const auto& bytes : forms) {
    std::vector<std::vector<Point>> rows(n);
    for (unsigned x = 0; x < n; ++x)
      rows[x].assign(bytes.begin() + std::ptrdiff_t(x) * n,
                     bytes.begin() + std::ptrdiff_t(x + 1) * n);
    out.push_back(MulTable::from_rows(std::move(rows)));
  }
  return out;
}

std::vector<MulTable> enumerate_up_to_iso(unsigned n, Kind kind) {
  return reduce_up_to_iso(enumerate_raw(n, kind));
}

} // namespace rqe
