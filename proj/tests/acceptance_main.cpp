// Acceptance gate: one pass/fail line per numbered criterion, nonzero exit
// when any fails. Expected values and runtime budgets are pinned below.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rqe/action_orbits.hpp"
#include "rqe/burnside.hpp"
#include "rqe/library_io.hpp"
#include "rqe/oracle.hpp"
#include "rqe/subgroup_catalog.hpp"

using namespace rqe;

namespace {

constexpr unsigned kMaxOrder = 7;

// frozen expected counts, index = order (0 unused)
constexpr std::uint64_t kRackTotal[] = {0, 1, 2, 6, 19, 74, 353, 2080};
constexpr std::uint64_t kQuandleTotal[] = {0, 1, 1, 3, 7, 22, 73, 298};
constexpr std::uint64_t kRackNon2Red[] = {0, 0, 0, 1, 2, 9, 30};
constexpr std::uint64_t kQuandleNon2Red[] = {0, 0, 0, 1, 2, 7, 18};
constexpr std::size_t kCatalogAll[] = {0, 1, 2, 4, 11, 19, 56};
constexpr std::size_t kCatalogNonabelian[] = {0, 0, 0, 1, 4, 10, 36};

// runtime budgets in seconds
constexpr double kRackBudget = 120.0;
constexpr double kQuandleBudget = 600.0;
constexpr double kCatalogBudget = 300.0;

// criterion 8 covers every space at most this large
constexpr std::uint64_t kPropertySpaceCap = 10000;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

struct SharedData {
  std::vector<std::vector<SubgroupClass>> catalogs; // by order
  std::vector<EnumerationResult> racks;
  std::vector<EnumerationResult> quandles;
  double catalog_seconds[kMaxOrder + 1] = {};
  double rack_seconds[kMaxOrder + 1] = {};
  double quandle_seconds[kMaxOrder + 1] = {};
};

SharedData compute_shared() {
  SharedData data;
  data.catalogs.resize(kMaxOrder + 1);
  data.racks.resize(kMaxOrder + 1);
  data.quandles.resize(kMaxOrder + 1);
  for (unsigned n = 1; n <= kMaxOrder; ++n) {
    auto start = std::chrono::steady_clock::now();
    data.catalogs[n] = subgroups_up_to_conjugacy(n);
    data.catalog_seconds[n] = seconds_since(start);

    start = std::chrono::steady_clock::now();
    data.racks[n] = enumerate_order(n, Kind::rack, data.catalogs[n]);
    data.rack_seconds[n] = seconds_since(start);

    start = std::chrono::steady_clock::now();
    data.quandles[n] = enumerate_order(n, Kind::quandle, data.catalogs[n]);
    data.quandle_seconds[n] = seconds_since(start);
  }
  return data;
}

std::string join_counts(const std::vector<std::uint64_t>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? "," : "") << values[i];
  return out.str();
}

std::multiset<CanonicalForm> pipeline_forms(const EnumerationResult& result,
                                            Kind kind) {
  std::multiset<CanonicalForm> forms;
  for (const ClassEnumeration& ce : result.classes) {
    const FolderSpace space = folder_space(ce.group, kind);
    for (const Folder& folder : ce.sweep.reps)
      forms.insert(canonical_form(rack_from_envelope(space, folder)));
  }
  return forms;
}

std::multiset<CanonicalForm> oracle_forms(unsigned n, Kind kind) {
  std::multiset<CanonicalForm> forms;
  for (const MulTable& table : enumerate_up_to_iso(n, kind))
    forms.insert(canonical_form(table));
  return forms;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.str().empty())
      detail << "; ";
    detail << why;
  }
};

Outcome criterion_counts(const SharedData& data, bool racks) {
  Outcome out;
  const unsigned top = racks ? 6 : 7;
  std::vector<std::uint64_t> got;
  for (unsigned n = 1; n <= top; ++n) {
    const EnumerationResult& res = racks ? data.racks[n] : data.quandles[n];
    got.push_back(res.total);
    const std::uint64_t want = racks ? kRackTotal[n] : kQuandleTotal[n];
    if (res.total != want) {
      std::ostringstream why;
      why << "n=" << n << " expected " << want << " got " << res.total;
      out.fail(why.str());
    }
  }
  double elapsed = 0;
  for (unsigned n = 1; n <= top; ++n)
    elapsed += data.catalog_seconds[n] +
               (racks ? data.rack_seconds[n] : data.quandle_seconds[n]);
  const double budget = racks ? kRackBudget : kQuandleBudget;
  if (elapsed > budget) {
    std::ostringstream why;
    why << "took " << elapsed << " s, budget " << budget << " s";
    out.fail(why.str());
  }
  if (out.pass)
    out.detail << (racks ? "racks " : "quandles ") << join_counts(got) << " in "
               << std::fixed << std::setprecision(1) << elapsed << " s (budget "
               << budget << " s)";
  return out;
}

Outcome criterion_splits(const SharedData& data) {
  Outcome out;
  const EnumerationResult& r = data.racks[6];
  const EnumerationResult& q = data.quandles[6];
  if (r.medial != 329 || r.two_reductive != 323 || r.non_two_reductive != 30) {
    std::ostringstream why;
    why << "rack splits " << r.medial << "/" << r.two_reductive << "/"
        << r.non_two_reductive << ", expected 329/323/30";
    out.fail(why.str());
  }
  if (q.medial != 58 || q.two_reductive != 55 || q.non_two_reductive != 18) {
    std::ostringstream why;
    why << "quandle splits " << q.medial << "/" << q.two_reductive << "/"
        << q.non_two_reductive << ", expected 58/55/18";
    out.fail(why.str());
  }
  if (out.pass)
    out.detail << "order 6 racks 329/323/30, quandles 58/55/18";
  return out;
}

Outcome criterion_catalog(const SharedData& data) {
  Outcome out;
  for (unsigned n = 1; n <= 6; ++n) {
    const std::size_t all = data.catalogs[n].size();
    const std::size_t nonabelian = filter_nonabelian(data.catalogs[n]).size();
    if (all != kCatalogAll[n] || nonabelian != kCatalogNonabelian[n]) {
      std::ostringstream why;
      why << "n=" << n << " got a=" << all << " b=" << nonabelian << ", expected a="
          << kCatalogAll[n] << " b=" << kCatalogNonabelian[n];
      out.fail(why.str());
    }
  }
  double elapsed = 0;
  for (unsigned n = 1; n <= 6; ++n)
    elapsed += data.catalog_seconds[n];
  if (elapsed > kCatalogBudget) {
    std::ostringstream why;
    why << "took " << elapsed << " s, budget " << kCatalogBudget << " s";
    out.fail(why.str());
  }
  if (out.pass)
    out.detail << "a=1,2,4,11,19,56 b=0,0,1,4,10,36 in " << std::fixed
               << std::setprecision(1) << elapsed << " s (budget " << kCatalogBudget
               << " s)";
  return out;
}

Outcome criterion_oracle(const SharedData& data) {
  Outcome out;
  for (unsigned n = 1; n <= 4; ++n)
    if (pipeline_forms(data.racks[n], Kind::rack) != oracle_forms(n, Kind::rack)) {
      std::ostringstream why;
      why << "rack multisets differ at n=" << n;
      out.fail(why.str());
    }
  for (unsigned n = 1; n <= 5; ++n)
    if (pipeline_forms(data.quandles[n], Kind::quandle) !=
        oracle_forms(n, Kind::quandle)) {
      std::ostringstream why;
      why << "quandle multisets differ at n=" << n;
      out.fail(why.str());
    }
  if (out.pass)
    out.detail << "canonical multisets identical, racks n<=4 and quandles n<=5";
  return out;
}

Outcome criterion_burnside(const SharedData& data) {
  Outcome out;
  unsigned groups = 0;
  for (unsigned n = 1; n <= 5; ++n)
    for (const SubgroupClass& cls : data.catalogs[n])
      for (Kind kind : {Kind::rack, Kind::quandle}) {
        const FolderSpace space = folder_space(cls.group, kind);
        const PermGroup norm = normalizer_in_sym(cls.group);
        const std::uint64_t averaged = folder_orbit_count(space, norm);
        const std::uint64_t swept = orbit_sweep(space, norm).orbit_count_all;
        if (averaged != swept) {
          std::ostringstream why;
          why << "n=" << n << " class " << cls.class_id << " "
              << to_string(kind) << ": averaged " << averaged << " != swept "
              << swept;
          out.fail(why.str());
        }
        unsigned __int128 sum = 0;
        for (const Perm& f : norm.elements())
          sum += fixed_point_count(fix_digraph(space, f));
        if (sum % norm.order() != 0) {
          std::ostringstream why;
          why << "n=" << n << " class " << cls.class_id
              << ": fixed point sum not divisible by |N|=" << norm.order();
          out.fail(why.str());
        }
        ++groups;
      }
  if (out.pass)
    out.detail << "orbit counts agree and fixed-point sums divide across "
               << groups << " group/kind pairs";
  return out;
}

Outcome criterion_worked_examples() {
  Outcome out;

  // cyclic group of order 6 inside S_5, f = (1,2)(4,5)
  {
    const PermGroup group(5, {parse_cycles("(1,2)(3,4,5)", 5)});
    const FolderSpace space = folder_space(group, Kind::rack);
    const Perm f = parse_cycles("(1,2)(4,5)", 5);
    const FixDigraph digraph = fix_digraph(space, f);
    const std::vector<std::uint32_t> row{0, 2, 1, 3, 5, 4};
    if (digraph.target_part != std::vector<unsigned>{0, 1} ||
        digraph.target_index[0] != row || digraph.target_index[1] != row)
      out.fail("cyclic example digraph edges differ");
    if (fixed_point_count(digraph) != 4)
      out.fail("cyclic example fixed count is not 4");
    const ActionTable table = precompute_action(space, f);
    std::uint64_t scanned = 0;
    for (std::uint64_t i = 0; i < space.size; ++i)
      if (apply_table(space, table, i) == i)
        ++scanned;
    if (scanned != 4)
      out.fail("cyclic example direct scan is not 4");
  }

  // product of two copies of S_3 inside S_7, f = (1,5)(2,4)(3,6)
  {
    const PermGroup group(7, {parse_cycles("(1,2)", 7), parse_cycles("(1,2,3)", 7),
                              parse_cycles("(4,5)", 7), parse_cycles("(4,5,6)", 7)});
    const FolderSpace space = folder_space(group, Kind::rack);
    const Perm f = parse_cycles("(1,5)(2,4)(3,6)", 7);
    const FixDigraph digraph = fix_digraph(space, f);
    if (digraph.target_part != std::vector<unsigned>{1, 0, 2} ||
        digraph.target_index[0] != std::vector<std::uint32_t>{0, 1} ||
        digraph.target_index[1] != std::vector<std::uint32_t>{0, 1} ||
        digraph.target_index[2] != std::vector<std::uint32_t>{0})
      out.fail("product example digraph edges differ");
    if (fixed_point_count(digraph) != 2)
      out.fail("product example fixed count is not 2");
    const ActionTable table = precompute_action(space, f);
    std::uint64_t scanned = 0;
    for (std::uint64_t i = 0; i < space.size; ++i)
      if (apply_table(space, table, i) == i)
        ++scanned;
    if (scanned != 2)
      out.fail("product example direct scan is not 2");
  }

  if (out.pass)
    out.detail << "both digraphs reproduced edge-for-edge, fixed counts 4 and 2";
  return out;
}

Outcome criterion_properties(const SharedData& data) {
  Outcome out;
  unsigned spaces = 0;
  std::uint64_t folders = 0;
  for (unsigned n = 1; n <= 5 && out.pass; ++n)
    for (const SubgroupClass& cls : data.catalogs[n])
      for (Kind kind : {Kind::rack, Kind::quandle}) {
        if (!out.pass)
          break;
        const FolderSpace space = folder_space(cls.group, kind);
        if (space.size > kPropertySpaceCap)
          continue;
        ++spaces;
        folders += space.size;
        const PermGroup norm = normalizer_in_sym(cls.group);
        const auto& elems = norm.elements();
        std::vector<ActionTable> tables;
        tables.reserve(elems.size());
        for (const Perm& f : elems)
          tables.push_back(precompute_action(space, f));
        auto table_of = [&](const Perm& f) -> const ActionTable& {
          const auto it = std::lower_bound(elems.begin(), elems.end(), f);
          return tables[std::size_t(it - elems.begin())];
        };

        // index encoding round-trips
        for (std::uint64_t i = 0; i < space.size; ++i)
          if (position_of(space, element_at(space, i)) != i) {
            out.fail("index roundtrip broke");
            break;
          }

        // the identity acts trivially
        const ActionTable& id_table = table_of(Perm(space.group.degree()));
        for (std::uint64_t i = 0; i < space.size; ++i)
          if (apply_table(space, id_table, i) != i) {
            out.fail("identity does not act trivially");
            break;
          }

        // acting by h then f equals acting by h*f
        for (const Perm& f : elems) {
          if (!out.pass)
            break;
          const ActionTable& tf = table_of(f);
          for (const Perm& h : elems) {
            if (!out.pass)
              break;
            const ActionTable& th = table_of(h);
            const ActionTable& thf = table_of(h * f);
            for (std::uint64_t i = 0; i < space.size; ++i)
              if (apply_table(space, tf, apply_table(space, th, i)) !=
                  apply_table(space, thf, i)) {
                out.fail("composition is not a right action");
                break;
              }
          }
        }

        // being an envelope is invariant along the action
        std::vector<char> env(space.size);
        for (std::uint64_t i = 0; i < space.size; ++i)
          env[i] = is_envelope(space, element_at(space, i)) ? 1 : 0;
        for (const ActionTable& table : tables) {
          if (!out.pass)
            break;
          for (std::uint64_t i = 0; i < space.size; ++i)
            if (env[apply_table(space, table, i)] != env[i]) {
              out.fail("envelope flag changed along the action");
              break;
            }
        }

        // digraph structure per normalizer element
        for (std::size_t fi = 0; fi < elems.size() && out.pass; ++fi) {
          const FixDigraph digraph = fix_digraph(space, elems[fi]);
          const std::size_t k = space.orbits.reps.size();
          std::vector<char> hit(k, 0);
          for (std::size_t zi = 0; zi < k; ++zi) {
            const unsigned target = digraph.target_part[zi];
            if (target >= k || hit[target]) {
              out.fail("target parts are not a permutation");
              break;
            }
            hit[target] = 1;
            if (digraph.induced.apply(Point(zi)) != target) {
              out.fail("induced permutation disagrees with target parts");
              break;
            }
            std::vector<char> seen(space.radices[target], 0);
            for (std::uint32_t c : digraph.target_index[zi]) {
              if (c >= space.radices[target] || seen[c]) {
                out.fail("edge map is not a bijection");
                break;
              }
              seen[c] = 1;
            }
            if (digraph.part_sizes[zi] != space.radices[zi]) {
              out.fail("part size disagrees with the radix");
              break;
            }
          }
          if (!out.pass)
            break;
          std::uint64_t scanned = 0;
          for (std::uint64_t i = 0; i < space.size; ++i)
            if (apply_table(space, tables[fi], i) == i)
              ++scanned;
          if (fixed_point_count(digraph) != scanned) {
            out.fail("cycle product disagrees with a direct fixed scan");
            break;
          }
        }

        // quandle folders always give idempotent tables
        if (kind == Kind::quandle && out.pass)
          for (std::uint64_t i = 0; i < space.size; ++i) {
            const MulTable table = rack_from_envelope(space, element_at(space, i));
            for (Point x = 0; x < table.size(); ++x)
              if (table.at(x, x) != x) {
                out.fail("quandle folder table is not idempotent");
                break;
              }
            if (!out.pass)
              break;
          }

        // two-reductive survivors are medial
        if (out.pass) {
          const SweepResult sweep = orbit_sweep(space, norm);
          for (const Folder& folder : sweep.reps) {
            const Classification flags =
                classify(rack_from_envelope(space, folder));
            if (flags.two_reductive && !flags.medial) {
              out.fail("found a two-reductive survivor that is not medial");
              break;
            }
          }
        }
      }
  if (out.pass)
    out.detail << "all six property families hold across " << spaces
               << " spaces (" << folders << " folders)";
  return out;
}

Outcome criterion_nonabelian(const SharedData& data) {
  Outcome out;
  for (unsigned n = 1; n <= 6; ++n)
    for (Kind kind : {Kind::rack, Kind::quandle}) {
      EnumOptions options;
      options.nonabelian_only = true;
      const EnumerationResult restricted =
          enumerate_order(n, kind, data.catalogs[n], options);
      const EnumerationResult& full =
          kind == Kind::rack ? data.racks[n] : data.quandles[n];
      const std::uint64_t want =
          kind == Kind::rack ? kRackNon2Red[n] : kQuandleNon2Red[n];
      if (restricted.total != want || restricted.total != full.non_two_reductive ||
          restricted.two_reductive != 0) {
        std::ostringstream why;
        why << to_string(kind) << " n=" << n << " restricted total "
            << restricted.total << ", expected " << want << " (full run says "
            << full.non_two_reductive << ")";
        out.fail(why.str());
      }
    }
  if (out.pass)
    out.detail << "nonabelian-only totals equal the non-2-reductive columns, n<=6";
  return out;
}

Outcome criterion_conjecture(const SharedData& data) {
  Outcome out;
  for (unsigned p : {3u, 5u, 7u}) {
    const std::uint64_t rack_gap =
        data.racks[p].medial - data.racks[p].two_reductive;
    const std::uint64_t quandle_gap =
        data.quandles[p].medial - data.quandles[p].two_reductive;
    if (rack_gap != p - 2 || quandle_gap != p - 2) {
      std::ostringstream why;
      why << "p=" << p << " gaps " << rack_gap << " and " << quandle_gap
          << ", expected " << p - 2;
      out.fail(why.str());
    }
  }
  if (out.pass)
    out.detail << "medial minus two-reductive is p-2 at p=3,5,7 for both kinds";
  return out;
}

} // namespace

int main() {
  std::vector<std::pair<int, Outcome>> results;
  try {
    const SharedData data = compute_shared();
    results.emplace_back(1, criterion_counts(data, true));
    results.emplace_back(2, criterion_counts(data, false));
    results.emplace_back(3, criterion_splits(data));
    results.emplace_back(4, criterion_catalog(data));
    results.emplace_back(5, criterion_oracle(data));
    results.emplace_back(6, criterion_burnside(data));
    results.emplace_back(7, criterion_worked_examples());
    results.emplace_back(8, criterion_properties(data));
    results.emplace_back(9, criterion_nonabelian(data));
    results.emplace_back(10, criterion_conjecture(data));
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 1;
  }

  bool all_pass = true;
  for (const auto& [id, outcome] : results) {
    std::cout << "criterion " << std::setw(2) << id << ": "
              << (outcome.pass ? "PASS" : "FAIL") << "  " << outcome.detail.str()
              << "\n";
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
