#include "rqe/action_orbits.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "rqe/errors.hpp"

namespace rqe {

namespace {

void check_normalizing(const FolderSpace& space, const Perm& f) {
  if (f.degree() != space.group.degree())
    throw ConfigError("permutation degree does not match the group");
  if (!normalizes(f, space.group))
    throw ConfigError("permutation does not normalize the group");
}

} // namespace

Folder apply_normalizer(const FolderSpace& space, const Perm& f, const Folder& folder) {
  check_normalizing(space, f);
  if (folder.entries.size() != space.candidates.size())
    throw ConfigError("folder entry count does not match orbit count");

  const Perm finv = f.inverse();
  Folder out;
  out.entries.reserve(space.orbits.reps.size());
  for (Point x : space.orbits.reps) {
    const Point y = finv.apply(x);
    const unsigned zi = space.orbits.orbit_index_of[y];
    out.entries.push_back(folder.entries[zi]
                              .conjugated_by(space.orbits.transversal[y])
                              .conjugated_by(f));
  }
  return out;
}

ActionTable precompute_action(const FolderSpace& space, const Perm& f) {
  check_normalizing(space, f);

  ActionTable table;
  const Perm finv = f.inverse();
  const std::size_t k = space.orbits.reps.size();
  table.source_rep.reserve(k);
  table.lookup.reserve(k);

  for (std::size_t xi = 0; xi < k; ++xi) {
    const Point x = space.orbits.reps[xi];
    const Point y = finv.apply(x);
    const unsigned zi = space.orbits.orbit_index_of[y];
    if (space.radices[zi] != space.radices[xi])
      throw InternalError("normalizer does not permute the candidate pools");
    table.source_rep.push_back(zi);

    // (c ^ t_y) ^ f = c ^ (t_y * f)
    const Perm conj = space.orbits.transversal[y] * f;
    std::vector<std::uint32_t> row;
    row.reserve(space.radices[zi]);
    const auto& target = space.candidates[xi];
    for (const Perm& c : space.candidates[zi]) {
      const Perm image = c.conjugated_by(conj);
      auto pos = std::lower_bound(target.begin(), target.end(), image);
      if (pos == target.end() || *pos != image)
        throw InternalError("conjugated candidate fell outside its pool");
      row.push_back(std::uint32_t(pos - target.begin()));
    }
    table.lookup.push_back(std::move(row));
  }

#ifndef NDEBUG
  if (space.size > 0) {
    const Folder probe = element_at(space, 0);
    assert(apply_table(space, table, 0) ==
           position_of(space, apply_normalizer(space, f, probe)));
  }
#endif
  return table;
}

std::uint64_t apply_table(const FolderSpace& space, const ActionTable& table,
                          std::uint64_t index) {
  const auto digits = digits_at(space, index);
  std::uint64_t out = 0;
  for (std::size_t xi = 0; xi < digits.size(); ++xi)
    out += std::uint64_t(table.lookup[xi][digits[table.source_rep[xi]]]) *
           space.weights[xi];
  return out;
}

SweepResult orbit_sweep(const FolderSpace& space, const PermGroup& normalizer,
                        std::uint64_t mem_cap_bits) {
  if (space.size > mem_cap_bits)
    throw MemoryCapError("folder space needs " + std::to_string(space.size) +
                         " bits, cap is " + std::to_string(mem_cap_bits));
  if (normalizer.degree() != space.group.degree())
    throw ConfigError("normalizer degree does not match the group");

  std::vector<ActionTable> tables;
  tables.reserve(normalizer.order() - 1);
  for (const Perm& f : normalizer.elements())
    if (!f.is_identity())
      tables.push_back(precompute_action(space, f));

  SweepResult result{BitVec(space.size, true), {}, 0};
  for (std::uint64_t i = 0; i < space.size; ++i) {
    if (!result.survivors.get(i))
      continue;
    // First alive index of an orbit is its minimum: every smaller member
    // would have cleared it when its own orbit was processed.
    ++result.orbit_count_all;
    for (const ActionTable& table : tables) {
      const std::uint64_t p = apply_table(space, table, i);
      assert(p >= i);
      if (p > i)
        result.survivors.set(p, false);
    }
    Folder folder = element_at(space, i);
    if (is_envelope(space, folder))
      result.reps.push_back(std::move(folder));
    else
      result.survivors.set(i, false);
  }
  assert(result.survivors.count() == result.reps.size());
  return result;
}

EnumerationResult enumerate_order(unsigned n, Kind kind,
                                  const std::vector<SubgroupClass>& catalog,
                                  const EnumOptions& options) {
  EnumerationResult out;
  out.degree = n;
  out.kind = kind;

  std::vector<const SubgroupClass*> jobs;
  for (const SubgroupClass& cls : catalog) {
    if (cls.group.degree() != n)
      throw ConfigError("catalog entry degree does not match n");
    if (options.nonabelian_only && cls.is_abelian) {
      ++out.skipped_abelian;
      continue;
    }
    jobs.push_back(&cls);
  }

  std::mutex log_mutex;
  auto run_one = [&](const SubgroupClass& cls) -> std::optional<ClassEnumeration> {
    FolderSpace space = folder_space(cls.group, kind);
    if (!might_be_admissible(space))
      return std::nullopt;
    PermGroup norm = normalizer_in_sym(cls.group, options.normalizer_cap);
    SweepResult sweep = orbit_sweep(space, norm, options.mem_cap_bits);

    const std::size_t kept = sweep.reps.size();
    BitVec medial(kept, false);
    BitVec two_reductive(kept, false);
    for (std::size_t j = 0; j < kept; ++j) {
      MulTable table = rack_from_envelope(space, sweep.reps[j]);
      Classification c = classify(table);
      if (!c.rack || (kind == Kind::quandle && !c.quandle))
        throw InternalError("reconstructed table has the wrong type");
      medial.set(j, c.medial);
      two_reductive.set(j, c.two_reductive);
    }

    if (options.progress) {
      std::lock_guard<std::mutex> guard(log_mutex);
      *options.progress << "class " << cls.class_id << " order=" << cls.group.order()
                        << " space=" << space.size
                        << " orbits=" << sweep.orbit_count_all
                        << " kept=" << kept << '\n';
    }
    return ClassEnumeration{cls.class_id,       cls.group,
                            space.radices,      space.size,
                            std::move(sweep),   std::move(medial),
                            std::move(two_reductive)};
  };

  const unsigned workers =
      unsigned(std::min<std::size_t>(options.workers ? options.workers : 1, jobs.size()));
  std::vector<std::optional<ClassEnumeration>> slots(jobs.size());

  if (workers <= 1) {
    for (std::size_t idx = 0; idx < jobs.size(); ++idx)
      slots[idx] = run_one(*jobs[idx]);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto body = [&] {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= jobs.size())
          return;
        {
          std::lock_guard<std::mutex> guard(error_mutex);
          if (first_error)
            return;
        }
        try {
          slots[idx] = run_one(*jobs[idx]);
        } catch (...) {
          std::lock_guard<std::mutex> guard(error_mutex);
          if (!first_error)
            first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(body);
    for (std::thread& t : pool)
      t.join();
    if (first_error)
      std::rethrow_exception(first_error);
  }

  for (auto& slot : slots) {
    if (!slot) {
      ++out.skipped_inadmissible;
      continue;
    }
    out.total += slot->sweep.reps.size();
    out.medial += slot->survivor_medial.count();
    out.two_reductive += slot->survivor_two_reductive.count();
    out.classes.push_back(std::move(*slot));
  }
  out.non_two_reductive = out.total - out.two_reductive;
  return out;
}

} // namespace rqe
