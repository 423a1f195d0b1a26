#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "rqe/action_orbits.hpp"
#include "rqe/burnside.hpp"
#include "rqe/envelope.hpp"
#include "rqe/errors.hpp"
#include "rqe/library_io.hpp"
#include "rqe/oracle.hpp"
#include "rqe/perm_group.hpp"
#include "rqe/subgroup_catalog.hpp"

namespace {

using namespace rqe;

std::vector<SubgroupClass> load_catalog(unsigned n, const std::string& path) {
  if (path.empty())
    return subgroups_up_to_conjugacy(n);
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open catalog: " + path);
  std::vector<SubgroupClass> catalog = ingest_generators(in);
  for (const SubgroupClass& cls : catalog)
    if (cls.group.degree() != n)
      throw ConfigError("catalog degree does not match --n");
  return catalog;
}

// Largest point mentioned anywhere in the permutation texts; lets burnside
// run without --n when the group moves the top point.
unsigned infer_degree(const std::vector<std::string>& texts) {
  unsigned best = 0;
  for (const std::string& text : texts) {
    unsigned value = 0;
    bool in_number = false;
    for (char ch : text) {
      if (ch >= '0' && ch <= '9') {
        value = value * 10 + unsigned(ch - '0');
        in_number = true;
        if (value > kMaxDegree)
          throw ConfigError("point exceeds the maximum degree");
      } else if (in_number) {
        best = std::max(best, value);
        value = 0;
        in_number = false;
      }
    }
    if (in_number)
      best = std::max(best, value);
  }
  if (best == 0)
    throw ConfigError("cannot infer the degree, pass --n");
  return best;
}

std::vector<Perm> parse_generator_list(const std::string& text, unsigned n) {
  std::vector<Perm> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(';', start);
    const std::string token = text.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    if (token.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(parse_perm(token, n));
    if (end == std::string::npos)
      break;
    start = end + 1;
  }
  if (gens.empty())
    throw ConfigError("empty generator list");
  return gens;
}

int run(int argc, char** argv) {
  CLI::App app{"classify racks and quandles of small order via group envelopes"};
  app.require_subcommand(1);

  // subgroups
  auto* sub_groups = app.add_subcommand("subgroups", "list subgroup classes of S_n");
  unsigned sg_n = 0;
  std::string sg_catalog;
  sub_groups->add_option("--n", sg_n, "degree")->required();
  sub_groups->add_option("--catalog", sg_catalog, "read classes from a file instead of computing them");
  sub_groups->callback([&] {
    const auto catalog = load_catalog(sg_n, sg_catalog);
    export_catalog(catalog, std::cout);
    std::size_t nonabelian = 0;
    for (const SubgroupClass& cls : catalog)
      nonabelian += cls.is_abelian ? 0 : 1;
    std::cout << "a=" << catalog.size() << " b=" << nonabelian << '\n';
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "classify racks or quandles of order n");
  unsigned en_n = 0;
  std::string en_kind = "rack";
  std::string en_out;
  std::string en_catalog;
  bool en_nonabelian = false;
  bool en_verbose = false;
  unsigned en_workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t en_mem_cap = kDefaultMemCapBits;
  enumerate->add_option("--n", en_n, "order")->required();
  enumerate->add_option("--kind", en_kind, "rack or quandle")
      ->check(CLI::IsMember({"rack", "quandle"}))
      ->required();
  enumerate->add_flag("--nonabelian-only", en_nonabelian,
                      "only sweep classes with nonabelian multiplication group");
  enumerate->add_option("--out", en_out, "write the survivor library to this path");
  enumerate->add_option("--catalog", en_catalog, "read subgroup classes from a file");
  enumerate->add_option("--workers", en_workers, "sweep classes in parallel");
  enumerate->add_option("--mem-cap-bits", en_mem_cap, "bit budget for one survivor vector")
      ->envname("RQE_MEM_CAP_BITS");
  enumerate->add_flag("--verbose", en_verbose, "log per-class progress to stderr");
  enumerate->callback([&] {
    EnumOptions options;
    options.mem_cap_bits = en_mem_cap;
    options.workers = en_workers;
    options.nonabelian_only = en_nonabelian;
    options.progress = en_verbose ? &std::cerr : nullptr;
    const auto catalog = load_catalog(en_n, en_catalog);
    const EnumerationResult result =
        enumerate_order(en_n, parse_kind(en_kind), catalog, options);
    if (!en_out.empty())
      write_library(library_from_enumeration(result), en_out);
    std::cout << result.total << ' ' << result.medial << ' '
              << result.two_reductive << ' ' << result.non_two_reductive << '\n';
  });

  // count
  auto* count = app.add_subcommand("count", "count normalizer orbits per subgroup class");
  unsigned ct_n = 0;
  std::string ct_kind = "rack";
  std::string ct_catalog;
  count->add_option("--n", ct_n, "order")->required();
  count->add_option("--kind", ct_kind, "rack or quandle")
      ->check(CLI::IsMember({"rack", "quandle"}))
      ->required();
  count->add_option("--catalog", ct_catalog, "read subgroup classes from a file");
  count->callback([&] {
    const auto catalog = load_catalog(ct_n, ct_catalog);
    const Kind kind = parse_kind(ct_kind);
    std::uint64_t total = 0;
    for (const SubgroupClass& cls : catalog) {
      const FolderSpace space = folder_space(cls.group, kind);
      const PermGroup norm = normalizer_in_sym(cls.group);
      const std::uint64_t orbits = folder_orbit_count(space, norm);
      std::cout << "class=" << cls.class_id << " order=" << cls.group.order()
                << " orbits=" << orbits << '\n';
      total += orbits;
    }
    std::cout << "total=" << total << '\n';
  });

  // burnside
  auto* burnside = app.add_subcommand("burnside",
                                      "fixed folders of one normalizer element");
  unsigned bs_n = 0;
  std::string bs_group;
  std::string bs_f;
  std::string bs_kind = "rack";
  std::string bs_dot;
  burnside->add_option("--n", bs_n, "degree (default: largest point mentioned)");
  burnside->add_option("--group", bs_group, "';'-separated generators")->required();
  burnside->add_option("--f", bs_f, "normalizer element")->required();
  burnside->add_option("--kind", bs_kind, "rack or quandle")
      ->check(CLI::IsMember({"rack", "quandle"}))
      ->required();
  burnside->add_option("--dot", bs_dot, "write the digraph in DOT format to this path");
  burnside->callback([&] {
    if (bs_n == 0)
      bs_n = infer_degree({bs_group, bs_f});
    PermGroup group(bs_n, parse_generator_list(bs_group, bs_n));
    const Perm f = parse_perm(bs_f, bs_n);
    const FolderSpace space = folder_space(group, parse_kind(bs_kind));
    const FixDigraph digraph = fix_digraph(space, f);
    for (const CycleCount& cycle : short_cycle_counts(digraph))
      std::cout << "gamma part=" << unsigned(space.orbits.reps[cycle.part]) + 1
                << " cycle_len=" << cycle.length << " count=" << cycle.count << '\n';
    std::cout << "fix=" << fixed_point_count(digraph) << '\n';
    if (!bs_dot.empty()) {
      std::ofstream out(bs_dot);
      if (!out)
        throw ConfigError("cannot open for writing: " + bs_dot);
      write_dot(digraph, space, out);
    }
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive table search cross-check");
  unsigned or_n = 0;
  std::string or_kind = "rack";
  oracle->add_option("--n", or_n, "order")->required();
  oracle->add_option("--kind", or_kind, "rack or quandle")
      ->check(CLI::IsMember({"rack", "quandle"}))
      ->required();
  oracle->callback([&] {
    std::cout << enumerate_up_to_iso(or_n, parse_kind(or_kind)).size() << '\n';
  });

  // verify
  auto* verify = app.add_subcommand("verify", "recheck a survivor library");
  std::string vf_lib;
  verify->add_option("--lib", vf_lib, "library path")->required();
  verify->callback([&] {
    const VerifyStats stats = verify_library(read_library(vf_lib));
    std::cout << "ok classes=" << stats.classes_checked
              << " envelopes=" << stats.envelopes_checked << '\n';
  });

  // export
  auto* exp = app.add_subcommand("export", "dump tables or counts from a library");
  std::string ex_lib;
  std::string ex_tables;
  std::string ex_counts;
  exp->add_option("--lib", ex_lib, "library path")->required();
  exp->add_option("--tables", ex_tables, "write multiplication tables to this path");
  exp->add_option("--counts", ex_counts, "write the totals row to this path");
  exp->callback([&] {
    const Library lib = read_library(ex_lib);
    if (!ex_tables.empty()) {
      std::ofstream out(ex_tables);
      if (!out)
        throw ConfigError("cannot open for writing: " + ex_tables);
      export_tables(lib, out);
    }
    if (!ex_counts.empty()) {
      std::ofstream out(ex_counts);
      if (!out)
        throw ConfigError("cannot open for writing: " + ex_counts);
      export_counts(lib, out);
    }
    if (ex_tables.empty() && ex_counts.empty())
      export_counts(lib, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MemoryCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  }
}
