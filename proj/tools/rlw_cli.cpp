// Command-line front end: validation, filter and topology reports, inverse
// limits, completions, structure analysis, catalog generation, and the
// verification suites. Exit codes: 0 clean, 1 a mathematical violation was
// found, 2 usage or input errors.
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rlw/analysis.hpp"
#include "rlw/catalog.hpp"
#include "rlw/json_io.hpp"
#include "rlw/limits.hpp"
#include "rlw/topology.hpp"
#include "rlw/verify.hpp"

using namespace rlw;

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2;

struct Options {
  bool json = false;
  int jobs = 1;
  std::uint64_t seed = 1;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& ex) {
    throw std::invalid_argument(path + ": " + ex.what());
  }
  return j;
}

ResiduatedLattice read_algebra(const std::string& path) {
  return algebra_from_json(read_json_file(path));
}

// wrapper commands require a genuine residuated lattice as input
ResiduatedLattice read_valid_algebra(const std::string& path) {
  ResiduatedLattice A = read_algebra(path);
  ValidationReport r = validate(A);
  if (!r.ok()) {
    std::string why = !r.structural_errors.empty() ? r.structural_errors.front()
                                                   : r.violations.front().axiom + " fails";
    throw std::invalid_argument(path + ": input is not a residuated lattice (" + why + ")");
  }
  return A;
}

std::string indices_str(Mask m, int n) {
  std::string s;
  for (int i = 0; i < n; ++i)
    if (contains(m, i)) s += (s.empty() ? "" : ",") + std::to_string(i);
  return "{" + s + "}";
}

const char* separation_str(SeparationClass c) {
  switch (c) {
    case SeparationClass::T2: return "T2";
    case SeparationClass::T1: return "T1";
    case SeparationClass::T0: return "T0";
    default: return "none";
  }
}

// comma-separated indices -> filter; semicolons split a system
FilterSet parse_filter(const std::string& text, const ResiduatedLattice& A) {
  Mask m = 0;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad filter literal: '" + tok + "'");
    }
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size() || x < 0 || x >= A.n)
      throw std::invalid_argument("bad filter element: '" + tok + "'");
    m |= bit(x);
  }
  if (m == 0) throw std::invalid_argument("empty filter literal");
  if (!is_filter(A, m))
    throw std::invalid_argument(indices_str(m, A.n) + " is not a filter of the input algebra");
  return FilterSet{A.n, m};
}

SystemOfFilters parse_system(const std::string& text, const ResiduatedLattice& A) {
  SystemOfFilters out;
  std::istringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (!part.empty()) out.push_back(parse_filter(part, A));
  if (out.empty()) throw std::invalid_argument("empty filter system");
  return out;
}

int cmd_validate(const std::string& path, const Options& opt) {
  ResiduatedLattice A = read_algebra(path);
  ValidationReport r = validate(A);
  if (opt.json) {
    Json j;
    j["ok"] = r.ok();
    j["trivial"] = r.trivial;
    j["structural_errors"] = r.structural_errors;
    Json vs = Json::array();
    for (const AxiomViolation& v : r.violations) {
      Json e;
      e["axiom"] = v.axiom;
      Json w = Json::array();
      for (Elem x : v.witness)
        if (x >= 0) w.push_back(x);
      e["witness"] = std::move(w);
      vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    std::cout << j.dump() << "\n";
  } else if (r.ok()) {
    std::cout << "valid residuated lattice, " << A.n << " elements"
              << (r.trivial ? " (trivial)" : "") << "\n";
  } else {
    for (const std::string& e : r.structural_errors) std::cout << "structure: " << e << "\n";
    for (const AxiomViolation& v : r.violations) {
      std::cout << "axiom " << v.axiom << " fails at (";
      bool first = true;
      for (Elem x : v.witness)
        if (x >= 0) {
          std::cout << (first ? "" : ",") << x;
          first = false;
        }
      std::cout << ")\n";
    }
  }
  return r.ok() ? kOk : kViolation;
}

int cmd_filters(const std::string& path, bool dot, const Options& opt) {
  ResiduatedLattice A = read_valid_algebra(path);
  if (dot) {
    std::cout << filter_lattice_dot(A);
    return kOk;
  }
  std::vector<FilterSet> filters = enumerate_filters(A);
  std::vector<FilterSet> primes = prime_filters(A);
  if (opt.json) {
    Json j;
    j["count"] = filters.size();
    Json fs = Json::array();
    for (const FilterSet& F : filters) {
      Json e;
      e["members"] = filter_to_json(F);
      e["prime"] = is_prime(A, F);
      fs.push_back(std::move(e));
    }
    j["filters"] = std::move(fs);
    j["prime_count"] = primes.size();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << filters.size() << " filters, " << primes.size() << " prime\n";
    for (const FilterSet& F : filters)
      std::cout << indices_str(F.members, A.n) << (is_prime(A, F) ? "  prime" : "") << "\n";
  }
  return kOk;
}

int cmd_topology(const std::string& path, const std::string& system_text, const Options& opt) {
  ResiduatedLattice A = read_valid_algebra(path);
  SystemOfFilters system = parse_system(system_text, A);
  if (auto bad = directedness_violation(system))
    throw std::invalid_argument("system is not down-directed: members " +
                                std::to_string(bad->first) + " and " +
                                std::to_string(bad->second) + " have no lower bound");
  FiniteTopology T = induce_topology(A, system);
  ContinuityReport cont = check_topological_algebra(A, T);
  SeparationClass sep = separation_class(T);
  if (opt.json) {
    Json j = topology_to_json(T);
    Json opens = Json::array();
    for (Mask u : all_open_sets(T)) opens.push_back(filter_to_json(FilterSet{A.n, u}));
    j["open_sets"] = std::move(opens);
    j["topological_algebra"] = cont.ok;
    j["separation"] = separation_str(sep);
    j["discrete"] = T.is_discrete();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "carrier " << A.n << ", induced by " << system.size() << " filters\n";
    for (Elem x = 0; x < A.n; ++x)
      std::cout << "N(" << x << ") = " << indices_str(T.min_nbhd[x], A.n) << "\n";
    std::cout << "open sets:";
    for (Mask u : all_open_sets(T)) std::cout << " " << indices_str(u, A.n);
    std::cout << "\ntopological algebra: " << (cont.ok ? "yes" : "no") << "\n";
    std::cout << "separation: " << separation_str(sep) << "\n";
    std::cout << "discrete: " << (T.is_discrete() ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_zltrl(const std::string& path, bool dot, const Options& opt) {
  ResiduatedLattice A = read_valid_algebra(path);
  std::vector<FiniteTopology> topologies = enumerate_zltrl(A);
  std::vector<FilterSet> filters = enumerate_filters(A);
  auto filter_of = [&](const FiniteTopology& T) -> const FilterSet* {
    for (const FilterSet& F : filters)
      if (induce_topology(A, {F}) == T) return &F;
    return nullptr;
  };
  if (dot) {
    for (const FiniteTopology& T : topologies) std::cout << specialization_dot(T);
    return kOk;
  }
  if (opt.json) {
    Json j;
    j["count"] = topologies.size();
    Json ts = Json::array();
    for (const FiniteTopology& T : topologies) {
      Json e = topology_to_json(T);
      const FilterSet* F = filter_of(T);
      e["filter"] = F ? filter_to_json(*F) : Json();
      e["discrete"] = T.is_discrete();
      ts.push_back(std::move(e));
    }
    j["topologies"] = std::move(ts);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << topologies.size() << " topologies\n";
    for (const FiniteTopology& T : topologies) {
      std::cout << "blocks:";
      std::vector<bool> seen(static_cast<size_t>(A.n), false);
      for (Elem x = 0; x < A.n; ++x) {
        if (seen[static_cast<size_t>(x)]) continue;
        for (int y : mask_to_indices(T.min_nbhd[x])) seen[static_cast<size_t>(y)] = true;
        std::cout << " " << indices_str(T.min_nbhd[x], A.n);
      }
      const FilterSet* F = filter_of(T);
      std::cout << "  filter " << (F ? indices_str(F->members, A.n) : std::string("?"))
                << (T.is_discrete() ? "  discrete" : "") << "\n";
    }
  }
  return kOk;
}

int cmd_completion(const std::string& path, const Options& opt) {
  ResiduatedLattice A = read_valid_algebra(path);
  CompletionResult c = profinite_completion(A);
  bool iso = !preservation_failure(c.e) && c.limit.algebra.n == A.n;
  std::vector<bool> hit(static_cast<size_t>(A.n), false);
  for (Elem v : c.e.map) {
    iso = iso && !hit[static_cast<size_t>(v)];
    hit[static_cast<size_t>(v)] = true;
  }
  if (opt.json) {
    Json j;
    j["size"] = A.n;
    j["completion_size"] = c.limit.algebra.n;
    Json fs = Json::array();
    for (const FilterSet& F : c.filters) fs.push_back(filter_to_json(F));
    j["filters"] = std::move(fs);
    j["canonical_map"] = c.e.map;
    j["isomorphism"] = iso;
    j["completion"] = algebra_to_json(c.limit.algebra);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "algebra size " << A.n << ", completion size " << c.limit.algebra.n << "\n";
    std::cout << c.filters.size() << " filters in the completion index\n";
    std::cout << "canonical map:";
    for (Elem v : c.e.map) std::cout << " " << v;
    std::cout << "\nisomorphism: " << (iso ? "yes" : "no") << "\n";
  }
  return iso ? kOk : kViolation;
}

int cmd_limit(const std::string& path, const Options& opt) {
  InverseSystem S = system_from_json(read_json_file(path));
  std::vector<std::string> defects = system_defects(S);
  if (!defects.empty())
    throw std::invalid_argument(path + ": invalid inverse system: " + defects.front());
  LimitResult L = inverse_limit(S);
  if (opt.json) {
    Json j;
    j["indices"] = S.index.size;
    j["limit_size"] = L.algebra.n;
    Json ts = Json::array();
    for (const Thread& t : L.threads) ts.push_back(t.tuple);
    j["threads"] = std::move(ts);
    j["limit"] = algebra_to_json(L.algebra);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << S.index.size << " indices, limit size " << L.algebra.n << "\n";
    for (const Thread& t : L.threads) {
      std::cout << "thread:";
      for (Elem v : t.tuple) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_analyze(const std::string& path, const Options& opt) {
  ResiduatedLattice A = read_valid_algebra(path);
  StructureReport s = analyze(A);
  std::optional<IndecomposabilityReport> tests;
  if (!A.trivial()) tests = is_directly_indecomposable(A);
  if (opt.json) {
    Json j;
    j["key"] = s.algebra_key;
    j["size"] = s.size;
    j["simple"] = s.is_simple;
    j["subdirectly_irreducible"] = s.is_subdirectly_irreducible;
    j["directly_indecomposable"] = s.is_directly_indecomposable;
    if (tests) {
      Json t;
      t["down_directed"] = tests->by_down_directedness;
      t["intersections"] = tests->by_intersections;
      t["factor_congruences"] = tests->by_factor_congruences;
      t["product_search"] = tests->by_product_search;
      t["intersection_gap"] = tests->intersection_gap();
      j["indecomposability_tests"] = t;
    } else {
      j["indecomposability_tests"] = Json();
    }
    j["monolith"] = s.monolith ? filter_to_json(*s.monolith) : Json();
    j["dimension"] = s.dimension;
    j["filter_count"] = s.filter_count;
    j["prime_count"] = s.prime_count;
    std::cout << j.dump() << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "key: " << s.algebra_key << "\n";
    std::cout << "size: " << s.size << "\n";
    std::cout << "simple: " << yn(s.is_simple) << "\n";
    std::cout << "subdirectly irreducible: " << yn(s.is_subdirectly_irreducible) << "\n";
    std::cout << "directly indecomposable: " << yn(s.is_directly_indecomposable) << "\n";
    if (tests) {
      std::cout << "indecomposability tests: directed=" << yn(tests->by_down_directedness)
                << " intersections=" << yn(tests->by_intersections)
                << " factors=" << yn(tests->by_factor_congruences)
                << " product=" << yn(tests->by_product_search) << "\n";
      if (tests->intersection_gap())
        std::cout << "note: filter intersections collapse to {top}, yet no factorization"
                     " exists\n";
    }
    std::cout << "monolith: "
              << (s.monolith ? indices_str(s.monolith->members, A.n) : std::string("none"))
              << "\n";
    std::cout << "dimension: " << s.dimension << "\n";
    std::cout << "filters: " << s.filter_count << "\n";
    std::cout << "primes: " << s.prime_count << "\n";
  }
  return kOk;
}

void print_stats(const AlgebraCatalog& cat, const Options& opt, const std::string& wrote) {
  if (opt.json) {
    Json j;
    j["size_bound"] = cat.size_bound;
    j["entries"] = cat.entries.size();
    j["lattice_counts"] = cat.stats.lattice_counts;
    j["algebra_counts"] = cat.stats.algebra_counts;
    j["tables_accepted"] = cat.stats.tables_accepted;
    if (!wrote.empty()) j["path"] = wrote;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "size bound " << cat.size_bound << ", " << cat.entries.size() << " algebras\n";
  for (size_t i = 0; i < cat.stats.algebra_counts.size(); ++i)
    std::cout << "size " << i + 1 << ": " << cat.stats.algebra_counts[i] << " algebras ("
              << cat.stats.lattice_counts[i] << " lattices)\n";
  std::cout << "labeled tables accepted: " << cat.stats.tables_accepted << "\n";
  if (!wrote.empty()) std::cout << "wrote " << wrote << "\n";
}

int cmd_catalog_generate(int size, const std::string& out, const Options& opt) {
  AlgebraCatalog cat = generate(size);
  save_catalog(cat, out);
  print_stats(cat, opt, out);
  return kOk;
}

int cmd_catalog_stats(const std::string& path, const Options& opt) {
  print_stats(load_catalog(path), opt, "");
  return kOk;
}

int cmd_verify(const std::string& suite, int size_max, const std::string& catalog_path,
               const Options& opt) {
  AlgebraCatalog cat;
  if (!catalog_path.empty()) {
    cat = load_catalog(catalog_path);
    if (cat.size_bound < size_max)
      throw std::invalid_argument(catalog_path + " holds sizes up to " +
                                  std::to_string(cat.size_bound) + ", need " +
                                  std::to_string(size_max));
  } else if (const char* dir = std::getenv("RLW_CATALOG_DIR")) {
    std::string path =
        std::string(dir) + "/catalog-size" + std::to_string(size_max) + ".jsonl";
    if (std::ifstream(path).good()) {
      cat = load_catalog(path);
    } else {
      cat = generate(size_max);
      save_catalog(cat, path);
    }
  } else {
    cat = generate(size_max);
  }

  std::vector<SuiteResult> suites = run_suites(cat, suite, size_max, opt.seed, opt.jobs);
  bool all = true;
  if (opt.json) {
    for (const SuiteResult& s : suites)
      for (const CheckResult& c : s.checks) {
        all = all && c.pass;
        Json j;
        j["suite"] = s.suite;
        j["check"] = c.name;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        std::cout << j.dump() << "\n";
      }
  } else {
    for (const SuiteResult& s : suites)
      for (const CheckResult& c : s.checks) {
        all = all && c.pass;
        std::ostringstream line;
        line << s.suite << "/" << c.name;
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << line.str();
        for (size_t pad = line.str().size(); pad < 44; ++pad) std::cout << ' ';
        std::cout << " " << c.detail << "\n";
      }
    std::cout << (all ? "all checks passed" : "violations found") << "\n";
  }
  return all ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite residuated lattice workbench"};
  app.require_subcommand(1);
  Options opt;
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opt.jobs, "worker threads for verify")->check(CLI::Range(1, 64));
  app.add_option("--seed", opt.seed, "seed for randomized suites");

  std::string file, system_text, out_path, catalog_path, suite = "all";
  int size = 4, size_max = 4;
  bool dot = false;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the axioms of an algebra");
  validate_cmd->add_option("file", file, "algebra JSON")->required();

  CLI::App* filters_cmd = app.add_subcommand("filters", "list filters and primes");
  filters_cmd->add_option("file", file, "algebra JSON")->required();
  filters_cmd->add_flag("--dot", dot, "emit the filter lattice as DOT");

  CLI::App* topology_cmd =
      app.add_subcommand("topology", "induce the linear topology of a filter system");
  topology_cmd->add_option("file", file, "algebra JSON")->required();
  topology_cmd->add_option("--system", system_text, "semicolon-separated filters")->required();

  CLI::App* zltrl_cmd =
      app.add_subcommand("zltrl", "enumerate zero-dimensional linear topologies");
  zltrl_cmd->add_option("file", file, "algebra JSON")->required();
  zltrl_cmd->add_flag("--dot", dot, "emit specialization preorders as DOT");

  CLI::App* completion_cmd = app.add_subcommand("completion", "profinite completion");
  completion_cmd->add_option("file", file, "algebra JSON")->required();

  CLI::App* limit_cmd = app.add_subcommand("limit", "inverse limit of a system");
  limit_cmd->add_option("file", file, "inverse system JSON")->required();

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "structure report");
  analyze_cmd->add_option("file", file, "algebra JSON")->required();

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "generate or inspect catalogs");
  catalog_cmd->require_subcommand(1);
  CLI::App* gen_cmd = catalog_cmd->add_subcommand("generate", "enumerate all algebras");
  gen_cmd->add_option("--size", size, "largest carrier size")->required()->check(CLI::Range(1, 6));
  gen_cmd->add_option("--out", out_path, "output path")->required();
  CLI::App* stats_cmd = catalog_cmd->add_subcommand("stats", "summarize a catalog file");
  stats_cmd->add_option("file", file, "catalog JSONL")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", suite, "filters, topology, limits, analysis, or all")
      ->check(CLI::IsMember({"filters", "topology", "limits", "analysis", "all"}));
  verify_cmd->add_option("--size-max", size_max, "largest algebra size")
      ->check(CLI::Range(1, 6));
  verify_cmd->add_option("--catalog", catalog_path, "catalog file to reuse");

  // global flags (--format, --jobs, --seed) may follow the subcommand name
  for (CLI::App* sub : {validate_cmd, filters_cmd, topology_cmd, zltrl_cmd, completion_cmd,
                        limit_cmd, analyze_cmd, catalog_cmd, gen_cmd, stats_cmd, verify_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  opt.json = format == "json";

  try {
    if (*validate_cmd) return cmd_validate(file, opt);
    if (*filters_cmd) return cmd_filters(file, dot, opt);
    if (*topology_cmd) return cmd_topology(file, system_text, opt);
    if (*zltrl_cmd) return cmd_zltrl(file, dot, opt);
    if (*completion_cmd) return cmd_completion(file, opt);
    if (*limit_cmd) return cmd_limit(file, opt);
    if (*analyze_cmd) return cmd_analyze(file, opt);
    if (*gen_cmd) return cmd_catalog_generate(size, out_path, opt);
    if (*stats_cmd) return cmd_catalog_stats(file, opt);
    if (*verify_cmd) return cmd_verify(suite, size_max, catalog_path, opt);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& ex) {
    // internal cross-checks diverged: a mathematical violation, not an input problem
    std::cerr << "violation: " << ex.what() << "\n";
    return kViolation;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
