#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "kproj/bench.hpp"
#include "kproj/engines.hpp"
#include "kproj/hitting_set.hpp"

using namespace kproj;

namespace {

struct GlobalOptions {
  int threads = 0;
  uint64_t enum_cap = EnumGuard{}.cap;
  std::optional<int> alphabet;
};

StringSet load_set(const std::string& path, const GlobalOptions& global) {
  if (path == "-") return StringSet::parse(std::cin, global.alphabet);
  return StringSet::parse_file(path, global.alphabet);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError(std::string("bad ") + what + " value '" + item + "'");
    }
  }
  if (values.empty()) throw InputError(std::string("empty ") + what + " list");
  return values;
}

ExperimentConfig config_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("bad config: " + std::string(e.what()));
  }
  ExperimentConfig cfg;
  try {
    cfg.n_values = doc.at("n").get<std::vector<int>>();
    cfg.m_values = doc.at("m").get<std::vector<int>>();
    if (doc.contains("k")) {
      if (doc["k"].is_string() && doc["k"] == "all")
        cfg.k_values.clear();
      else
        cfg.k_values = doc["k"].get<std::vector<int>>();
    }
    if (doc.contains("trials")) cfg.trials = doc["trials"].get<int>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<uint64_t>();
    if (doc.contains("engines")) {
      cfg.engines.clear();
      for (const auto& name : doc["engines"])
        cfg.engines.push_back(engine_from_name(name.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("bad config: " + std::string(e.what()));
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reconstruct string sets from their k-way projections"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--threads", global.threads, "cap worker threads (0 = default)");
  app.add_option("--enum-cap", global.enum_cap,
                 "candidate cap for brute-force enumeration");
  app.add_option("--alphabet", global.alphabet,
                 "alphabet size override for dataset files");

  std::string file;
  std::string engine_name_flag = "overlap";
  int k = 0;
  std::string x;
  bool binary_search = false;

  auto* recon_cmd = app.add_subcommand("recon", "compute the k-reconstruction");
  recon_cmd->add_option("-k", k, "window size")->required();
  recon_cmd->add_option("--engine", engine_name_flag, "overlap|greedy|brute");
  recon_cmd->add_option("file", file, "dataset file ('-' for stdin)")->required();

  auto* perfect_cmd =
      app.add_subcommand("perfect-point", "least k with a perfect reconstruction");
  perfect_cmd->add_option("--engine", engine_name_flag, "overlap|greedy|brute");
  perfect_cmd->add_flag("--binary-search", binary_search,
                        "binary-search k instead of ascending");
  perfect_cmd->add_option("file", file, "dataset file")->required();

  auto* noinfo_cmd =
      app.add_subcommand("noinfo-point", "largest k with complete projections");
  noinfo_cmd->add_option("file", file, "dataset file")->required();

  auto* contains_cmd =
      app.add_subcommand("contains", "is a string in the k-reconstruction?");
  contains_cmd->add_option("-k", k, "window size")->required();
  contains_cmd->add_option("-x", x, "candidate string")->required();
  contains_cmd->add_option("file", file, "dataset file")->required();

  auto* mink_cmd =
      app.add_subcommand("min-k", "least k excluding a string, or never");
  mink_cmd->add_option("-x", x, "candidate string")->required();
  mink_cmd->add_option("file", file, "dataset file")->required();

  auto* sparsity_cmd =
      app.add_subcommand("sparsity-bound", "column-minority bound and witness");
  sparsity_cmd->add_option("file", file, "dataset file")->required();

  bool hs_fpt = false, hs_approx = false;
  std::optional<int> hs_k;
  auto* hs_cmd = app.add_subcommand("hs-solve", "solve a hitting set instance");
  hs_cmd->add_option("--k", hs_k, "budget for the bounded search");
  hs_cmd->add_flag("--fpt", hs_fpt, "bounded search tree (needs --k)");
  hs_cmd->add_flag("--approx", hs_approx, "greedy d-approximation");
  hs_cmd->add_option("file", file, "instance file ('n m' header)")->required();

  std::string bench_n, bench_m, bench_k = "all", bench_engines = "overlap,greedy";
  std::optional<int> bench_trials;
  uint64_t bench_seed = 0;
  std::string bench_config, bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "timing experiments, CSV output");
  bench_cmd->add_option("--config", bench_config, "JSON config file");
  bench_cmd->add_option("--n", bench_n, "comma list of string lengths");
  bench_cmd->add_option("--m", bench_m, "comma list of set sizes");
  bench_cmd->add_option("--k", bench_k, "comma list of window sizes, or 'all'");
  bench_cmd->add_option("--trials", bench_trials, "trials per cell");
  bench_cmd->add_option("--seed", bench_seed, "master seed");
  bench_cmd->add_option("--engines", bench_engines, "comma list of engines");
  bench_cmd->add_option("--out", bench_out, "write CSV here instead of stdout");

  int gen_n = 0, gen_m = 0;
  uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random dataset");
  gen_cmd->add_option("-n", gen_n, "string length")->required();
  gen_cmd->add_option("-m", gen_m, "number of strings")->required();
  gen_cmd->add_option("--seed", gen_seed, "generator seed");

  bool natural_order = false, with_matrix = false;
  auto* dump_cmd = app.add_subcommand("graph-dump", "print the overlap graph");
  dump_cmd->add_option("-k", k, "window size")->required();
  dump_cmd->add_flag("--natural-order", natural_order,
                     "keep columns in file order");
  dump_cmd->add_flag("--matrix", with_matrix, "also print adjacency blocks");
  dump_cmd->add_option("file", file, "dataset file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

#ifdef _OPENMP
  if (global.threads > 0) omp_set_num_threads(global.threads);
#endif

  try {
    EngineOptions opts;
    opts.guard.cap = global.enum_cap;

    if (*recon_cmd) {
      const StringSet s = load_set(file, global);
      const ReconReport report =
          recon(s, k, engine_from_name(engine_name_flag), opts);
      for (int i = 0; i < report.members.size(); ++i)
        std::cout << report.members.row_digits(i) << '\n';
      std::cout << "extras=" << report.extras << '\n';
    } else if (*perfect_cmd) {
      const StringSet s = load_set(file, global);
      const SearchMode mode =
          binary_search ? SearchMode::kBinary : SearchMode::kAscend;
      std::cout << perfect_point(s, engine_from_name(engine_name_flag), mode, opts)
                << '\n';
    } else if (*noinfo_cmd) {
      std::cout << point_of_no_information(load_set(file, global)) << '\n';
    } else if (*contains_cmd) {
      const StringSet s = load_set(file, global);
      const MemberResult result = is_member_digits(s, x, k);
      if (result.member)
        std::cout << "yes\n";
      else
        std::cout << "no witness=" << result.witness->to_string() << '\n';
    } else if (*mink_cmd) {
      const StringSet s = load_set(file, global);
      const auto result = min_exclusion_k_digits(s, x);
      if (result)
        std::cout << *result << '\n';
      else
        std::cout << "never\n";
    } else if (*sparsity_cmd) {
      const auto result = sparsity_bound(load_set(file, global));
      std::cout << "bound=" << result.bound << " witness=" << result.witness
                << '\n';
    } else if (*hs_cmd) {
      if (hs_fpt && hs_approx) throw InputError("--fpt and --approx conflict");
      if (hs_fpt && !hs_k) throw InputError("--fpt needs --k");
      HittingSetInstance instance = [&] {
        if (file == "-") return HittingSetInstance::parse(std::cin);
        std::ifstream in(file);
        if (!in) throw InputError("cannot open " + file);
        return HittingSetInstance::parse(in);
      }();
      auto print_solution = [](const std::vector<int>& hitters) {
        std::cout << "hitters=";
        for (size_t i = 0; i < hitters.size(); ++i) {
          if (i) std::cout << ',';
          std::cout << hitters[i];
        }
        std::cout << " size=" << hitters.size() << '\n';
      };
      if (instance.unhittable()) {
        std::cout << "unhittable\n";
      } else if (hs_fpt) {
        const auto solution = solve_fpt(instance, *hs_k);
        if (!solution)
          std::cout << "infeasible\n";
        else
          print_solution(solution->hitters);
      } else if (hs_approx) {
        print_solution(approx_d(instance).solution.hitters);
      } else {
        const auto solution = solve_exact(instance);
        if (hs_k && solution.hitters.size() > static_cast<size_t>(*hs_k))
          std::cout << "infeasible\n";
        else
          print_solution(solution.hitters);
      }
    } else if (*bench_cmd) {
      ExperimentConfig cfg;
      if (!bench_config.empty()) {
        cfg = config_from_json(bench_config);
      } else {
        if (bench_n.empty() || bench_m.empty())
          throw InputError("bench needs --config or --n and --m");
        cfg.n_values = parse_int_list(bench_n, "n");
        cfg.m_values = parse_int_list(bench_m, "m");
        if (bench_k != "all") cfg.k_values = parse_int_list(bench_k, "k");
        cfg.trials = bench_trials;
        cfg.seed = bench_seed;
        cfg.engines.clear();
        std::stringstream in(bench_engines);
        std::string name;
        while (std::getline(in, name, ','))
          cfg.engines.push_back(engine_from_name(name));
      }
      cfg.guard.cap = global.enum_cap;
      const auto records = run_experiment(cfg);
      if (bench_out.empty()) {
        write_csv(std::cout, records);
      } else {
        std::ofstream out(bench_out, std::ios::binary);
        if (!out) throw InputError("cannot open " + bench_out);
        write_csv(out, records);
      }
    } else if (*gen_cmd) {
      const StringSet s = gen_random_set(gen_n, gen_m, gen_seed);
      std::cout << "# generated: n=" << gen_n << " m=" << gen_m
                << " seed=" << gen_seed << '\n';
      s.write(std::cout);
    } else if (*dump_cmd) {
      const StringSet s = load_set(file, global);
      const ColumnOrdering ord =
          natural_order ? ColumnOrdering::identity(s.length()) : order_columns(s);
      const OverlapGraph graph = build_graph(s, k, ord);
      dump_graph(std::cout, graph);
      if (with_matrix) dump_matrix(std::cout, graph);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  }
  return kExitOk;
}
