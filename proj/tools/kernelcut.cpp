// kernelcut command-line tool.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 refused scale.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kernelcut.hpp"

using namespace kernelcut;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRefused = 3;

const std::vector<std::string> kKernelProblems = {
    "knapsack", "subset-sum", "hitting-set", "set-packing", "max-cut", "bin-packing",
    "grouped-subset-sum", "polynomial", "ipp"};

const std::vector<std::string> kSolveProblems = {
    "knapsack", "subset-sum", "hitting-set", "set-packing", "max-cut", "bin-packing",
    "grouped-knapsack", "grouped-subset-sum", "ipp", "cnf"};

const std::vector<std::string> kFamilies = {
    "vector", "knapsack", "subset-sum", "hitting-set", "set-packing", "max-cut", "bin-packing",
    "grouped-knapsack", "grouped-subset-sum", "polynomial", "ipp", "cnf"};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

// Same sign of f(x) - f(y) for every pair of box points.
bool same_order(const Polynomial& f, const Polynomial& g, const Integer& u) {
  std::vector<IntegerVector> pts;
  Integer side = 2 * u + 1;
  if (power(side, f.variables) > Integer(std::to_string(enumeration_cap())))
    throw RefusedScale("verify: box too large");
  IntegerVector x(f.variables);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == f.variables) {
      pts.push_back(x);
      return;
    }
    for (Integer t = -u; t <= u; ++t) {
      x[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  std::vector<Rational> fv, gv;
  for (const auto& p : pts) {
    fv.push_back(eval(f, p));
    gv.push_back(eval(g, p));
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (sgn(fv[i] - fv[j]) != sgn(gv[i] - gv[j])) return false;
  return true;
}

struct KernelRun {
  std::string instance;
  KernelReport report;
};

KernelRun kernelize(const std::string& problem, const std::string& text, bool verify, const Integer& u) {
  const std::string tag = problem_tag(text);
  if (tag != problem)
    throw ValidationError("file holds a '" + tag + "' instance, not '" + problem + "'");
  KernelRun run;
  if (problem == "knapsack") {
    auto inst = parse_knapsack(text);
    auto k = kernelize_knapsack(inst);
    if (verify) k.report.equivalent = solve_knapsack_brute(inst).has_value() == solve_knapsack_brute(k.instance).has_value();
    run = {serialize(k.instance), k.report};
  } else if (problem == "subset-sum") {
    auto inst = parse_subset_sum(text);
    auto k = kernelize_subset_sum(inst);
    if (verify) k.report.equivalent = solve_subset_sum_brute(inst).has_value() == solve_subset_sum_brute(k.instance).has_value();
    run = {serialize(k.instance), k.report};
  } else if (problem == "hitting-set" || problem == "set-packing") {
    auto inst = parse_set_system(text);
    auto k = problem == "hitting-set" ? kernelize_hitting_set(inst) : kernelize_set_packing(inst);
    if (verify) {
      auto solve = [&](const SetSystemInstance& s) {
        return problem == "hitting-set" ? solve_hitting_set_brute(s).has_value() : solve_set_packing_brute(s).has_value();
      };
      k.report.equivalent = solve(inst) == solve(k.instance);
    }
    run = {serialize(k.instance), k.report};
  } else if (problem == "max-cut") {
    auto inst = parse_max_cut(text);
    auto k = kernelize_max_cut(inst);
    if (verify) k.report.equivalent = solve_max_cut_brute(inst) == solve_max_cut_brute(k.instance);
    run = {serialize(k.instance), k.report};
  } else if (problem == "bin-packing") {
    auto inst = parse_bin_packing(text);
    auto k = kernelize_bin_packing(inst);
    if (verify) {
      // The kernel decides (k+1)-packability; its answer must be sound.
      PackingAnswer answer = solve_additive_one(inst);
      k.report.equivalent = answer.assignment ? is_valid_packing(inst, *answer.assignment, inst.k + 1)
                                              : !solve_bin_packing_brute(inst).has_value();
    }
    run = {serialize(k.instance), k.report};
  } else if (problem == "grouped-subset-sum") {
    auto inst = parse_grouped_subset_sum(text);
    auto k = kernelize_subset_sum_few_sizes(inst);
    bool kernel_yes = false;
    if (auto* ss = std::get_if<SubsetSumInstance>(&k.instance)) {
      run.instance = serialize(*ss);
      if (verify) kernel_yes = solve_subset_sum_brute(*ss).has_value();
    } else {
      kernel_yes = std::get<SolvedVerdict>(k.instance).yes;
      run.instance = "# decided without a kernel\nanswer " + yes_no(kernel_yes) + '\n';
    }
    if (verify) k.report.equivalent = solve_grouped_subset_sum_brute(inst).has_value() == kernel_yes;
    run.report = k.report;
  } else if (problem == "polynomial") {
    auto f = parse_polynomial(text);
    auto g = compress_polynomial(f, u);
    KernelReport report;
    report.problem = "polynomial";
    report.original_bits = encoding_bits(f);
    report.kernel_bits = encoding_bits(g);
    report.r = g.r();
    report.N = polynomial_radius(g.r(), g.degree, u);
    IntegerVector coefficients;
    for (const auto& t : g.terms) coefficients.push_back(t.coefficient.get_num());
    report.bound_ok = within_compression_bound(coefficients, report.r, report.N);
    report.extra["u"] = u.get_str();
    if (verify) report.equivalent = same_order(f, g, u);
    run = {serialize(g), report};
  } else if (problem == "ipp") {
    auto inst = parse_ipp(text);
    auto k = compress_ipp(inst);
    if (verify) k.report.equivalent = solve_ipp_brute(inst).yes == solve_ipp_brute(k.instance).yes;
    run = {serialize(k.instance), k.report};
  }
  return run;
}

void print_solution(const std::string& problem, const std::string& engine, const std::string& text, bool at_most) {
  const std::string tag = problem_tag(text);
  if (tag != problem) throw ValidationError("file holds a '" + tag + "' instance, not '" + problem + "'");
  auto unsupported = [&] {
    throw ValidationError("engine '" + engine + "' is not available for " + problem);
  };
  std::ostream& out = std::cout;
  if (problem == "subset-sum") {
    auto inst = parse_subset_sum(text);
    if (engine == "dp") {
      out << "answer=" << yes_no(solve_subset_sum_dp(inst)) << '\n';
    } else if (engine == "brute") {
      auto w = solve_subset_sum_brute(inst);
      out << "answer=" << yes_no(w.has_value()) << '\n';
      if (w) out << "chosen=" << join_indices(*w) << '\n';
    } else {
      unsupported();
    }
  } else if (problem == "knapsack") {
    if (engine != "brute") unsupported();
    auto c = solve_knapsack_brute(parse_knapsack(text));
    out << "answer=" << yes_no(c.has_value()) << '\n';
    if (c) {
      std::string bits;
      for (bool b : c->x) bits += b ? '1' : '0';
      out << "x=" << bits << "\nweight=" << to_string(c->weight) << "\nprofit=" << to_string(c->profit) << '\n';
    }
  } else if (problem == "hitting-set") {
    if (engine != "brute") unsupported();
    auto s = solve_hitting_set_brute(parse_set_system(text));
    out << "answer=" << yes_no(s.has_value()) << '\n';
    if (s) {
      out << "elements=";
      for (std::size_t i = 0; i < s->size(); ++i) out << (i ? " " : "") << (*s)[i];
      out << '\n';
    }
  } else if (problem == "set-packing") {
    if (engine != "brute") unsupported();
    auto s = solve_set_packing_brute(parse_set_system(text), at_most ? PackingMode::kAtMostK : PackingMode::kExactlyK);
    out << "answer=" << yes_no(s.has_value()) << '\n';
    if (s) out << "sets=" << join_indices(*s) << '\n';
  } else if (problem == "max-cut") {
    auto inst = parse_max_cut(text);
    std::vector<bool> side;
    if (engine == "brute") {
      auto best = max_cut_brute(inst);
      side = best.side;
      out << "answer=" << yes_no(best.weight >= inst.W) << "\nweight=" << to_string(best.weight) << '\n';
    } else if (engine == "greedy") {
      side = greedy_cut(inst);
      out << "weight=" << to_string(cut_weight(inst, side)) << "\ntotal=" << to_string(total_weight(inst)) << '\n';
    } else {
      unsupported();
    }
    std::vector<std::size_t> c;
    for (std::size_t v = 0; v < side.size(); ++v)
      if (side[v]) c.push_back(v);
    out << "C=" << join_indices(c) << '\n';
  } else if (problem == "bin-packing") {
    auto inst = parse_bin_packing(text);
    std::optional<std::vector<std::size_t>> where;
    if (engine == "brute") {
      where = solve_bin_packing_brute(inst);
      out << "answer=" << yes_no(where.has_value()) << '\n';
    } else if (engine == "additive-one") {
      where = solve_additive_one(inst).assignment;
      out << "answer=" << (where ? "packed" : "no-k-packing") << '\n';
    } else {
      unsupported();
    }
    if (where) out << "bins=" << join_indices(*where) << '\n';
  } else if (problem == "grouped-knapsack") {
    auto inst = parse_grouped_knapsack(text);
    if (engine == "ilp") {
      auto best = solve_knapsack_few_weights(inst);
      out << "optimum=" << to_string(best.value) << "\nanswer=" << yes_no(best.reaches_target) << "\ncounts=";
      for (std::size_t i = 0; i < best.counts.size(); ++i) out << (i ? " " : "") << best.counts[i];
      out << '\n';
    } else if (engine == "brute") {
      auto best = knapsack_optimum_brute(inst);
      out << "optimum=" << (best ? to_string(*best) : std::string("infeasible")) << "\nanswer="
          << yes_no(best && *best >= inst.P) << '\n';
    } else {
      unsupported();
    }
  } else if (problem == "grouped-subset-sum") {
    auto inst = parse_grouped_subset_sum(text);
    std::optional<IntegerVector> x;
    if (engine == "ilp")
      x = solve_grouped_subset_sum_ilp(inst);
    else if (engine == "brute")
      x = solve_grouped_subset_sum_brute(inst);
    else
      unsupported();
    out << "answer=" << yes_no(x.has_value()) << '\n';
    if (x) {
      out << "x=";
      for (std::size_t i = 0; i < x->size(); ++i) out << (i ? " " : "") << (*x)[i];
      out << '\n';
    }
  } else if (problem == "ipp") {
    if (engine != "brute") unsupported();
    auto a = solve_ipp_brute(parse_ipp(text));
    out << "answer=" << yes_no(a.yes) << '\n';
    if (a.witness) {
      out << "x=";
      for (std::size_t i = 0; i < a.witness->size(); ++i) out << (i ? " " : "") << (*a.witness)[i];
      out << '\n';
    }
  } else if (problem == "cnf") {
    if (engine != "brute") unsupported();
    auto a = solve_sat_brute(parse_cnf(text));
    out << "answer=" << yes_no(a.has_value()) << '\n';
    if (a) {
      out << "assignment=";
      for (std::size_t i = 0; i < a->size(); ++i) out << (i ? " " : "") << ((*a)[i] ? 1 : 0);
      out << '\n';
    }
  }
}

std::string generate_random(const std::string& family, std::uint64_t seed, std::size_t size) {
  Random rng(seed);
  if (family == "vector") return serialize_vector(random_rational_vector(rng, size, 1000000, 1000000));
  if (family == "knapsack") return serialize(random_knapsack(rng, size, 1000, 1000));
  if (family == "subset-sum") return serialize(random_subset_sum(rng, size, 1000));
  if (family == "hitting-set")
    return serialize(random_set_system(rng, SetSystemVariant::kHittingSet, 2, 2, size, 3 * size, 20));
  if (family == "set-packing")
    return serialize(random_set_system(rng, SetSystemVariant::kSetPacking, 2, 2, size, 3 * size, 20));
  if (family == "max-cut") return serialize(random_max_cut(rng, size, 5, 3));
  if (family == "bin-packing") return serialize(random_bin_packing(rng, size, 20, 3));
  if (family == "grouped-knapsack") return serialize(random_grouped_knapsack(rng, 3, std::max<std::size_t>(size / 3, 1), 50, 12));
  if (family == "grouped-subset-sum") return serialize(random_grouped_subset_sum(rng, 3, static_cast<std::int64_t>(size), 1000));
  if (family == "polynomial") return serialize(random_polynomial(rng, 2, 2, std::min<std::size_t>(size, 6), 1000, 1000));
  if (family == "ipp") return serialize(random_ipp(rng, 2, 2, 4, std::min<std::size_t>(size, 3), 2, 1000, 1000));
  return serialize(random_cnf(rng, size, size));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight compression and kernelization for weighted NP-hard problems"};
  app.require_subcommand(1);

  auto* compress = app.add_subcommand("compress", "Replace a rational vector by a small integer vector with the same signs");
  std::string compress_file;
  std::string compress_n;
  compress->add_option("file", compress_file, "vector instance file ('-' for stdin)")->required();
  compress->add_option("N", compress_n, "sign-preservation radius: all b with ||b||_1 <= N-1")->required();

  auto* kern = app.add_subcommand("kernelize", "Kernelize an instance and print the kernel");
  std::string kern_problem, kern_file, kern_u = "1";
  bool kern_verify = false, kern_report = false;
  kern->add_option("problem", kern_problem, "problem tag")->required()->check(CLI::IsMember(kKernelProblems));
  kern->add_option("file", kern_file, "instance file ('-' for stdin)")->required();
  kern->add_flag("--verify", kern_verify, "compare input and kernel with the brute-force oracles");
  kern->add_flag("--report", kern_report, "print the report instead of the kernel");
  kern->add_option("--u", kern_u, "box radius for polynomial compression");

  auto* solve = app.add_subcommand("solve", "Solve an instance with an exact engine");
  std::string solve_problem, solve_file, solve_engine = "brute";
  bool solve_at_most = false;
  solve->add_option("problem", solve_problem, "problem tag")->required()->check(CLI::IsMember(kSolveProblems));
  solve->add_option("file", solve_file, "instance file ('-' for stdin)")->required();
  solve->add_option("--engine", solve_engine, "brute, dp, ilp, greedy or additive-one")
      ->check(CLI::IsMember({"brute", "dp", "ilp", "greedy", "additive-one"}));
  solve->add_flag("--at-most", solve_at_most, "set packing: accept at most k sets");

  auto* gen = app.add_subcommand("generate", "Generate instances");
  gen->require_subcommand(1);
  auto* gurari = gen->add_subcommand("gurari", "Subset Sum instance from a 3-CNF formula (DIMACS)");
  std::string gurari_file;
  bool gurari_digits = false;
  gurari->add_option("file", gurari_file, "DIMACS file ('-' for stdin)")->required();
  gurari->add_flag("--digits", gurari_digits, "print the digit matrix as comments");
  auto* rnd = gen->add_subcommand("random", "Seeded random instance");
  std::string rnd_family;
  std::uint64_t rnd_seed = 1;
  std::size_t rnd_size = 6;
  rnd->add_option("family", rnd_family, "instance family")->required()->check(CLI::IsMember(kFamilies));
  rnd->add_option("--seed", rnd_seed, "generator seed");
  rnd->add_option("--size", rnd_size, "size parameter (items, vertices, variables)")->check(CLI::Range(1, 64));

  auto* stats = app.add_subcommand("stats", "Kernelize a file and print its report as key=value lines");
  std::string stats_file, stats_u = "1";
  bool stats_verify = false;
  stats->add_option("file", stats_file, "instance file ('-' for stdin)")->required();
  stats->add_flag("--verify", stats_verify, "run the brute-force oracles");
  stats->add_option("--u", stats_u, "box radius for polynomial compression");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto parse_u = [](const std::string& text) {
    Integer u;
    if (!parse_integer(text, u) || u < 1) throw ValidationError("--u must be a positive integer");
    return u;
  };

  try {
    if (*compress) {
      Integer N;
      if (!parse_integer(compress_n, N) || N < 1) throw ValidationError("N must be a positive integer");
      RationalVector w = parse_vector(read_input(compress_file));
      std::cout << serialize_vector(to_rational(reduce_vector({w, N})));
    } else if (*kern) {
      auto run = kernelize(kern_problem, read_input(kern_file), kern_verify, parse_u(kern_u));
      std::cout << (kern_report ? to_key_value(run.report) : run.instance);
    } else if (*solve) {
      print_solution(solve_problem, solve_engine, read_input(solve_file), solve_at_most);
    } else if (*gurari) {
      auto g = gurari_reduce(parse_cnf(read_input(gurari_file)));
      if (gurari_digits)
        for (std::size_t r = 0; r < g.digits.size(); ++r) {
          std::cout << "# row " << r + 1 << ':';
          for (int d : g.digits[r]) std::cout << ' ' << d;
          std::cout << " | " << g.target_digits[r] << '\n';
        }
      std::cout << serialize(g.as_subset_sum());
    } else if (*rnd) {
      std::cout << generate_random(rnd_family, rnd_seed, rnd_size);
    } else if (*stats) {
      const std::string text = read_input(stats_file);
      const std::string tag = problem_tag(text);
      if (std::find(kKernelProblems.begin(), kKernelProblems.end(), tag) == kKernelProblems.end())
        throw ValidationError("no kernelization for '" + tag + "' instances");
      std::cout << to_key_value(kernelize(tag, text, stats_verify, parse_u(stats_u)).report);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const RefusedScale& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitRefused;
  }
  return 0;
}
