#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symcrit/io.hpp"

namespace {

using namespace symcrit;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  require(bool(out), ErrorKind::Usage, "cannot write " + out_path);
  out << text;
}

void run_solve(const std::string& in_path, bool naive, std::uint64_t seed,
               const std::string& out_path, int threads) {
  ProblemInstance prob = load_problem(in_path);
  if (naive) {
    ZeroDimParam param = naive_critical_points(prob, seed);
    emit(naive_to_json(param, seed, prob.field()), out_path);
    return;
  }
  SymmetricRepresentation rep = critical_points_per_orbit(prob, seed, threads);
  emit(representation_to_json(rep, prob.field()), out_path);
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

void run_bounds(int n, int d, int s) {
  BoundsReport rep = bounds_report(n, d, s);
  std::cout << "degree bounds for n=" << n << " d=" << d << " s=" << s
            << "\n\n";
  std::cout << std::left << std::setw(16) << "partition" << std::right
            << std::setw(16) << "candidates" << std::setw(16) << "isolated"
            << std::setw(12) << "weighted"
            << "\n";
  for (const BoundsRow& row : rep.rows) {
    std::ostringstream w;
    w << row.weighted;
    std::cout << std::left << std::setw(16) << row.lambda.str() << std::right
              << std::setw(16) << rational_str(row.candidates)
              << std::setw(16) << rational_str(row.isolated) << std::setw(12)
              << w.str() << (row.pruned ? "  (pruned)" : "") << "\n";
  }
  std::cout << "\n";
  std::cout << "candidate total (ceiling):  " << rep.candidates_ceiling
            << "\n";
  std::cout << "isolated total (ceiling):   " << rep.isolated_ceiling << "\n";
  std::cout << "global candidate bound:     " << rep.global_candidates
            << "\n";
  std::cout << "global isolated bound:      " << rep.global_isolated << "\n";
  std::cout << "determinantal bound:        " << rep.determinantal_bound
            << "\n";
}

void run_verify(const std::string& result_path, const std::string& in_path) {
  LoadedOutput result = load_output(result_path);
  ProblemInstance prob = load_problem(in_path);
  require(result.prime == prob.field().p(), ErrorKind::Verification,
          "result and problem use different primes");
  if (result.naive) {
    const ZeroDimParam& param = *result.naive;
    require(param.empty() || param.coords() == prob.n(),
            ErrorKind::Verification,
            "coordinate count does not match the problem");
    std::vector<MPoly> gens = prob.f();
    for (MPoly& m : jacobian(prob.f(), prob.phi()).minors(prob.s() + 1))
      if (!m.is_zero()) gens.push_back(std::move(m));
    if (!param.empty()) {
      MonomialEvaluator values(param.v(), param.q());
      for (const MPoly& g : gens)
        require(values.eval(g).is_zero(), ErrorKind::Verification,
                "a defining equation does not vanish on the encoded set");
    }
    std::cout << "verified: whole-space parametrization, degree "
              << param.degree() << "\n";
    return;
  }
  verify_membership(prob.f(), prob.phi(), result.entries);
  int total = 0;
  for (const OrbitEntry& e : result.entries) total += e.param.degree();
  std::cout << "verified: " << result.entries.size()
            << " entries, total degree " << total << "\n";
}

void run_oracle(const std::string& in_path) {
  ProblemInstance prob = load_problem(in_path);
  OracleResult oracle = brute_force_oracle(prob);
  std::ostringstream os;
  os << "{\n  \"types\": [";
  for (std::size_t t = 0; t < oracle.types.size(); ++t) {
    const auto& [type, points] = oracle.types[t];
    os << (t ? ",\n    " : "\n    ") << "{\"partition\": [";
    const auto& blocks = type.blocks();
    for (std::size_t k = 0; k < blocks.size(); ++k)
      os << (k ? ", " : "") << "[" << blocks[k].first << ", "
         << blocks[k].second << "]";
    os << "], \"points\": [";
    for (std::size_t i = 0; i < points.size(); ++i) {
      os << (i ? ", " : "") << "[";
      for (std::size_t c = 0; c < points[i].size(); ++c)
        os << (c ? ", " : "") << points[i][c];
      os << "]";
    }
    os << "]}";
  }
  os << (oracle.types.empty() ? "]" : "\n  ]") << ",\n  \"count\": "
     << oracle.points.size() << "\n}\n";
  std::cout << os.str();
}

void run_gen(int n, int s, int d, std::uint64_t seed, std::uint32_t prime) {
  ProblemInstance prob = random_instance(PrimeField(prime), n, s, d, seed);
  std::cout << problem_to_json(prob);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "critical sets of permutation-invariant polynomial systems over GF(p), "
      "one parametrization per coincidence type"};
  app.require_subcommand(1);

  std::string solve_path, solve_out;
  std::uint64_t solve_seed = 0;
  bool solve_naive = false;
  int solve_threads = 1;
  CLI::App* solve = app.add_subcommand(
      "solve", "compute the critical set of a problem file");
  solve->add_option("file", solve_path, "problem file (JSON)")->required();
  solve->add_flag("--naive", solve_naive,
                  "one parametrization in the original variables");
  solve->add_option("--seed", solve_seed, "random seed (default 0)");
  solve->add_option("--out", solve_out, "write the result here, not stdout");
  solve->add_option("--threads", solve_threads,
                    "solve partitions concurrently")
      ->check(CLI::PositiveNumber);

  int bn = 0, bd = 0, bs = 0;
  CLI::App* bounds =
      app.add_subcommand("bounds", "print per-partition degree bounds");
  bounds->add_option("n", bn, "number of variables")->required();
  bounds->add_option("d", bd, "degree of the equations")->required();
  bounds->add_option("s", bs, "number of equations")->required();

  std::string verify_result, verify_problem;
  CLI::App* verify = app.add_subcommand(
      "verify", "check a solve result against its problem file");
  verify->add_option("result", verify_result, "result file (JSON)")
      ->required();
  verify->add_option("problem", verify_problem, "problem file (JSON)")
      ->required();

  std::string oracle_path;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustively list rational critical points (small fields)");
  oracle->add_option("file", oracle_path, "problem file (JSON)")->required();

  int gn = 0, gs = 0, gd = 0;
  std::uint64_t gen_seed = 0;
  std::uint32_t gen_prime = 65521;
  CLI::App* gen = app.add_subcommand(
      "gen", "emit a random invariant problem file on stdout");
  gen->add_option("n", gn, "number of variables")->required();
  gen->add_option("s", gs, "number of equations")->required();
  gen->add_option("d", gd, "degree of every equation")->required();
  gen->add_option("--seed", gen_seed, "random seed (default 0)");
  gen->add_option("--prime", gen_prime, "field size (default 65521)");

  try {
    app.parse(argc, argv);
    if (solve->parsed())
      run_solve(solve_path, solve_naive, solve_seed, solve_out,
                solve_threads);
    else if (bounds->parsed())
      run_bounds(bn, bd, bs);
    else if (verify->parsed())
      run_verify(verify_result, verify_problem);
    else if (oracle->parsed())
      run_oracle(oracle_path);
    else if (gen->parsed())
      run_gen(gn, gs, gd, gen_seed, gen_prime);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return int(ErrorKind::Usage);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return int(ErrorKind::Internal);
  }
  return 0;
}
