// subpack: exact normalized subpacketization levels for multi-message PIR.
//
//   subpack compute -N 2 -K 4 -D 3 --via both
//   subpack sweep -N 2..8 -K 3..14 -D 2..13 --format json -o table.json
//   subpack verify --grid N=2..4,K=3..10,D=2..4
//   subpack bench -N 4 -K 100 -D 5 -r 10

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "subpack/subpack.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ComputeArgs {
  std::int64_t N = 0, K = 0, D = 0;
  std::string via = "closed";
};

struct SweepArgs {
  std::string N, K, D;
  std::string format = "csv";
  std::string output;
  unsigned jobs = std::thread::hardware_concurrency();
};

struct VerifyArgs {
  std::string grid;
  std::optional<double> tolerance;
  int random_rationals = 100;
  unsigned jobs = std::thread::hardware_concurrency();
};

struct BenchArgs {
  std::int64_t N = 0, K = 0, D = 0;
  std::int64_t repetitions = 10;
};

std::string join(const std::vector<subpack::BigInt>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + "]";
}

int run_compute(const ComputeArgs& a) {
  const auto p = subpack::make_parameters(a.N, a.K, a.D);
  const auto shape = subpack::derive_shape(p);
  const auto filtered = subpack::filtered_coefficients(subpack::expand_coefficients(p.D(), shape.T));

  std::optional<subpack::Rational> via_recursion;
  std::optional<subpack::ClosedFormResult> via_closed;
  if (a.via != "closed") via_recursion = subpack::normalized_L_via_recursion(p);
  if (a.via != "recursion") via_closed = subpack::subpacketization_level(p);

  const subpack::Rational L = via_closed ? via_closed->L : *via_recursion;
  // For the recursion-only path the same reduction applies: L = p'/q' gives p' at m = q'.
  const subpack::BigInt sub = via_closed ? via_closed->subpacketization : subpack::numerator_of(L);
  const subpack::BigInt mult = via_closed ? via_closed->multiplier : subpack::denominator_of(L);

  std::cout << "parameters: " << p.to_string() << '\n'
            << "T = " << shape.T << '\n'
            << "S = " << shape.S << '\n'
            << "L = " << subpack::to_string(L) << '\n'
            << "subpacketization = " << sub << '\n'
            << "multiplier = " << mult << '\n'
            << "filtered coefficients = " << join(filtered) << '\n';
  if (via_recursion && via_closed) {
    if (*via_recursion != via_closed->L) {
      std::cout << "paths disagree: recursion gives " << subpack::to_string(*via_recursion) << '\n';
      return kExitFailure;
    }
    std::cout << "paths agree: recursion and closed form give identical L\n";
  }
  return kExitOk;
}

int run_sweep(const SweepArgs& a) {
  const subpack::Grid grid{subpack::parse_range(a.N), subpack::parse_range(a.K), subpack::parse_range(a.D)};
  const auto result = subpack::sweep(grid, a.jobs);

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) {
      std::cerr << "error: cannot open output file '" << a.output << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& os = a.output.empty() ? std::cout : file;
  if (a.format == "csv") {
    subpack::write_csv(os, result.rows);
  } else {
    os << subpack::to_json(result.rows).dump(2) << '\n';
  }
  os.flush();
  if (!os) {
    std::cerr << "error: failed writing '" << (a.output.empty() ? "<stdout>" : a.output) << "'\n";
    return kExitUsage;
  }
  std::cerr << "rows: " << result.rows.size() << ", invalid combinations skipped: " << result.skipped << '\n';
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  subpack::SuiteOptions opt;
  if (!a.grid.empty()) opt.grid = subpack::parse_grid(a.grid);
  opt.tolerance = a.tolerance;
  opt.random_rationals = a.random_rationals;
  opt.jobs = a.jobs;
  const auto res = subpack::run_suite(opt);

  std::cout << "grid cells: " << res.cells << " (floating checks on " << res.floating_cells
            << ", invalid skipped " << res.skipped << ")\n";
  std::cout << std::left << std::setw(26) << "identity" << std::setw(10) << "mode" << std::right
            << std::setw(8) << "checks" << std::setw(16) << "worst residual" << std::setw(12) << "tolerance"
            << "  status\n";
  for (const auto& s : res.identities) {
    std::ostringstream tol;
    if (s.mode == subpack::Mode::exact) {
      tol << "0";
    } else {
      tol << std::setprecision(3) << s.tolerance << (s.relative ? " rel" : " abs");
    }
    std::cout << std::left << std::setw(26) << s.name << std::setw(10) << subpack::to_string(s.mode)
              << std::right << std::setw(8) << s.checks << std::setw(16) << std::setprecision(3)
              << std::scientific << s.worst_residual << std::defaultfloat << std::setw(12) << tol.str()
              << "  " << (s.passed() ? "PASS" : "FAIL") << "  [worst at " << s.worst_instance << "]\n";
  }
  bool ok = true;
  for (const auto& s : res.identities) {
    if (!s.passed()) {
      ok = false;
      std::cout << "FAILED " << s.name << ": " << s.failures << " of " << s.checks
                << " checks, first at " << s.first_failure << '\n';
    }
  }
  std::cout << (ok ? "all identities pass\n" : "verification failed\n");
  return ok ? kExitOk : kExitFailure;
}

int run_bench(const BenchArgs& a) {
  const auto p = subpack::make_parameters(a.N, a.K, a.D);
  if (a.repetitions < 1) throw subpack::DomainError("requires at least one repetition");
  const auto res = subpack::run_bench(p, a.repetitions);
  std::cout << "parameters: " << p.to_string() << ", repetitions: " << res.repetitions << '\n'
            << "L = " << subpack::to_string(res.L) << '\n'
            << std::scientific << std::setprecision(3)
            << "recursion:   " << res.recursion_seconds << " s/eval\n"
            << "closed form: " << res.closed_form_seconds << " s/eval\n";
  if (res.mismatches != 0) {
    std::cout << "MISMATCH on " << res.mismatches << " of " << res.repetitions << " repetitions\n";
    return kExitFailure;
  }
  std::cout << "all outputs equal\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normalized subpacketization levels for multi-message PIR"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate L and the subpacketization level for one (N, K, D)");
  c->add_option("-N,--servers", compute.N, "Number of servers")->required();
  c->add_option("-K,--messages", compute.K, "Total number of messages")->required();
  c->add_option("-D,--demands", compute.D, "Number of demanded messages")->required();
  c->add_option("--via", compute.via, "Evaluation path")
      ->check(CLI::IsMember({"recursion", "closed", "both"}));

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Tabulate every valid (N, K, D) in the given ranges");
  s->add_option("-N,--servers", sweep.N, "Range a..b")->required();
  s->add_option("-K,--messages", sweep.K, "Range a..b")->required();
  s->add_option("-D,--demands", sweep.D, "Range a..b")->required();
  s->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
  s->add_option("-o,--output", sweep.output, "Output path (default: stdout)");
  s->add_option("-j,--jobs", sweep.jobs);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check every identity behind the closed form over a grid");
  v->add_option("--grid", verify.grid, "N=a..b,K=c..d,D=e..f (default N=2..16,K=3..20,D=2..19)");
  v->add_option("--tolerance", verify.tolerance, "Override every floating tolerance");
  v->add_option("--random-rationals", verify.random_rationals, "Random sample points per (K, D)");
  v->add_option("-j,--jobs", verify.jobs);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time the recursion and closed-form paths");
  b->add_option("-N,--servers", bench.N)->required();
  b->add_option("-K,--messages", bench.K)->required();
  b->add_option("-D,--demands", bench.D)->required();
  b->add_option("-r,--repetitions", bench.repetitions);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (s->parsed()) return run_sweep(sweep);
    if (v->parsed()) return run_verify(verify);
    if (b->parsed()) return run_bench(bench);
  } catch (const subpack::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const subpack::RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
