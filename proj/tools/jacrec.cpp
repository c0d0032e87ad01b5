#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "jacrec/bench.hpp"
#include "jacrec/certify.hpp"
#include "jacrec/fem2d.hpp"

using namespace jacrec;

namespace {

constexpr int kOk = 0;
constexpr int kNumericalFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" or empty writes to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// verify ---------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int cases = 50;
};

int cmd_verify(const VerifyOptions& o) {
  std::vector<SuiteReport> reports;
  auto add = [&](std::vector<SuiteReport> r) { reports.insert(reports.end(), r.begin(), r.end()); };
  const bool all = o.suite == "all";
  if (all || o.suite == "identities") add(certify_identities(o.cases, o.seed));
  if (all || o.suite == "relations") add(certify_relations(o.cases, o.seed));
  if (all || o.suite == "summations") add(certify_summations(o.cases, 12, o.seed));
  if (all || o.suite == "oracles") add(certify_oracles(std::max(1, o.cases / 10), o.seed));
  const SuiteReport* failed = nullptr;
  for (const auto& r : reports) {
    std::printf("%-24s cases=%-6ld max|residual|=%s\n", r.name.c_str(), r.cases,
                r.max_abs_residual.is_zero() ? "0" : r.max_abs_residual.str().c_str());
    if (!r.ok() && !failed) failed = &r;
  }
  if (failed) {
    std::printf("FAIL %s\n", failed->first_failure.c_str());
    return kNumericalFailure;
  }
  std::printf("all residuals vanish (seed=%llu)\n", static_cast<unsigned long long>(o.seed));
  return kOk;
}

// gram -----------------------------------------------------------------------

struct GramOptions {
  int pmax = 10;
  int weight_exp = 8;
  std::string alpha = "4";
  std::string method = "recursive";
  std::string out;
  std::string bench_out;
  int repeats = 5;
  bool amortized = false;
};

int cmd_gram(const GramOptions& o, bool exact) {
  GramParams g{o.pmax, o.weight_exp, Rational::parse(o.alpha)};
  if (g.pmax < 0 || g.weight_exp < 0) throw UsageError("pmax and weight-exp must be nonnegative");
  if (exact && o.method == "quadrature") throw UsageError("quadrature has no exact mode; use --method recursive or both");
  const bool want_rec = o.method != "quadrature", want_quad = o.method != "recursive";
  const int N = g.pmax + 1;
  std::vector<std::string> text(static_cast<std::size_t>(N) * N);
  std::vector<double> rec(text.size()), quad;
  if (want_rec) {
    if (exact) {
      const auto t = gram_recursive_exact(g);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          text[i * N + j] = t.at(i, j).str();
          rec[i * N + j] = t.at(i, j).to_double();
        }
    } else {
      const auto t = gram_recursive(g);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) rec[i * N + j] = t.at(i, j);
    }
  }
  if (want_quad) quad = gram_quadrature(g);
  const auto& values = want_rec ? rec : quad;
  Output out(o.out);
  out.stream() << "i,j,value\n";
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      out.stream() << i << ',' << j << ',' << (exact ? text[i * N + j] : fmt(values[i * N + j])) << '\n';
  if (!(want_rec && want_quad)) return kOk;

  double scale = 0, dev = 0;
  for (std::size_t k = 0; k < rec.size(); ++k) {
    scale = std::max(scale, std::abs(quad[k]));
    dev = std::max(dev, std::abs(rec[k] - quad[k]));
  }
  std::vector<BenchRecord> records{time_gram(g, GramMethod::recursive, o.repeats, o.amortized),
                                   time_gram(g, GramMethod::quadrature, o.repeats, o.amortized)};
  std::string bench_path = o.bench_out;
  if (bench_path.empty() && !o.out.empty() && o.out != "-") bench_path = o.out + ".bench.csv";
  if (bench_path.empty()) {
    write_bench_csv(std::cerr, records);
  } else {
    Output b(bench_path);
    write_bench_csv(b.stream(), records);
  }
  std::fprintf(stderr, "max |recursive - quadrature| / max|G| = %.3e\n", scale > 0 ? dev / scale : dev);
  return dev <= 1e-10 * scale ? kOk : kNumericalFailure;
}

// assemble -------------------------------------------------------------------

struct AssembleOptions {
  int p = 4;
  std::vector<double> vertices{-1, -1, 1, -1, 0, 1};
  std::string method = "recursive";
  std::string mm;
  std::string pbm;
  int threads = 1;
};

int cmd_assemble(const AssembleOptions& o) {
  if (o.p < 2) throw UsageError("p must be at least 2");
  const auto& v = o.vertices;
  const Triangle tri{{Point{v[0], v[1]}, Point{v[2], v[3]}, Point{v[4], v[5]}}};
  const bool want_rec = o.method != "quadrature", want_quad = o.method != "recursive";
  MassMatrixCOO rec, quad;
  try {
    if (want_rec) {
      const auto t0 = std::chrono::steady_clock::now();
      rec = assemble_mass_recursive(o.p, tri, o.threads);
      std::printf("recursive: dimension=%zu nnz=%zu time=%.6f s\n", rec.dimension, rec.nnz(), seconds_since(t0));
    }
    if (want_quad) {
      const auto t0 = std::chrono::steady_clock::now();
      quad = assemble_mass_quadrature(o.p, tri, 1e-14);
      std::printf("quadrature: dimension=%zu nnz=%zu time=%.6f s\n", quad.dimension, quad.nnz(), seconds_since(t0));
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumericalFailure;
  }
  const auto& m = want_rec ? rec : quad;
  if (!o.mm.empty()) {
    Output out(o.mm);
    write_matrix_market(out.stream(), m);
  }
  if (!o.pbm.empty()) {
    Output out(o.pbm);
    write_pbm(out.stream(), m);
  }
  if (!(want_rec && want_quad)) return kOk;
  const double scale = quad.max_abs();
  double dev = 0, missing = 0;
  for (const auto& e : rec.entries) dev = std::max(dev, std::abs(e.value - quad.at(e.row, e.col)));
  for (const auto& e : quad.entries)
    if (rec.at(e.row, e.col) == 0.0) missing = std::max(missing, std::abs(e.value));
  std::printf("agreement: max deviation %.3e, largest omitted entry %.3e (relative to max|M|)\n", dev / scale,
              missing / scale);
  return dev <= 1e-10 * scale && missing <= 1e-12 * scale ? kOk : kNumericalFailure;
}

// bench ----------------------------------------------------------------------

struct BenchOptions {
  std::vector<int> p_list{32, 64, 128};
  int repeats = 5;
  std::string out;
  std::string methods = "both";
  int weight_exp = 8;
  std::string alpha = "4";
  bool amortized = false;
};

int cmd_bench(const BenchOptions& o) {
  if (o.p_list.empty()) throw UsageError("p list must be nonempty");
  if (o.repeats <= 1) std::fprintf(stderr, "warning: repeats=%d, medians are single samples\n", o.repeats);
  std::vector<BenchRecord> records;
  for (const char* method : {"recursive", "quadrature"}) {
    if (o.methods != "both" && o.methods != method) continue;
    const auto kind = std::string(method) == "recursive" ? GramMethod::recursive : GramMethod::quadrature;
    for (int p : o.p_list) {
      if (p < 1) throw UsageError("p values must be positive");
      records.push_back(time_gram(GramParams{p, o.weight_exp, Rational::parse(o.alpha)}, kind, o.repeats, o.amortized));
    }
  }
  Output out(o.out);
  write_bench_csv(out.stream(), records);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi-polynomial integral recursions: verification, Gram benchmark, element assembly"};
  app.require_subcommand(1);
  bool exact = false;
  if (const char* mode = std::getenv("JACREC_MODE")) {
    const std::string m = mode;
    if (m == "exact") {
      exact = true;
    } else if (m != "float") {
      std::fprintf(stderr, "JACREC_MODE must be 'exact' or 'float'\n");
      return kUsage;
    }
  }
  app.add_flag("--exact,!--float", exact, "Exact rational arithmetic (default from JACREC_MODE)");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Exact residual suites");
  verify->add_option("--suite", vo.suite, "Suite to run")
      ->check(CLI::IsMember({"identities", "relations", "summations", "oracles", "all"}))
      ->capture_default_str();
  verify->add_option("--seed", vo.seed, "Random seed")->capture_default_str();
  verify->add_option("--cases", vo.cases, "Cases per identity/relation")->check(CLI::PositiveNumber)->capture_default_str();

  GramOptions go;
  auto* gram = app.add_subcommand("gram", "Weighted Jacobi Gram matrix (indices start at 0)");
  gram->add_option("--pmax", go.pmax, "Largest polynomial degree")->required();
  gram->add_option("--weight-exp", go.weight_exp, "Exponent of ((1-x)/2)")->capture_default_str();
  gram->add_option("--alpha", go.alpha, "Jacobi alpha (rational, e.g. 4 or 7/2)")->capture_default_str();
  gram->add_option("--method", go.method, "recursive | quadrature | both")
      ->check(CLI::IsMember({"recursive", "quadrature", "both"}))
      ->capture_default_str();
  gram->add_option("--out", go.out, "CSV output (default stdout)");
  gram->add_option("--bench-out", go.bench_out, "BenchRecord CSV for --method both");
  gram->add_option("--repeats", go.repeats, "Timing repeats")->check(CLI::PositiveNumber)->capture_default_str();
  gram->add_flag("--amortized", go.amortized, "Exclude seed computation from recursive timings");

  AssembleOptions ao;
  auto* assemble = app.add_subcommand("assemble", "Element mass matrix on a triangle");
  assemble->add_option("--p", ao.p, "Polynomial degree")->required();
  assemble->add_option("--vertices", ao.vertices, "x1 y1 x2 y2 x3 y3")->expected(6)->capture_default_str();
  assemble->add_option("--method", ao.method, "recursive | quadrature | both")
      ->check(CLI::IsMember({"recursive", "quadrature", "both"}))
      ->capture_default_str();
  assemble->add_option("--mm", ao.mm, "Matrix Market output");
  assemble->add_option("--pbm", ao.pbm, "PBM spy-pattern output");
  assemble->add_option("--threads", ao.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Per-entry cost of the Gram kernel");
  bench->add_option("--p", bo.p_list, "Degrees to time")->delimiter(',')->capture_default_str();
  bench->add_option("--repeats", bo.repeats, "Timing repeats (median reported)")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--out", bo.out, "CSV output (default stdout)");
  bench->add_option("--methods", bo.methods, "recursive | quadrature | both")
      ->check(CLI::IsMember({"recursive", "quadrature", "both"}))
      ->capture_default_str();
  bench->add_option("--weight-exp", bo.weight_exp, "Exponent of ((1-x)/2)")->capture_default_str();
  bench->add_option("--alpha", bo.alpha, "Jacobi alpha")->capture_default_str();
  bench->add_flag("--amortized", bo.amortized, "Exclude seed computation from recursive timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(vo);
    if (*gram) return cmd_gram(go, exact);
    if (*assemble) return cmd_assemble(ao);
    if (*bench) return cmd_bench(bo);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumericalFailure;
  }
  return kUsage;
}
