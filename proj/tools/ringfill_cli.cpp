// ringfill: build, verify and measure concentric isometric fillings of C_n.

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringfill/analysis.hpp"
#include "ringfill/filling.hpp"
#include "ringfill/io.hpp"
#include "ringfill/oracle.hpp"
#include "ringfill/verifier.hpp"

namespace {

using namespace ringfill;

struct BuildFlags {
  std::uint32_t n = 0;
  std::string rho = "0.1";
  std::string eta = "0.25";

  void attach(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--n", n, "boundary length");
    if (required) opt->required();
    cmd->add_option("--rho", rho, "collar fraction rho")->capture_default_str();
    cmd->add_option("--eta", eta, "stopping scale eta (eta^2 < rho)")->capture_default_str();
  }
  Params params() const { return Params::from_text(n, rho, eta); }
};

// Loads a build either from a JSON file or from --n/--rho/--eta.
struct Source {
  std::optional<Triangulation> complex;
  std::optional<BuildResult> build;
};

Source load_source(const std::string& path, const BuildFlags& flags) {
  Source src;
  if (!path.empty()) {
    const Json j = read_json_file(path);
    src.complex = triangulation_from_json(j);
    if (auto p = params_from_json(j)) {
      src.build = build_filling(*p);
      if (!(src.build->complex == *src.complex)) {
        throw std::runtime_error(path + ": complex does not match a rebuild from its params");
      }
    }
  } else if (flags.n > 0) {
    src.build = build_filling(flags.params());
    src.complex = src.build->complex;
  } else {
    throw CLI::ValidationError("input", "give an input file or --n");
  }
  return src;
}

int cmd_build(const BuildFlags& flags, const std::string& out_path) {
  const auto b = build_filling(flags.params());
  const auto validation = validate_disk(b.complex);
  const auto pred = predict_density(b.params);
  const double n = b.params.n;
  std::cout << "n=" << b.params.n << " rho=" << to_string(b.params.rho) << " eta=" << to_string(b.params.eta)
            << "\n"
            << "w=" << b.schedule.collar_width << " B=" << b.schedule.block_count
            << " L_b=" << b.schedule.block_layers.front() << " M_0=" << b.schedule.cycle_length.front()
            << " M_B=" << b.schedule.cycle_length.back() << "\n"
            << "vertices=" << b.complex.vertex_count() << " triangles=" << b.complex.triangle_count()
            << " edges=" << b.complex.edge_count() << "\n"
            << "density=" << format_double(b.complex.vertex_count() / (n * n))
            << " asymptotic_bound=" << format_double(to_double(pred.asymptotic_bound)) << "\n"
            << "disk=" << (validation.ok() ? "valid" : "INVALID") << "\n";
  if (!out_path.empty()) write_json_file(out_path, to_json(b));
  const bool counts_ok = static_cast<std::int64_t>(b.complex.vertex_count()) == b.predicted_vertex_count &&
                         static_cast<std::int64_t>(b.complex.triangle_count()) == b.predicted_triangle_count;
  return validation.ok() && counts_ok ? 0 : 1;
}

int cmd_verify(const std::string& in_path, const BuildFlags& flags, int jobs, const std::string& witness_path,
               const std::string& out_path) {
  const auto src = load_source(in_path, flags);
  const auto validation = validate_disk(*src.complex);
  if (!validation.ok()) {
    for (const auto& issue : validation.issues) std::cerr << to_string(issue.kind) << ": " << issue.message << "\n";
    return 1;
  }
  auto report = verify_filling(*src.complex, VerifyOptions{resolve_jobs(jobs)});
  if (src.build) report.eps_n = uniform_estimates(*src.build).eps_n;
  const Json j = to_json(report);
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) write_json_file(out_path, j);
  if (!witness_path.empty()) {
    std::ofstream out(witness_path);
    for (VertexId v : report.witness) out << v << "\n";
  }
  return report.is_isometric ? 0 : 1;
}

int cmd_audit(const std::string& in_path, const BuildFlags& flags, int jobs, std::size_t samples,
              std::uint64_t seed) {
  const auto src = load_source(in_path, flags);
  if (!src.build) throw std::runtime_error("audit needs build parameters (a build file or --n)");
  const auto& b = *src.build;
  const auto audit = drift_audit(b);
  std::map<std::string_view, std::size_t> per_kind;
  for (const auto& a : audit.annuli) {
    ++per_kind[to_string(a.kind)];
    if (a.ok) continue;
    std::cout << "annulus " << a.r << " " << to_string(a.kind) << " b=" << to_string(a.bound)
              << " max=" << to_string(a.max_displacement) << " min=" << to_string(a.min_displacement)
              << " VIOLATION\n";
  }
  for (const auto& [kind, count] : per_kind) std::cout << kind << " annuli: " << count << "\n";
  std::cout << "drift audit: " << audit.annuli.size() << " annuli, " << audit.violations << " violations\n";

  // Drift-estimate soundness against exact distances.
  const std::uint32_t n = b.schedule.n;
  const SkeletonGraph g(b.complex);
  const BoundaryDistances d(g, n, resolve_jobs(jobs));
  const DriftLowerBound bound(b);
  std::size_t checked = 0;
  std::size_t unsound = 0;
  const auto check = [&](VertexId x, VertexId y) {
    ++checked;
    if (bound(x, y) > d(x, y)) ++unsound;
  };
  if (samples == 0 || std::uint64_t{n} * (n - 1) / 2 <= samples) {
    for (VertexId x = 0; x < n; ++x)
      for (VertexId y = x + 1; y < n; ++y) check(x, y);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    for (std::size_t i = 0; i < samples; ++i) check(pick(rng), pick(rng));
  }
  std::cout << "lower-bound soundness: " << checked << " pairs, " << unsound << " violations\n";
  return audit.ok() && unsound == 0 ? 0 : 1;
}

int cmd_sweep(const std::vector<std::uint32_t>& n_list, const std::string& rho, const std::string& eta, int jobs,
              bool no_verify, bool no_timing, const std::string& out_path) {
  SweepOptions options{resolve_jobs(jobs), !no_verify, !no_timing};
  const auto rows = run_sweep(n_list, parse_decimal(rho), parse_decimal(eta), options);
  if (out_path.empty()) {
    write_sweep_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    write_sweep_csv(out, rows);
  }
  bool ok = true;
  for (const auto& r : rows) {
    if (!r.ok()) {
      ok = false;
      std::cerr << "n=" << r.n << ": " << (r.error ? *r.error : "structural check failed") << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_oracle(std::uint32_t n, std::uint32_t max_interior, const std::string& out_path) {
  const auto r = min_isometric_vertices(n, EnumerationBudget{n, max_interior});
  for (std::size_t k = 0; k < r.fillings_per_level.size(); ++k) {
    std::cout << "interior=" << k << " disks=" << r.fillings_per_level[k]
              << (r.isometric_per_level[k] > 0 ? " (stopped at first isometric)" : " isometric=0") << "\n";
  }
  if (r.min_vertices) {
    std::cout << "min_isometric_vertices(" << n << ") = " << *r.min_vertices << "\n";
    if (!out_path.empty()) write_json_file(out_path, to_json(*r.witness));
  } else {
    std::cout << "min_isometric_vertices(" << n << ") = unknown within budget"
              << (r.truncated ? " (truncated)" : "") << "\n";
  }
  return 0;
}

int cmd_analyze(bool core, bool integral, bool constants, double eta, int grid) {
  if (!core && !integral && !constants) core = integral = constants = true;
  bool ok = true;
  if (core) {
    const auto r = check_core_inequality(grid, grid, eta);
    std::cout << "core inequality: " << r.evaluations << " grid points, min slack " << format_double(r.min_slack)
              << " at (t=" << format_double(r.argmin_t) << ", s=" << format_double(r.argmin_s)
              << "), max |slack| at s=1/2: " << format_double(r.max_boundary_slack)
              << (r.passed() ? " ok" : " FAILED") << "\n";
    ok = ok && r.passed();
  }
  if (integral) {
    const auto p = profile_integral(eta);
    std::cout << "profile integral (eta=" << format_double(eta) << "): closed form " << format_double(p.closed_form)
              << ", quadrature " << format_double(p.quadrature) << ", |diff| " << format_double(p.abs_difference())
              << "\n";
    ok = ok && p.abs_difference() <= 1e-12;
  }
  if (constants) {
    const auto c = constants_report();
    std::cout << c.text();
    ok = ok && c.ordered;
  }
  return ok ? 0 : 1;
}

int cmd_export(const std::string& in_path, const std::string& format, const std::string& out_path) {
  const auto fmt = parse_mesh_format(format);
  const auto t = triangulation_from_json(read_json_file(in_path));
  if (out_path.empty()) {
    write_mesh(std::cout, t, fmt);
  } else {
    std::ofstream out(out_path);
    write_mesh(out, t, fmt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringfill: concentric isometric fillings of the cycle graph"};
  app.require_subcommand(1);

  BuildFlags build_flags;
  std::string out_path;
  auto* build = app.add_subcommand("build", "construct K_n and write it as JSON");
  build_flags.attach(build, true);
  build->add_option("--out", out_path, "output JSON path");

  std::string in_path;
  std::string witness_path;
  int jobs = 0;
  BuildFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "exact boundary distance check by BFS");
  verify->add_option("input", in_path, "triangulation JSON");
  verify_flags.attach(verify, false);
  verify->add_option("--jobs", jobs, "worker threads (default: $RINGFILL_JOBS or all cores)");
  verify->add_option("--witness", witness_path, "write the shortcut path vertex list here");
  verify->add_option("--out", out_path, "write the report JSON here");

  BuildFlags audit_flags;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  auto* audit = app.add_subcommand("audit", "drift audit and drift-estimate soundness");
  audit->add_option("input", in_path, "build JSON (must carry params)");
  audit_flags.attach(audit, false);
  audit->add_option("--jobs", jobs, "worker threads");
  audit->add_option("--samples", samples, "sampled pairs for the soundness check (0 = all)");
  audit->add_option("--seed", seed, "sampling seed");

  std::vector<std::uint32_t> n_list;
  std::string rho = "0.1";
  std::string eta = "0.25";
  bool no_verify = false;
  bool no_timing = false;
  auto* sweep = app.add_subcommand("sweep", "convergence sweep, CSV output");
  sweep->add_option("--n,--n-list", n_list, "boundary lengths, comma separated")->delimiter(',')->required();
  sweep->add_option("--rho", rho)->capture_default_str();
  sweep->add_option("--eta", eta)->capture_default_str();
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--out", out_path, "CSV path (default stdout)");
  sweep->add_flag("--no-verify", no_verify, "skip BFS verification");
  sweep->add_flag("--no-timing", no_timing, "write 0 in timing columns for byte-stable output");

  std::uint32_t oracle_n = 3;
  std::uint32_t max_interior = 3;
  auto* oracle = app.add_subcommand("oracle", "exhaustive minimum isometric filling for tiny n");
  oracle->add_option("--n", oracle_n)->required();
  oracle->add_option("--max-interior", max_interior)->capture_default_str();
  oracle->add_option("--out", out_path, "witness JSON path");

  bool core = false;
  bool integral = false;
  bool constants = false;
  double analyze_eta = 0.0;
  int grid = 1000;
  auto* analyze = app.add_subcommand("analyze", "numerical certificates for the profile analysis");
  analyze->add_flag("--core-inequality", core);
  analyze->add_flag("--profile-integral", integral);
  analyze->add_flag("--constants", constants);
  analyze->add_option("--eta", analyze_eta)->capture_default_str();
  analyze->add_option("--grid", grid)->capture_default_str();

  std::string format = "off";
  auto* exp = app.add_subcommand("export", "write OFF/OBJ for inspection");
  exp->add_option("--in", in_path)->required();
  exp->add_option("--format", format)->capture_default_str();
  exp->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(build_flags, out_path);
    if (*verify) return cmd_verify(in_path, verify_flags, jobs, witness_path, out_path);
    if (*audit) return cmd_audit(in_path, audit_flags, jobs, samples, seed);
    if (*sweep) return cmd_sweep(n_list, rho, eta, jobs, no_verify, no_timing, out_path);
    if (*oracle) return cmd_oracle(oracle_n, max_interior, out_path);
    if (*analyze) return cmd_analyze(core, integral, constants, analyze_eta, grid);
    if (*exp) return cmd_export(in_path, format, out_path);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const ScheduleError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
