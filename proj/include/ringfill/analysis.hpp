#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ringfill/rational.hpp"

namespace ringfill {

/// Normalized core inequality 2t + q(t)(s - I(t))_+ >= s on a uniform grid
/// t in [0, t_eta], s in [0, 1/2].
struct CoreInequalityReport {
  double min_slack = 0;
  double argmin_t = 0;
  double argmin_s = 0;
  /// max |slack| at s = 1/2 over the boundary samples.
  double max_boundary_slack = 0;
  std::size_t evaluations = 0;

  bool passed(double tolerance = 1e-12) const {
    return min_slack >= -tolerance && max_boundary_slack <= tolerance;
  }
};

double core_slack(double t, double s);

/// Throws std::invalid_argument if either resolution is below 2.
CoreInequalityReport check_core_inequality(int grid_t, int grid_s, double eta, int boundary_samples = 100);

struct ProfileIntegral {
  double closed_form = 0;  // (1 - eta^3) / 6
  double quadrature = 0;   // int_0^{t_eta} q(t) dt, adaptive
  double abs_difference() const;
};

/// Throws std::invalid_argument unless 0 <= eta <= 1.
ProfileIntegral profile_integral(double eta);

/// Adaptive quadrature of 1/q over [0, t]; compared against I(t).
double inverse_profile_quadrature(double t);

/// Vertex lower bound for delta-Lipschitz fillings of C_n:
/// delta^3/8 (n-1)^2 + (n-1)/2.
double lower_bound(std::uint32_t n, double delta);

struct ConstantsReport {
  double lower = 0.125;      // 1/8
  double construction = 0;   // 1/6
  double hemisphere = 0;     // 1/(pi sqrt 3)
  bool ordered = false;      // lower <= construction < hemisphere
  std::string text() const;
};

ConstantsReport constants_report();

struct SweepRow {
  std::uint32_t n = 0;
  Rational rho;
  Rational eta;
  std::int64_t vertices = 0;
  double density = 0;
  std::int64_t delta_num = 0;
  std::int64_t delta_den = 1;
  bool is_isometric = false;
  double eps_n = 0;
  double build_ms = 0;
  double verify_ms = 0;
  bool disk_valid = false;
  bool drift_ok = false;
  bool above_lower_bound = false;
  bool verified = false;
  std::optional<std::string> error;

  double delta() const { return static_cast<double>(delta_num) / static_cast<double>(delta_den); }
  bool ok() const { return !error && disk_valid && drift_ok && above_lower_bound; }
};

struct SweepOptions {
  unsigned jobs = 1;
  bool verify = true;   // exact BFS verification; density-only sweeps skip it
  bool timing = true;   // false writes 0 for the timing columns
};

/// One row per n, in input order. Failures are recorded on the row.
std::vector<SweepRow> run_sweep(const std::vector<std::uint32_t>& n_list, const Rational& rho,
                                const Rational& eta, const SweepOptions& options = {});

inline constexpr const char* kSweepCsvHeader =
    "n,rho,eta,vertices,density,delta,is_isometric,eps_n,build_ms,verify_ms";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace ringfill
