#include "ringfill/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "ringfill/filling.hpp"
#include "ringfill/profile.hpp"
#include "ringfill/verifier.hpp"

namespace ringfill {

double core_slack(double t, double s) {
  const double q = profile::q(t);
  return 2.0 * t + q * std::max(s - profile::I(t), 0.0) - s;
}

CoreInequalityReport check_core_inequality(int grid_t, int grid_s, double eta, int boundary_samples) {
  if (grid_t < 2 || grid_s < 2 || boundary_samples < 2) {
    throw std::invalid_argument("core inequality grid resolutions must be >= 2");
  }
  const double t_max = profile::t_eta(eta);
  CoreInequalityReport report;
  report.min_slack = INFINITY;
  for (int i = 0; i < grid_t; ++i) {
    const double t = t_max * i / (grid_t - 1);
    for (int j = 0; j < grid_s; ++j) {
      const double s = 0.5 * j / (grid_s - 1);
      const double slack = core_slack(t, s);
      ++report.evaluations;
      if (slack < report.min_slack) {
        report.min_slack = slack;
        report.argmin_t = t;
        report.argmin_s = s;
      }
    }
  }
  for (int k = 0; k < boundary_samples; ++k) {
    const double t = t_max * k / (boundary_samples - 1);
    report.max_boundary_slack = std::max(report.max_boundary_slack, std::abs(core_slack(t, 0.5)));
  }
  return report;
}

double ProfileIntegral::abs_difference() const { return std::abs(closed_form - quadrature); }

namespace {

// int_a^b f over the profile interval; f receives 1 - 4t computed without
// cancellation near the right endpoint.
template <class F>
double integrate_profile(F f, double b, double rest_at_b) {
  if (b <= 0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  const auto g = [&](double x, double xc) {
    // xc = b - x on the right half of [0, b].
    const double u = xc > 0 ? rest_at_b + 4.0 * xc : 1.0 - 4.0 * x;
    return f(std::max(u, 0.0));
  };
  return integrator.integrate(g, 0.0, b, 1e-15);
}

}  // namespace

ProfileIntegral profile_integral(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("profile_integral needs 0 <= eta <= 1");
  ProfileIntegral out;
  out.closed_form = (1.0 - eta * eta * eta) / 6.0;
  out.quadrature = integrate_profile([](double u) { return std::sqrt(u); }, profile::t_eta(eta), eta * eta);
  return out;
}

double inverse_profile_quadrature(double t) {
  if (!(t >= 0.0 && t < 0.25)) throw std::invalid_argument("inverse_profile_quadrature needs 0 <= t < 1/4");
  return integrate_profile([](double u) { return 1.0 / std::sqrt(u); }, t, 1.0 - 4.0 * t);
}

double lower_bound(std::uint32_t n, double delta) {
  const double m = static_cast<double>(n) - 1.0;
  return delta * delta * delta / 8.0 * m * m + m / 2.0;
}

ConstantsReport constants_report() {
  ConstantsReport r;
  r.construction = 1.0 / 6.0;
  r.hemisphere = 1.0 / (std::numbers::pi * std::numbers::sqrt3);
  r.ordered = r.lower <= r.construction && r.construction < r.hemisphere;
  return r;
}

std::string ConstantsReport::text() const {
  std::ostringstream out;
  out.precision(17);
  out << "lower bound        1/8          = " << lower << "\n"
      << "construction       1/6          = " << construction << "\n"
      << "hemisphere         1/(pi sqrt3) = " << hemisphere << "\n"
      << "gap                1/(pi sqrt3) - 1/6 = " << hemisphere - construction << "\n"
      << "ordering 1/8 <= 1/6 < 1/(pi sqrt3): " << (ordered ? "holds" : "FAILS") << "\n";
  return out.str();
}

std::vector<SweepRow> run_sweep(const std::vector<std::uint32_t>& n_list, const Rational& rho,
                                const Rational& eta, const SweepOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto ms_since = [&](clock::time_point start) {
    return options.timing ? std::chrono::duration<double, std::milli>(clock::now() - start).count() : 0.0;
  };
  std::vector<SweepRow> rows;
  for (const auto n : n_list) {
    SweepRow row;
    row.n = n;
    row.rho = rho;
    row.eta = eta;
    try {
      auto start = clock::now();
      const auto built = build_filling(Params{n, rho, eta});
      row.build_ms = ms_since(start);
      row.vertices = static_cast<std::int64_t>(built.complex.vertex_count());
      row.density = static_cast<double>(row.vertices) / (static_cast<double>(n) * n);
      row.disk_valid = validate_disk(built.complex).ok() && row.vertices == built.predicted_vertex_count;
      row.drift_ok = drift_audit(built).ok();
      row.above_lower_bound = static_cast<double>(row.vertices) >= lower_bound(n, 1.0);
      row.eps_n = uniform_estimates(built).eps_n;
      if (options.verify && row.disk_valid) {
        start = clock::now();
        const auto report = verify_filling(built.complex, VerifyOptions{options.jobs});
        row.verify_ms = ms_since(start);
        row.delta_num = report.delta_num;
        row.delta_den = report.delta_den;
        row.is_isometric = report.is_isometric;
        row.verified = true;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(to_double(r.rho)) << ',' << format_double(to_double(r.eta)) << ',';
    if (r.error) {
      out << ",,,,,,\n";
      continue;
    }
    out << r.vertices << ',' << format_double(r.density) << ',';
    if (r.verified) {
      out << format_double(r.delta()) << ',' << (r.is_isometric ? "true" : "false");
    } else {
      out << ',';
    }
    out << ',' << format_double(r.eps_n) << ',' << format_double(r.build_ms) << ','
        << format_double(r.verify_ms) << "\n";
  }
}

}  // namespace ringfill
