#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ringfill/annulus.hpp"
#include "ringfill/rational.hpp"
#include "ringfill/triangulation.hpp"

namespace ringfill {

/// Construction inputs: boundary length n, collar fraction rho, stopping
/// scale eta. rho and eta are exact so every ceiling/floor below is decided
/// without rounding.
struct Params {
  std::uint32_t n = 0;
  Rational rho;
  Rational eta;

  static Params from_text(std::uint32_t n, std::string_view rho, std::string_view eta) {
    return {n, parse_decimal(rho), parse_decimal(eta)};
  }
  static Params from_double(std::uint32_t n, double rho, double eta) {
    return {n, ringfill::from_double(rho), ringfill::from_double(eta)};
  }
};

/// Thrown when (n, rho, eta) cannot produce a valid complex. The message
/// names the violated bound.
class ScheduleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Schedule {
  std::uint32_t n = 0;
  Rational rho;
  Rational eta;
  std::uint32_t collar_width = 0;   // w = ceil(rho n)
  std::uint32_t block_count = 0;    // B = ceil(sqrt n)
  Rational t_eta;                   // (1 - eta^2) / 4
  Rational block_width;             // Delta_n = t_eta / B
  std::vector<Rational> block_start;        // t_b, b = 0..B
  std::vector<std::uint32_t> cycle_length;  // M_b = ceil(n q(t_b)), b = 0..B
  std::vector<std::uint32_t> block_layers;  // L_b = floor(n Delta_n), b = 0..B-1
};

/// Throws ScheduleError when rho <= 0, eta outside (0,1), eta^2 >= rho,
/// w < 1, any M_b < 3 or L_b < 1.
Schedule compute_schedule(const Params& p);

/// n(w+1) + sum_b (L_b M_b + M_{b+1}) + 1.
std::int64_t predicted_vertex_count(const Schedule& s);
/// 2nw + sum_b (2 L_b M_b + transition triangles) + M_B.
std::int64_t predicted_triangle_count(const Schedule& s);

struct BuildResult {
  Params params;
  Schedule schedule;
  Triangulation complex;
  LayerLedger ledger;
  VertexId apex = 0;
  std::int64_t predicted_vertex_count = 0;
  std::int64_t predicted_triangle_count = 0;
};

/// Collar of w equal annuli of length n, then for each block L_b equal
/// annuli of length M_b and one transition to M_{b+1} (staircase if strictly
/// shorter, equal annulus otherwise), then a cone cap on the last cycle.
BuildResult build_filling(const Params& p);

struct DensityPrediction {
  Rational asymptotic_bound;   // rho + (1 - eta^3) / 6
  Rational main_region_term;   // (1 - eta^3) / 6
  std::optional<std::int64_t> finite_vertex_count;
  std::optional<double> finite_density;
  std::optional<std::string> schedule_error;
};

/// Never throws for bad parameters: the finite-n fields are empty and
/// schedule_error explains why when the schedule rejects them.
DensityPrediction predict_density(const Params& p);

}  // namespace ringfill
