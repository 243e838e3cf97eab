#include "ringfill/filling.hpp"

#include <string>

namespace ringfill {

namespace {

std::uint32_t to_u32(const BigInt& value, std::string_view what) {
  if (value < 0 || value > BigInt(0xffffffffu)) {
    throw ScheduleError(std::string(what) + " out of range");
  }
  return static_cast<std::uint32_t>(value.get_ui());
}

}  // namespace

Schedule compute_schedule(const Params& p) {
  if (p.n < 3) throw ScheduleError("n >= 3 violated (n=" + std::to_string(p.n) + ")");
  if (sgn(p.rho) <= 0) throw ScheduleError("rho > 0 violated (rho=" + to_string(p.rho) + ")");
  if (sgn(p.eta) <= 0 || p.eta >= 1) {
    throw ScheduleError("0 < eta < 1 violated (eta=" + to_string(p.eta) + ")");
  }
  if (p.eta * p.eta >= p.rho) {
    throw ScheduleError("eta^2 < rho violated (eta^2=" + to_string(Rational(p.eta * p.eta)) +
                        ", rho=" + to_string(p.rho) + ")");
  }

  Schedule s;
  s.n = p.n;
  s.rho = p.rho;
  s.eta = p.eta;
  const Rational n(p.n);

  s.collar_width = to_u32(ceil(p.rho * n), "w");
  if (s.collar_width < 1) throw ScheduleError("w >= 1 violated");

  s.block_count = to_u32(ceil_sqrt(n), "B");
  s.t_eta = (1 - p.eta * p.eta) / 4;
  s.block_width = s.t_eta / s.block_count;

  const std::uint32_t L = to_u32(floor(n * s.block_width), "L_b");
  if (L < 1) {
    throw ScheduleError("L_b >= 1 violated (n*Delta_n=" + format_double(to_double(n * s.block_width)) +
                        ")");
  }
  s.block_layers.assign(s.block_count, L);

  for (std::uint32_t b = 0; b <= s.block_count; ++b) {
    Rational t = b * s.block_width;
    // M_b = ceil(n sqrt(1 - 4 t_b)) = ceil(sqrt(n^2 (1 - 4 t_b))), evaluated exactly.
    const std::uint32_t M = to_u32(ceil_sqrt(n * n * (1 - 4 * t)), "M_b");
    if (M < 3) {
      throw ScheduleError("M_b >= 3 violated (M_" + std::to_string(b) + "=" + std::to_string(M) + ")");
    }
    s.block_start.push_back(std::move(t));
    s.cycle_length.push_back(M);
  }
  return s;
}

std::int64_t predicted_vertex_count(const Schedule& s) {
  std::int64_t count = std::int64_t{s.n} * (s.collar_width + 1);
  for (std::uint32_t b = 0; b < s.block_count; ++b) {
    count += std::int64_t{s.block_layers[b]} * s.cycle_length[b] + s.cycle_length[b + 1];
  }
  return count + 1;
}

std::int64_t predicted_triangle_count(const Schedule& s) {
  std::int64_t count = 2 * std::int64_t{s.n} * s.collar_width;
  for (std::uint32_t b = 0; b < s.block_count; ++b) {
    const std::int64_t m = s.cycle_length[b];
    const std::int64_t M = s.cycle_length[b + 1];
    count += 2 * m * s.block_layers[b] + (M < m ? m + M : 2 * m);
  }
  return count + s.cycle_length.back();
}

BuildResult build_filling(const Params& p) {
  Schedule s = compute_schedule(p);
  ComplexBuilder builder(s.n);

  LayerHandle cur = builder.boundary();
  for (std::uint32_t i = 0; i < s.collar_width; ++i) {
    cur = builder.add_equal_annulus(cur, AnnulusKind::collar).inner;
  }
  for (std::uint32_t b = 0; b < s.block_count; ++b) {
    for (std::uint32_t i = 0; i < s.block_layers[b]; ++i) {
      cur = builder.add_equal_annulus(cur, AnnulusKind::equal).inner;
    }
    if (s.cycle_length[b + 1] < s.cycle_length[b]) {
      cur = builder.add_shrinking_annulus(cur, s.cycle_length[b + 1]).inner;
    } else {
      cur = builder.add_equal_annulus(cur, AnnulusKind::transition_equal).inner;
    }
  }
  const VertexId apex = builder.add_cone_cap(cur);

  LayerLedger ledger = builder.ledger();
  Triangulation complex = builder.finish();
  const auto vcount = predicted_vertex_count(s);
  const auto fcount = predicted_triangle_count(s);
  return BuildResult{p, std::move(s), std::move(complex), std::move(ledger), apex, vcount, fcount};
}

DensityPrediction predict_density(const Params& p) {
  DensityPrediction out;
  out.main_region_term = (1 - p.eta * p.eta * p.eta) / 6;
  out.asymptotic_bound = p.rho + out.main_region_term;
  try {
    const auto s = compute_schedule(p);
    const auto count = predicted_vertex_count(s);
    out.finite_vertex_count = count;
    out.finite_density = static_cast<double>(count) / (static_cast<double>(p.n) * p.n);
  } catch (const ScheduleError& e) {
    out.schedule_error = e.what();
  }
  return out;
}

}  // namespace ringfill
