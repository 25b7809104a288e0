#include "vecpr/solve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vecpr/rng.hpp"

namespace vecpr {

RunTrace iterate(const OperatorSpec& spec, const ProductIterate& x0, int max_iter,
                 double tol_residual, bool store_iterates) {
  if (max_iter < 1) throw std::invalid_argument("iterate: max_iter must be >= 1");
  spec.validate();

  RunTrace trace;
  ProductIterate x = x0;
  if (store_iterates) trace.iterates.push_back(x);

  for (int k = 0; k < max_iter; ++k) {
    StepInfo info = step_traced(spec, x);
    const double residual = distance(info.point, x);
    trace.residuals.push_back(residual);
    trace.set_gap.push_back(info.pre_gap);
    trace.degenerate_counts.push_back(info.degenerate.size());
    ++trace.iterations;

    if (!all_finite(info.point)) {
      trace.aborted_nonfinite = true;
      break;  // keep the last finite iterate
    }
    x = std::move(info.point);
    if (store_iterates) trace.iterates.push_back(x);
    if (residual <= tol_residual) break;
  }

  trace.final = std::move(x);
  trace.rate_estimate = estimate_linear_rate(trace.residuals, &trace.fit_r2);
  return trace;
}

RunTrace schedule_extrapolate_then_average(const OperatorSpec& spec, const ProductIterate& x0,
                                           int k1, int k2, bool store_iterates) {
  if (k1 < 1) throw std::invalid_argument("schedule: k1 must be >= 1");
  if (k2 < 0) throw std::invalid_argument("schedule: k2 must be >= 0");

  RunTrace trace = iterate(spec, x0, k1, 0.0, store_iterates);
  if (k2 == 0 || trace.aborted_nonfinite) return trace;

  OperatorSpec averaging = spec;
  averaging.family = family_is_cyclic(spec.family) ? OperatorFamily::CP : OperatorFamily::AP;
  RunTrace tail = iterate(averaging, trace.final, k2, 0.0, store_iterates);

  trace.residuals.insert(trace.residuals.end(), tail.residuals.begin(), tail.residuals.end());
  trace.set_gap.insert(trace.set_gap.end(), tail.set_gap.begin(), tail.set_gap.end());
  trace.degenerate_counts.insert(trace.degenerate_counts.end(), tail.degenerate_counts.begin(),
                                 tail.degenerate_counts.end());
  if (store_iterates)
    trace.iterates.insert(trace.iterates.end(), tail.iterates.begin() + 1, tail.iterates.end());
  trace.iterations += tail.iterations;
  trace.aborted_nonfinite = tail.aborted_nonfinite;
  trace.final = std::move(tail.final);
  trace.rate_estimate = estimate_linear_rate(trace.residuals, &trace.fit_r2);
  return trace;
}

PhaseExtraction extract_phase(const ProductIterate& x_final, const ApertureModel& ap,
                              LiftModel model) {
  if (x_final.p() < 1) throw std::invalid_argument("extract_phase: empty iterate");
  const SixChannelField mean =
      model == LiftModel::Plus ? x_final.blocks[0] : diagonal_average(x_final);
  const ComplexImage pupil = omega0_pupil(ap, mean);

  PhaseExtraction out;
  out.phase = RealImage(ap.n);
  for (int i = 0; i < ap.n; ++i) {
    for (int j = 0; j < ap.n; ++j) {
      if (!ap.on_mask(i, j)) continue;
      const cplx z = pupil(i, j);
      if (z == cplx(0.0, 0.0)) {
        out.flagged.push_back({0, i, j});
        continue;
      }
      double a = std::arg(z);
      if (a == -std::numbers::pi) a = std::numbers::pi;  // enforce (-pi, pi]
      out.phase(i, j) = a;
    }
  }
  return out;
}

std::optional<double> estimate_linear_rate(const std::vector<double>& residuals,
                                           double* r_squared) {
  if (r_squared) *r_squared = 0.0;
  std::vector<double> logs;
  logs.reserve(residuals.size());
  for (double r : residuals) {
    if (!(r > 0.0)) break;  // exact fixed point reached; fit what precedes it
    logs.push_back(std::log(r));
  }
  if (logs.size() < 10) return std::nullopt;

  const double n = static_cast<double>(logs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t k = 0; k < logs.size(); ++k) {
    sx += static_cast<double>(k);
    sy += logs[k];
    sxx += static_cast<double>(k) * k;
    sxy += static_cast<double>(k) * logs[k];
  }
  const double denom = n * sxx - sx * sx;
  if (denom <= 0) return std::nullopt;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (size_t k = 0; k < logs.size(); ++k) {
    const double fit = intercept + slope * static_cast<double>(k);
    ss_res += (logs[k] - fit) * (logs[k] - fit);
    ss_tot += (logs[k] - mean_y) * (logs[k] - mean_y);
  }
  if (ss_tot <= 0) return std::nullopt;  // constant residuals carry no rate
  const double r2 = 1.0 - ss_res / ss_tot;
  if (r_squared) *r_squared = r2;
  if (r2 < 0.9) return std::nullopt;

  const double rate = std::exp(slope);
  if (!(rate > 0.0 && rate < 1.0)) return std::nullopt;
  return rate;
}

std::optional<double> estimate_linear_rate(const RunTrace& trace, double* r_squared) {
  return estimate_linear_rate(trace.residuals, r_squared);
}

namespace {

ProductIterate random_in_ball(const ProductIterate& center, double radius, Rng& rng) {
  if (radius <= 0.0) return center;
  ProductIterate dir = center;
  double nrm_sq = 0;
  for (auto& block : dir.blocks) {
    for (size_t c = 0; c < 6; ++c) {
      for (cplx& v : block.channel(c)) {
        v = rng.gaussian_cplx();
        nrm_sq += std::norm(v);
      }
    }
  }
  const double nrm = std::sqrt(nrm_sq);
  if (nrm == 0.0) return center;
  const double s = radius * rng.uniform() / nrm;
  ProductIterate point = center;
  add_scaled(point, dir, s);
  return point;
}

}  // namespace

AveragednessCertificate check_almost_averaged(const OperatorSpec& spec,
                                              const ProductIterate& center, double radius,
                                              int samples, double alpha, uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("check_almost_averaged: samples must be >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("check_almost_averaged: alpha must lie in (0, 1)");

  Rng rng(seed);
  const double trans_weight = (1.0 - alpha) / alpha;

  struct PairStats {
    double lhs, diff_sq, trans_sq;
  };
  std::vector<PairStats> stats;
  stats.reserve(static_cast<size_t>(samples));

  double epsilon = 0.0;
  for (int k = 0; k < samples; ++k) {
    // First pair anchors the certificate at the center point itself.
    const ProductIterate y = k == 0 ? center : random_in_ball(center, radius, rng);
    const ProductIterate z = random_in_ball(center, radius, rng);
    const double diff = distance(z, y);
    if (diff == 0.0) continue;

    const ProductIterate yp = step(spec, y);
    const ProductIterate zp = step(spec, z);
    const double lhs = norm_sq(lincomb(1.0, zp, -1.0, yp));
    // (z+ - z) - (y+ - y)
    const ProductIterate tz = lincomb(1.0, zp, -1.0, z);
    const ProductIterate ty = lincomb(1.0, yp, -1.0, y);
    const double trans_sq = norm_sq(lincomb(1.0, tz, -1.0, ty));

    stats.push_back({lhs, diff * diff, trans_sq});
    const double needed = (lhs + trans_weight * trans_sq - diff * diff) / (diff * diff);
    if (needed > epsilon) epsilon = needed;
  }

  AveragednessCertificate cert;
  cert.alpha = alpha;
  cert.sample_count = static_cast<int>(stats.size());
  cert.epsilon = epsilon;
  double worst = 0.0;
  for (const auto& s : stats) {
    const double rhs = (1.0 + epsilon) * s.diff_sq - trans_weight * s.trans_sq;
    if (rhs <= 0.0) {
      worst = std::max(worst, s.lhs > 0.0 ? 1.0 : 0.0);
    } else {
      worst = std::max(worst, s.lhs / rhs);
    }
  }
  cert.worst_ratio = worst;
  return cert;
}

}  // namespace vecpr
