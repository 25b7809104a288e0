#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vecpr/operators.hpp"

namespace vecpr {

/// Record of one fixed-point run.
struct RunTrace {
  std::vector<double> residuals;            // ||x_{k+1} - x_k||
  std::vector<double> set_gap;              // data-side gap ||P_B(x_k) - x_k||
  std::vector<size_t> degenerate_counts;    // selection-rule firings per iteration
  std::optional<double> rate_estimate;      // only when log-linear fit has R^2 >= 0.9
  double fit_r2 = 0.0;
  int iterations = 0;
  bool aborted_nonfinite = false;
  ProductIterate final;
  std::vector<ProductIterate> iterates;     // optional stored trajectory
};

/// Repeats step() until the residual drops to tol_residual or max_iter is
/// reached. A non-finite iterate aborts the run with the flag set; the
/// last finite iterate is kept.
RunTrace iterate(const OperatorSpec& spec, const ProductIterate& x0, int max_iter,
                 double tol_residual = 0.0, bool store_iterates = false);

/// k1 steps of the given operator followed by k2 averaging steps of plain
/// alternating projections on the same sets (cyclic specs average with
/// cyclic projections). Traces are concatenated.
RunTrace schedule_extrapolate_then_average(const OperatorSpec& spec, const ProductIterate& x0,
                                           int k1, int k2, bool store_iterates = false);

/// How a product iterate maps back to a single field: Pair averages all
/// blocks (H^m models); Plus reads block 0 (H^{m+1} models).
enum class LiftModel { Pair, Plus };

struct PhaseExtraction {
  RealImage phase;                 // in (-pi, pi], zero off mask
  std::vector<PixelFlag> flagged;  // mask pixels with vanishing pupil
};

/// Reads the retrieved phase out of a final iterate via the Omega_0
/// least-squares pupil z = (1/2) sum_c E_c * x_c.
PhaseExtraction extract_phase(const ProductIterate& x_final, const ApertureModel& ap,
                              LiftModel model = LiftModel::Pair);

/// Least-squares slope of log residuals, exponentiated. Empty when fewer
/// than 10 positive residuals are available, when the fit has R^2 < 0.9,
/// or when the fitted rate is not in (0, 1). The series is truncated at
/// the first nonpositive residual (exact fixed point).
std::optional<double> estimate_linear_rate(const std::vector<double>& residuals,
                                           double* r_squared = nullptr);
std::optional<double> estimate_linear_rate(const RunTrace& trace, double* r_squared = nullptr);

struct AveragednessCertificate {
  double epsilon = 0.0;     // smallest violation making all sampled pairs pass
  double alpha = 0.0;       // averaging constant the certificate was checked at
  int sample_count = 0;
  double worst_ratio = 0.0; // max LHS/RHS of the defining inequality at epsilon
};

/// Empirical pointwise-almost-averagedness check: samples pairs in the
/// ball around `center`, applies one operator step to each point, and
/// returns the smallest violation epsilon for which
///   ||z+ - y+||^2 <= (1+eps)||z - y||^2 - ((1-a)/a)||(z+ - z)-(y+ - y)||^2
/// holds over all sampled pairs at averaging constant `alpha`.
AveragednessCertificate check_almost_averaged(const OperatorSpec& spec,
                                              const ProductIterate& center, double radius,
                                              int samples, double alpha, uint64_t seed = 7);

}  // namespace vecpr
