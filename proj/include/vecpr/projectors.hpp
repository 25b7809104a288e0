#pragma once

#include <memory>
#include <vector>

#include "vecpr/aperture.hpp"
#include "vecpr/field.hpp"
#include "vecpr/measurement.hpp"

namespace vecpr {

/// Grid location where a projector had to resolve a set-valued choice
/// (block index within the product iterate, then row/col).
struct PixelFlag {
  int block;
  int row;
  int col;
};

struct ProjectionResult {
  ProductIterate point;
  std::vector<PixelFlag> degenerate;
  bool unique() const { return degenerate.empty(); }
};

// --- building blocks on single fields -------------------------------------

/// M_d: channelwise F(x_c * exp(j*phi_d)). Unitary.
SixChannelField apply_M(const RealImage& diversity, const SixChannelField& x);

/// M_d^{-1}: channelwise F^{-1}(x_c) * exp(-j*phi_d).
SixChannelField apply_M_inv(const RealImage& diversity, const SixChannelField& x);

/// Gauge G_d(x) = sqrt(sum_c |M_d(x)_c|^2), elementwise over the grid.
RealImage gauge_G(const RealImage& diversity, const SixChannelField& x);

/// Projection onto S_d = {x : sum_c |x_c|^2 = r}: per pixel, radial
/// scaling onto the sphere of radius sqrt(r) in C^6. Zero-norm pixels take
/// the deterministic selection (all energy in channel XX, zero phase)
/// and are flagged.
SixChannelField project_sphere(const RealImage& r, const SixChannelField& z,
                               std::vector<PixelFlag>* flags = nullptr, int block = 0);

/// P_{Omega_d} = M_d^{-1} o P_{S_d} o M_d.
SixChannelField project_omega_d(const RealImage& r, const RealImage& diversity,
                                const SixChannelField& x,
                                std::vector<PixelFlag>* flags = nullptr, int block = 0);

/// P_{Omega_0}: the pupil z = (1/2) sum_c E_c * x_c re-embedded as
/// (E_c * z). Linear, idempotent, always single-valued.
SixChannelField project_omega_0(const ApertureModel& ap, const SixChannelField& x);

/// The least-squares pupil of P_{Omega_0}, before re-embedding.
ComplexImage omega0_pupil(const ApertureModel& ap, const SixChannelField& x);

/// P_chi for known amplitude: channels E_c * A * exp(j*Psi) with Psi the
/// pixelwise argument of sum_c E_c * A * x_c. Mask pixels where that sum
/// vanishes take Psi = 0 and are flagged; off-mask pixels are zero.
SixChannelField project_chi(const ApertureModel& ap, const RealImage& amplitude,
                            const SixChannelField& x,
                            std::vector<PixelFlag>* flags = nullptr, int block = 0);

// --- constraint-set handles ------------------------------------------------

enum class SetKind { Omega0, OmegaD, Chi, A, AChi, D, B, BPlus, BChi };

/// Value-semantic handle binding a constraint set of the feasibility
/// models to its data (aperture geometry, measured intensities, phase
/// diversities, known amplitude). project() evaluates the closed-form
/// projector with deterministic selections.
class ConstraintSet {
 public:
  using AperturePtr = std::shared_ptr<const ApertureModel>;
  using MeasurementPtr = std::shared_ptr<const MeasurementSet>;

  static ConstraintSet omega0(AperturePtr ap);
  static ConstraintSet omega_d(AperturePtr ap, MeasurementPtr ms, int d);  // d in 1..m
  static ConstraintSet chi(AperturePtr ap, RealImage amplitude);
  static ConstraintSet diag_A(AperturePtr ap, int m);
  static ConstraintSet diag_A_chi(AperturePtr ap, RealImage amplitude, int m);
  static ConstraintSet diag_D(int p);
  static ConstraintSet prod_B(AperturePtr ap, MeasurementPtr ms);
  static ConstraintSet prod_B_plus(AperturePtr ap, MeasurementPtr ms);
  static ConstraintSet prod_B_chi(AperturePtr ap, RealImage amplitude, MeasurementPtr ms);

  SetKind kind() const { return kind_; }
  /// Block count a conforming iterate must have.
  int expected_blocks() const { return blocks_; }
  const ApertureModel& aperture() const { return *ap_; }
  const MeasurementSet& measurements() const { return *ms_; }
  const RealImage& bound_amplitude() const { return amplitude_; }

  ProjectionResult project(const ProductIterate& u) const;

 private:
  ConstraintSet(SetKind kind, int blocks) : kind_(kind), blocks_(blocks) {}

  void project_blockwise(const ProductIterate& u, bool first_is_structural,
                         ProjectionResult& res) const;

  SetKind kind_;
  int blocks_;
  int d_ = 0;  // measurement index for OmegaD
  AperturePtr ap_;
  MeasurementPtr ms_;
  RealImage amplitude_;
};

const char* set_kind_name(SetKind k);

}  // namespace vecpr
