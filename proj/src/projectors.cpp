#include "vecpr/projectors.hpp"

#include <cmath>
#include <stdexcept>

#include "vecpr/fft.hpp"

namespace vecpr {

SixChannelField apply_M(const RealImage& diversity, const SixChannelField& x) {
  const int n = x.n();
  if (diversity.n() != n) throw std::invalid_argument("apply_M: grid mismatch");
  SixChannelField y(n);
  ComplexImage tmp(n);
  for (size_t c = 0; c < 6; ++c) {
    const ComplexImage& xc = x.channel(c);
    for (size_t i = 0; i < tmp.size(); ++i)
      tmp[i] = xc[i] * std::polar(1.0, diversity[i]);
    y.channel(c) = fft2_centered(tmp);
  }
  return y;
}

SixChannelField apply_M_inv(const RealImage& diversity, const SixChannelField& x) {
  const int n = x.n();
  if (diversity.n() != n) throw std::invalid_argument("apply_M_inv: grid mismatch");
  SixChannelField y(n);
  for (size_t c = 0; c < 6; ++c) {
    ComplexImage back = ifft2_centered(x.channel(c));
    for (size_t i = 0; i < back.size(); ++i)
      back[i] *= std::polar(1.0, -diversity[i]);
    y.channel(c) = std::move(back);
  }
  return y;
}

RealImage gauge_G(const RealImage& diversity, const SixChannelField& x) {
  const SixChannelField y = apply_M(diversity, x);
  RealImage g(x.n());
  for (size_t c = 0; c < 6; ++c) {
    const ComplexImage& yc = y.channel(c);
    for (size_t i = 0; i < g.size(); ++i) g[i] += std::norm(yc[i]);
  }
  for (double& v : g) v = std::sqrt(v);
  return g;
}

SixChannelField project_sphere(const RealImage& r, const SixChannelField& z,
                               std::vector<PixelFlag>* flags, int block) {
  const int n = z.n();
  if (r.n() != n) throw std::invalid_argument("project_sphere: grid mismatch");
  SixChannelField y(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double nrm_sq = 0;
      for (size_t c = 0; c < 6; ++c) nrm_sq += std::norm(z.channel(c)(i, j));
      const double radius = std::sqrt(std::max(r(i, j), 0.0));
      if (nrm_sq > 0) {
        const double s = radius / std::sqrt(nrm_sq);
        for (size_t c = 0; c < 6; ++c) y.channel(c)(i, j) = s * z.channel(c)(i, j);
      } else {
        // Set-valued pixel: put all energy in channel XX with zero phase.
        y[Channel::XX](i, j) = radius;
        if (flags) flags->push_back({block, i, j});
      }
    }
  }
  return y;
}

SixChannelField project_omega_d(const RealImage& r, const RealImage& diversity,
                                const SixChannelField& x, std::vector<PixelFlag>* flags,
                                int block) {
  return apply_M_inv(diversity, project_sphere(r, apply_M(diversity, x), flags, block));
}

ComplexImage omega0_pupil(const ApertureModel& ap, const SixChannelField& x) {
  if (x.n() != ap.n) throw std::invalid_argument("project_omega_0: grid mismatch");
  ComplexImage z(ap.n);
  for (size_t c = 0; c < 6; ++c) {
    const RealImage& e = ap.E[c];
    const ComplexImage& xc = x.channel(c);
    for (size_t i = 0; i < z.size(); ++i) z[i] += e[i] * xc[i];
  }
  for (cplx& v : z) v *= 0.5;
  return z;
}

SixChannelField project_omega_0(const ApertureModel& ap, const SixChannelField& x) {
  return embed_pupil(ap, omega0_pupil(ap, x));
}

SixChannelField project_chi(const ApertureModel& ap, const RealImage& amplitude,
                            const SixChannelField& x, std::vector<PixelFlag>* flags,
                            int block) {
  const int n = ap.n;
  if (x.n() != n || amplitude.n() != n)
    throw std::invalid_argument("project_chi: grid mismatch");
  SixChannelField y(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!ap.on_mask(i, j)) continue;  // A = 0 there, output stays zero
      cplx s = 0;
      for (size_t c = 0; c < 6; ++c)
        s += ap.E[c](i, j) * amplitude(i, j) * x.channel(c)(i, j);
      cplx phase(1.0, 0.0);
      const double mag = std::abs(s);
      if (mag > 0) {
        phase = s / mag;
      } else {
        if (flags) flags->push_back({block, i, j});
      }
      for (size_t c = 0; c < 6; ++c)
        y.channel(c)(i, j) = ap.E[c](i, j) * amplitude(i, j) * phase;
    }
  }
  return y;
}

// --- ConstraintSet ----------------------------------------------------------

ConstraintSet ConstraintSet::omega0(AperturePtr ap) {
  ConstraintSet s(SetKind::Omega0, 1);
  s.ap_ = std::move(ap);
  return s;
}

ConstraintSet ConstraintSet::omega_d(AperturePtr ap, MeasurementPtr ms, int d) {
  if (d < 1 || d > ms->m()) throw std::invalid_argument("omega_d: d out of range");
  ConstraintSet s(SetKind::OmegaD, 1);
  s.ap_ = std::move(ap);
  s.ms_ = std::move(ms);
  s.d_ = d;
  return s;
}

ConstraintSet ConstraintSet::chi(AperturePtr ap, RealImage amplitude) {
  ConstraintSet s(SetKind::Chi, 1);
  s.ap_ = std::move(ap);
  s.amplitude_ = std::move(amplitude);
  return s;
}

ConstraintSet ConstraintSet::diag_A(AperturePtr ap, int m) {
  if (m < 1) throw std::invalid_argument("diag_A: m must be >= 1");
  ConstraintSet s(SetKind::A, m);
  s.ap_ = std::move(ap);
  return s;
}

ConstraintSet ConstraintSet::diag_A_chi(AperturePtr ap, RealImage amplitude, int m) {
  if (m < 1) throw std::invalid_argument("diag_A_chi: m must be >= 1");
  ConstraintSet s(SetKind::AChi, m);
  s.ap_ = std::move(ap);
  s.amplitude_ = std::move(amplitude);
  return s;
}

ConstraintSet ConstraintSet::diag_D(int p) {
  if (p < 1) throw std::invalid_argument("diag_D: p must be >= 1");
  return ConstraintSet(SetKind::D, p);
}

ConstraintSet ConstraintSet::prod_B(AperturePtr ap, MeasurementPtr ms) {
  ConstraintSet s(SetKind::B, ms->m());
  s.ap_ = std::move(ap);
  s.ms_ = std::move(ms);
  return s;
}

ConstraintSet ConstraintSet::prod_B_plus(AperturePtr ap, MeasurementPtr ms) {
  ConstraintSet s(SetKind::BPlus, ms->m() + 1);
  s.ap_ = std::move(ap);
  s.ms_ = std::move(ms);
  return s;
}

ConstraintSet ConstraintSet::prod_B_chi(AperturePtr ap, RealImage amplitude, MeasurementPtr ms) {
  ConstraintSet s(SetKind::BChi, ms->m() + 1);
  s.ap_ = std::move(ap);
  s.ms_ = std::move(ms);
  s.amplitude_ = std::move(amplitude);
  return s;
}

ProjectionResult ConstraintSet::project(const ProductIterate& u) const {
  if (u.p() != blocks_)
    throw std::invalid_argument(std::string("project ") + set_kind_name(kind_) +
                                ": iterate has wrong block count");
  ProjectionResult res;
  switch (kind_) {
    case SetKind::Omega0:
      res.point = ProductIterate(project_omega_0(*ap_, u.blocks[0]));
      break;
    case SetKind::OmegaD:
      res.point = ProductIterate(project_omega_d(ms_->intensities[d_ - 1],
                                                 ms_->diversities[d_ - 1], u.blocks[0],
                                                 &res.degenerate, 0));
      break;
    case SetKind::Chi:
      res.point = ProductIterate(project_chi(*ap_, amplitude_, u.blocks[0], &res.degenerate, 0));
      break;
    case SetKind::A:
      res.point = duplicate(project_omega_0(*ap_, diagonal_average(u)), blocks_);
      break;
    case SetKind::AChi:
      res.point = duplicate(project_chi(*ap_, amplitude_, diagonal_average(u), &res.degenerate, 0),
                            blocks_);
      break;
    case SetKind::D:
      res.point = duplicate(diagonal_average(u), blocks_);
      break;
    case SetKind::B:
      project_blockwise(u, /*first_is_structural=*/false, res);
      break;
    case SetKind::BPlus:
    case SetKind::BChi:
      project_blockwise(u, /*first_is_structural=*/true, res);
      break;
  }
  return res;
}

void ConstraintSet::project_blockwise(const ProductIterate& u, bool first_is_structural,
                                      ProjectionResult& res) const {
  res.point.blocks.resize(u.blocks.size());
  // Blocks are independent; flags collected per block and merged in
  // block order so results do not depend on the thread count.
  std::vector<std::vector<PixelFlag>> local(u.blocks.size());
#pragma omp parallel for schedule(dynamic)
  for (int d = 0; d < blocks_; ++d) {
    if (d == 0 && first_is_structural) {
      res.point.blocks[0] = kind_ == SetKind::BChi
                                ? project_chi(*ap_, amplitude_, u.blocks[0], &local[0], 0)
                                : project_omega_0(*ap_, u.blocks[0]);
    } else {
      const int meas = first_is_structural ? d - 1 : d;
      res.point.blocks[d] = project_omega_d(ms_->intensities[meas], ms_->diversities[meas],
                                            u.blocks[d], &local[d], d);
    }
  }
  for (const auto& flags : local)
    res.degenerate.insert(res.degenerate.end(), flags.begin(), flags.end());
}

const char* set_kind_name(SetKind k) {
  switch (k) {
    case SetKind::Omega0: return "Omega0";
    case SetKind::OmegaD: return "OmegaD";
    case SetKind::Chi: return "Chi";
    case SetKind::A: return "A";
    case SetKind::AChi: return "AChi";
    case SetKind::D: return "D";
    case SetKind::B: return "B";
    case SetKind::BPlus: return "BPlus";
    case SetKind::BChi: return "BChi";
  }
  return "?";
}

}  // namespace vecpr
