#include "vecpr/aperture.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vecpr {

int ApertureModel::mask_pixel_count() const {
  int count = 0;
  for (unsigned char v : mask) count += v != 0;
  return count;
}

ApertureModel build_aperture(int n, double na, double wavelength, double pixel_size,
                             const AmplitudeSpec& amplitude, double fill) {
  if (n < 8) throw std::invalid_argument("build_aperture: n must be >= 8");
  if (!(na > 0.0 && na < 1.0))
    throw std::invalid_argument("build_aperture: NA must lie in (0, 1)");
  if (!(fill > 0.0 && fill <= 1.0))
    throw std::invalid_argument("build_aperture: fill must lie in (0, 1]");
  if (amplitude.kind == AmplitudeSpec::Kind::Custom) {
    if (amplitude.custom.n() != n)
      throw std::invalid_argument("build_aperture: custom amplitude grid mismatch");
    for (double v : amplitude.custom)
      if (!(v >= 0.0)) throw std::invalid_argument("build_aperture: amplitude must be >= 0");
  }

  ApertureModel ap;
  ap.n = n;
  ap.na = na;
  ap.wavelength = wavelength;
  ap.pixel_size = pixel_size;
  ap.fill = fill;
  ap.delta = 2.0 * na / (fill * n);  // mask radius = fill*n/2 pixels

  ap.mask = MaskImage(n);
  ap.kx = RealImage(n);
  ap.ky = RealImage(n);
  ap.kz = RealImage(n);
  for (auto& e : ap.E) e = RealImage(n);
  ap.amplitude = RealImage(n);

  // Gaussian width so amplitude is exactly 0.5 at radius NA.
  const double sigma = na / std::sqrt(2.0 * std::numbers::ln2);
  const int c = grid_center(n);

  for (int i = 0; i < n; ++i) {
    const double x = (i - c) * ap.delta;
    for (int j = 0; j < n; ++j) {
      const double y = (j - c) * ap.delta;
      const double rho_sq = x * x + y * y;
      if (rho_sq > na * na) continue;

      ap.mask(i, j) = 1;
      const double kz = std::sqrt(1.0 - rho_sq);
      ap.kx(i, j) = x;
      ap.ky(i, j) = y;
      ap.kz(i, j) = kz;

      const double g = 1.0 + kz;
      ap.E[static_cast<size_t>(Channel::XX)](i, j) = 1.0 - x * x / g;
      ap.E[static_cast<size_t>(Channel::XY)](i, j) = -x * y / g;
      ap.E[static_cast<size_t>(Channel::XZ)](i, j) = -x;
      ap.E[static_cast<size_t>(Channel::YX)](i, j) = -y * x / g;
      ap.E[static_cast<size_t>(Channel::YY)](i, j) = 1.0 - y * y / g;
      ap.E[static_cast<size_t>(Channel::YZ)](i, j) = -y;

      switch (amplitude.kind) {
        case AmplitudeSpec::Kind::Uniform:
          ap.amplitude(i, j) = 1.0;
          break;
        case AmplitudeSpec::Kind::TruncatedGaussian:
          ap.amplitude(i, j) = std::exp(-rho_sq / (2.0 * sigma * sigma));
          break;
        case AmplitudeSpec::Kind::Custom:
          ap.amplitude(i, j) = amplitude.custom(i, j);
          break;
      }
    }
  }
  return ap;
}

RealImage defocus_diversity(const ApertureModel& ap, double z_um) {
  RealImage phi(ap.n);
  const double k0 = 2.0 * std::numbers::pi / ap.wavelength;
  for (int i = 0; i < ap.n; ++i)
    for (int j = 0; j < ap.n; ++j)
      if (ap.on_mask(i, j)) phi(i, j) = k0 * z_um * ap.kz(i, j);
  return phi;
}

std::vector<RealImage> defocus_stack(const ApertureModel& ap, int m, double step_dof) {
  if (m < 1) throw std::invalid_argument("defocus_stack: m must be >= 1");
  std::vector<RealImage> stack;
  stack.reserve(static_cast<size_t>(m));
  const double dof = ap.depth_of_focus();
  for (int d = 0; d < m; ++d) {
    const double z = (d - 0.5 * (m - 1)) * step_dof * dof;
    stack.push_back(defocus_diversity(ap, z));
  }
  return stack;
}

SixChannelField embed_pupil(const ApertureModel& ap, const ComplexImage& pupil) {
  if (pupil.n() != ap.n) throw std::invalid_argument("embed_pupil: grid mismatch");
  SixChannelField x(ap.n);
  for (size_t c = 0; c < 6; ++c) {
    const RealImage& e = ap.E[c];
    ComplexImage& xc = x.channel(c);
    for (size_t i = 0; i < xc.size(); ++i) xc[i] = e[i] * pupil[i];
  }
  return x;
}

}  // namespace vecpr
