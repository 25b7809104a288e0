#include "vecpr/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

namespace vecpr {

namespace {

// One forward and one backward plan per grid size, created lazily.
// Plans use FFTW_UNALIGNED so they can execute on any buffer via
// fftw_execute_dft, which is thread-safe; creation is serialized.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;
std::unordered_map<int, PlanPair>& plan_cache() {
  static std::unordered_map<int, PlanPair> cache;
  return cache;
}

PlanPair plans_for(int n) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<cplx> a(static_cast<size_t>(n) * n), b(a.size());
  auto* pa = reinterpret_cast<fftw_complex*>(a.data());
  auto* pb = reinterpret_cast<fftw_complex*>(b.data());
  PlanPair p;
  p.fwd = fftw_plan_dft_2d(n, n, pa, pb, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_2d(n, n, pa, pb, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(n, p);
  return p;
}

// work[j'] = x[(j' + c) mod n] on both axes; the inverse permutation on
// the output recenters the zero frequency at (c, c).
ComplexImage shifted_transform(const ComplexImage& img, bool forward) {
  const int n = img.n();
  const int c = grid_center(n);
  PlanPair plans = plans_for(n);

  std::vector<cplx> in(img.size()), out(img.size());
  for (int i = 0; i < n; ++i) {
    const int si = (i + c) % n;
    for (int j = 0; j < n; ++j) in[static_cast<size_t>(i) * n + j] = img(si, (j + c) % n);
  }

  fftw_execute_dft(forward ? plans.fwd : plans.bwd,
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));

  const double scale = 1.0 / n;
  ComplexImage result(n);
  for (int k = 0; k < n; ++k) {
    const int sk = (k - c + n) % n;
    for (int l = 0; l < n; ++l)
      result(k, l) = out[static_cast<size_t>(sk) * n + (l - c + n) % n] * scale;
  }
  return result;
}

}  // namespace

ComplexImage fft2_centered(const ComplexImage& img) { return shifted_transform(img, true); }

ComplexImage ifft2_centered(const ComplexImage& img) { return shifted_transform(img, false); }

}  // namespace vecpr
