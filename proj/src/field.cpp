#include "vecpr/field.hpp"

#include <stdexcept>

namespace vecpr {

double norm_sq(const SixChannelField& x) {
  double s = 0;
  for (size_t c = 0; c < 6; ++c) s += norm_sq(x.channel(c));
  return s;
}

double frob_norm(const SixChannelField& x) { return std::sqrt(norm_sq(x)); }

double norm_sq(const ProductIterate& u) {
  double s = 0;
  for (const auto& b : u.blocks) s += norm_sq(b);
  return s;
}

double frob_norm(const ProductIterate& u) { return std::sqrt(norm_sq(u)); }

bool all_finite(const SixChannelField& x) {
  for (size_t c = 0; c < 6; ++c)
    if (!all_finite(x.channel(c))) return false;
  return true;
}

bool all_finite(const ProductIterate& u) {
  for (const auto& b : u.blocks)
    if (!all_finite(b)) return false;
  return true;
}

double inner_re(const SixChannelField& x, const SixChannelField& y) {
  double s = 0;
  for (size_t c = 0; c < 6; ++c) {
    const ComplexImage& a = x.channel(c);
    const ComplexImage& b = y.channel(c);
    for (size_t i = 0; i < a.size(); ++i)
      s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  }
  return s;
}

double inner_re(const ProductIterate& u, const ProductIterate& v) {
  double s = 0;
  for (size_t d = 0; d < u.blocks.size(); ++d) s += inner_re(u.blocks[d], v.blocks[d]);
  return s;
}

SixChannelField diagonal_average(const ProductIterate& u) {
  if (u.blocks.empty()) throw std::invalid_argument("diagonal_average: empty iterate");
  SixChannelField mean = u.blocks[0];
  for (size_t d = 1; d < u.blocks.size(); ++d) add_scaled(mean, u.blocks[d], 1.0);
  const double inv = 1.0 / static_cast<double>(u.blocks.size());
  for (size_t c = 0; c < 6; ++c)
    for (cplx& v : mean.channel(c)) v *= inv;
  return mean;
}

ProductIterate duplicate(const SixChannelField& x, int p) {
  if (p < 1) throw std::invalid_argument("duplicate: p must be >= 1");
  ProductIterate u;
  u.blocks.assign(static_cast<size_t>(p), x);
  return u;
}

bool is_diagonal(const ProductIterate& u, double tol) {
  for (size_t d = 1; d < u.blocks.size(); ++d)
    if (distance(u.blocks[d], u.blocks[0]) > tol) return false;
  return true;
}

SixChannelField& add_scaled(SixChannelField& x, const SixChannelField& y, double a) {
  for (size_t c = 0; c < 6; ++c) {
    ComplexImage& xc = x.channel(c);
    const ComplexImage& yc = y.channel(c);
    for (size_t i = 0; i < xc.size(); ++i) xc[i] += a * yc[i];
  }
  return x;
}

SixChannelField lincomb(double a, const SixChannelField& x, double b, const SixChannelField& y) {
  SixChannelField r(x.n());
  for (size_t c = 0; c < 6; ++c) {
    ComplexImage& rc = r.channel(c);
    const ComplexImage& xc = x.channel(c);
    const ComplexImage& yc = y.channel(c);
    for (size_t i = 0; i < rc.size(); ++i) rc[i] = a * xc[i] + b * yc[i];
  }
  return r;
}

ProductIterate& add_scaled(ProductIterate& u, const ProductIterate& v, double a) {
  for (size_t d = 0; d < u.blocks.size(); ++d) add_scaled(u.blocks[d], v.blocks[d], a);
  return u;
}

ProductIterate lincomb(double a, const ProductIterate& u, double b, const ProductIterate& v) {
  if (u.p() != v.p()) throw std::invalid_argument("lincomb: block count mismatch");
  ProductIterate r = u;
  for (size_t d = 0; d < r.blocks.size(); ++d) r.blocks[d] = lincomb(a, u.blocks[d], b, v.blocks[d]);
  return r;
}

ProductIterate& scale(ProductIterate& u, double a) {
  for (auto& b : u.blocks)
    for (size_t c = 0; c < 6; ++c)
      for (cplx& v : b.channel(c)) v *= a;
  return u;
}

double distance(const SixChannelField& x, const SixChannelField& y) {
  double s = 0;
  for (size_t c = 0; c < 6; ++c) {
    const ComplexImage& a = x.channel(c);
    const ComplexImage& b = y.channel(c);
    for (size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  }
  return std::sqrt(s);
}

double distance(const ProductIterate& u, const ProductIterate& v) {
  double s = 0;
  for (size_t d = 0; d < u.blocks.size(); ++d) {
    const double dd = distance(u.blocks[d], v.blocks[d]);
    s += dd * dd;
  }
  return std::sqrt(s);
}

}  // namespace vecpr
