#pragma once

#include <array>
#include <vector>

#include "vecpr/image.hpp"

namespace vecpr {

/// Polarisation channel indices. XY is the y component of the field
/// produced by unit x-polarised input, and so on.
enum class Channel { XX, XY, XZ, YX, YY, YZ };

inline constexpr std::array<Channel, 6> kChannels = {Channel::XX, Channel::XY, Channel::XZ,
                                                     Channel::YX, Channel::YY, Channel::YZ};

inline constexpr const char* channel_name(Channel c) {
  switch (c) {
    case Channel::XX: return "XX";
    case Channel::XY: return "XY";
    case Channel::XZ: return "XZ";
    case Channel::YX: return "YX";
    case Channel::YY: return "YY";
    case Channel::YZ: return "YZ";
  }
  return "??";
}

/// One element of the space H = (C^{n x n})^6: six complex images, one
/// per polarisation channel, all on the same grid.
class SixChannelField {
 public:
  SixChannelField() = default;
  explicit SixChannelField(int n) { ch_.fill(ComplexImage(n)); }

  int n() const { return ch_[0].n(); }

  ComplexImage& operator[](Channel c) { return ch_[static_cast<size_t>(c)]; }
  const ComplexImage& operator[](Channel c) const { return ch_[static_cast<size_t>(c)]; }

  ComplexImage& channel(size_t i) { return ch_[i]; }
  const ComplexImage& channel(size_t i) const { return ch_[i]; }

 private:
  std::array<ComplexImage, 6> ch_;
};

/// Element of H^p: the state of a lifted projection algorithm.
/// p is m for the (A, B) models and m + 1 for the (D, B+) models.
struct ProductIterate {
  std::vector<SixChannelField> blocks;

  ProductIterate() = default;
  ProductIterate(int p, int n) : blocks(static_cast<size_t>(p), SixChannelField(n)) {}
  explicit ProductIterate(SixChannelField x) { blocks.push_back(std::move(x)); }

  int p() const { return static_cast<int>(blocks.size()); }
  int n() const { return blocks.empty() ? 0 : blocks[0].n(); }
};

double norm_sq(const SixChannelField& x);
double frob_norm(const SixChannelField& x);
double norm_sq(const ProductIterate& u);
double frob_norm(const ProductIterate& u);
bool all_finite(const SixChannelField& x);
bool all_finite(const ProductIterate& u);

/// Real part of the Hilbert-space inner product <x, y>.
double inner_re(const SixChannelField& x, const SixChannelField& y);
double inner_re(const ProductIterate& u, const ProductIterate& v);

/// Arithmetic mean of the blocks of u (p >= 1).
SixChannelField diagonal_average(const ProductIterate& u);

/// [x]_p: p identical copies of x stacked into a product iterate.
ProductIterate duplicate(const SixChannelField& x, int p);

/// True when all blocks agree pairwise within tol in Frobenius norm.
bool is_diagonal(const ProductIterate& u, double tol);

// Vector-space operations used by the fixed-point operator algebra.
SixChannelField& add_scaled(SixChannelField& x, const SixChannelField& y, double a);
SixChannelField lincomb(double a, const SixChannelField& x, double b, const SixChannelField& y);
ProductIterate& add_scaled(ProductIterate& u, const ProductIterate& v, double a);
ProductIterate lincomb(double a, const ProductIterate& u, double b, const ProductIterate& v);
ProductIterate& scale(ProductIterate& u, double a);

double distance(const ProductIterate& u, const ProductIterate& v);
double distance(const SixChannelField& x, const SixChannelField& y);

}  // namespace vecpr
