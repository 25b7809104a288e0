#pragma once

#include "vecpr/image.hpp"

namespace vecpr {

/// Centered two-dimensional DFT with unitary 1/n scaling:
///   X[k] = (1/n) * sum_j x[j] exp(-2*pi*i*(j - c).(k - c)/n),  c = n/2.
/// Zero frequency sits at pixel (c, c) and the Frobenius norm is
/// preserved exactly up to floating round-off.
ComplexImage fft2_centered(const ComplexImage& img);

/// Exact inverse of fft2_centered (also unitary, also centered).
ComplexImage ifft2_centered(const ComplexImage& img);

}  // namespace vecpr
