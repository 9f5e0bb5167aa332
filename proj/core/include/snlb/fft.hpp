#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace snlb {

using cplx = std::complex<double>;

constexpr bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 FFT. data.size() must be a power of two.
/// sign = -1 applies e^{-2*pi*i*k*x/N} (forward), sign = +1 the conjugate
/// kernel. Neither direction is scaled; the caller owns normalization.
void fft_radix2(std::span<cplx> data, int sign);

/// Separable transform of a row-major array with extents {n1, n2, n3},
/// axis 1 contiguous (flat index = (i3*n2 + i2)*n1 + i1). Unused trailing
/// extents must be 1; used extents must be powers of two.
void fft_nd(std::span<cplx> data, const std::array<std::size_t, 3>& extents, int sign);

}  // namespace snlb
