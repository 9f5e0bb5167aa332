#include "snlb/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace snlb {

void fft_radix2(std::span<cplx> data, int sign) {
    const std::size_t n = data.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_radix2: size must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = data[i + k];
                cplx v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

void fft_nd(std::span<cplx> data, const std::array<std::size_t, 3>& ext, int sign) {
    const std::size_t n1 = ext[0], n2 = ext[1], n3 = ext[2];
    if (data.size() != n1 * n2 * n3) throw std::invalid_argument("fft_nd: size mismatch");

    // axis 1: contiguous rows
    for (std::size_t row = 0; row < n2 * n3; ++row)
        fft_radix2(data.subspan(row * n1, n1), sign);

    std::vector<cplx> scratch;
    if (n2 > 1) {
        scratch.resize(n2);
        for (std::size_t i3 = 0; i3 < n3; ++i3)
            for (std::size_t i1 = 0; i1 < n1; ++i1) {
                const std::size_t base = i3 * n2 * n1 + i1;
                for (std::size_t i2 = 0; i2 < n2; ++i2) scratch[i2] = data[base + i2 * n1];
                fft_radix2(scratch, sign);
                for (std::size_t i2 = 0; i2 < n2; ++i2) data[base + i2 * n1] = scratch[i2];
            }
    }
    if (n3 > 1) {
        scratch.resize(n3);
        const std::size_t stride = n1 * n2;
        for (std::size_t i2 = 0; i2 < n2; ++i2)
            for (std::size_t i1 = 0; i1 < n1; ++i1) {
                const std::size_t base = i2 * n1 + i1;
                for (std::size_t i3 = 0; i3 < n3; ++i3) scratch[i3] = data[base + i3 * stride];
                fft_radix2(scratch, sign);
                for (std::size_t i3 = 0; i3 < n3; ++i3) data[base + i3 * stride] = scratch[i3];
            }
    }
}

}  // namespace snlb
