// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "foeq/types.hpp"

namespace foeq::dsp {

/// Forward DFT, X[k] = sum_n x[n] e^{-j 2πkn/N}. Any length >= 1.
std::vector<cplx> fft(std::span<const cplx> x);

/// Inverse DFT with 1/N normalization, so ifft(fft(x)) == x.
std::vector<cplx> ifft(std::span<const cplx> x);

/// FFT-bin frequencies in Hz for a length-n transform at the given rate,
/// in natural FFT order (index k maps to k for k <= n/2, else k - n).
std::vector<double> fft_frequencies(std::size_t n, double sample_rate_hz);

}  // namespace foeq::dsp
