// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "foeq/types.hpp"

namespace foeq::dsp {

enum class ConvPath { Auto, Direct, Fft };

/// Circular convolution with an odd-length kernel whose center tap sits at
/// lag zero (zero group delay): out[n] = sum_d k[c+d] * s[(n-d) mod N].
/// Kernel length must be odd and <= signal length. The Direct and Fft paths
/// agree to ~1e-10 relative; Auto picks by size.
std::vector<cplx> circ_conv(std::span<const cplx> signal, std::span<const cplx> kernel,
                            ConvPath path = ConvPath::Auto);

/// Centered kernel for circ_conv from its frequency response: the inverse
/// DFT of `response`, cyclically re-centered and truncated to `taps` lags
/// around zero. `kept_energy` (optional) receives the fraction of the full
/// response energy inside the window.
std::vector<cplx> centered_kernel_from_response(std::span<const cplx> response, int taps,
                                                double* kept_energy = nullptr);

/// Circular cross-correlation evaluated on the centered lag window:
/// out[c+d] = sum_n a[n] * conj(b[(n-d) mod N]) for d in [-c, c], taps odd.
std::vector<cplx> centered_circ_xcorr(std::span<const cplx> a, std::span<const cplx> b,
                                      int taps);

/// conj(k[-d]) reordering; the kernel of the adjoint of circ_conv(., k).
std::vector<cplx> conj_reversed(std::span<const cplx> kernel);

}  // namespace foeq::dsp
