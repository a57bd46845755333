// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "foeq/types.hpp"

namespace foeq::channel {

struct FiberParams {
  double alpha_db_per_km = 0.2;       // power loss
  double beta2_ps2_per_km = -21.67;   // group-velocity dispersion
  double gamma_per_w_km = 1.3;        // Kerr coefficient
};

struct LinkConfig {
  FiberParams params;
  double span_length_km = 100.0;
  int n_spans = 10;
  int fwd_steps_per_span = 50;

  double total_length_km() const { return span_length_km * n_spans; }
};

/// dB/km -> nepers/km for the power attenuation coefficient.
double alpha_nepers_per_km(double alpha_db_per_km);

/// Loss-weighted length of [z_a, z_b]: integral of e^{-αz} dz with α in
/// linear units, = (e^{-α z_a} - e^{-α z_b})/α; the α=0 limit is z_b - z_a.
double effective_length_km(double alpha_db_per_km, double z_a_km, double z_b_km);

/// Unit-modulus frequency response of the dispersion operator over dz_km:
/// H[k] = exp(sign * j * (β2/2) * ω_k^2 * dz) on the length-n FFT grid of
/// sample_rate_hz. sign = +1 propagates, -1 inverts. dz_km >= 0.
std::vector<cplx> dispersion_response(const FiberParams& params, double dz_km,
                                      std::size_t n, double sample_rate_hz, int sign);

/// Per-sample Kerr phase rotation with the 2/3 cross-polarization term:
/// x' = x * exp(sign * j * γ * l_eff * (|x|^2 + (2/3)|y|^2)), and
/// symmetrically for y. Magnitudes are preserved exactly.
void nonlinear_phase_inplace(DualPolWaveform& w, double gamma_per_w_km, double l_eff_km,
                             int sign);

DualPolWaveform nonlinear_phase_step(DualPolWaveform w, double gamma_per_w_km,
                                     double l_eff_km, int sign);

/// Symmetric split-step solution of the coupled propagation equation over
/// the whole link: per span, fwd_steps_per_span symmetric steps
/// (half-dispersion, loss-weighted nonlinear rotation, half-dispersion,
/// per-step field loss e^{-α dz/2}), then an ideal noiseless amplifier
/// restoring the span loss exactly.
DualPolWaveform ssfm_forward(const DualPolWaveform& w, const LinkConfig& link);

}  // namespace foeq::channel
