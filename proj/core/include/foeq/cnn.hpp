// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "foeq/equalizer.hpp"
#include "foeq/fiber.hpp"
#include "foeq/plan.hpp"
#include "foeq/types.hpp"

namespace foeq::eq {

/// Complex convolutional equalizer: one odd-length complex FIR kernel per
/// unique plan id, applied identically to both polarizations, with the
/// parameter-free phase activation between linear positions. conjugate_io
/// models the sign flip between the activation's +j rotation and channel
/// inversion: the input is conjugated before the plan walk and the output
/// conjugated back.
struct CnnModel {
  UnrolledPlan plan;
  int taps = 0;
  bool conjugate_io = true;
  std::vector<std::vector<cplx>> kernels;  // indexed by plan unique id
};

/// x'_t = x_t * exp(j(|x_t|^2 + (2/3)|y_t|^2)), y' symmetric. Per-sample
/// magnitudes preserved exactly; no trainable parameters.
void activation_inplace(std::span<cplx> x, std::span<cplx> y);
std::pair<std::vector<cplx>, std::vector<cplx>> activation(std::span<const cplx> x,
                                                           std::span<const cplx> y);

/// Walks the plan: circular convolution with the position's kernel at
/// linear positions (same kernel on both polarizations), the phase
/// activation between them.
DualPolWaveform cnn_forward(const CnnModel& model, const DualPolWaveform& w);

/// Dispersion memory of the longest merged segment, as an odd tap count
/// with the activation scaling taken into account: smallest odd integer
/// >= 2 * |β2| * dz * 2π * occupied_bw * fs + 1.
int default_taps(const channel::LinkConfig& link, const DbpConfig& cfg,
                 double sample_rate_hz, double occupied_bandwidth_hz);

struct InitDiagnostics {
  double span_scalar_product = 0.0;        // product of folded scalar gains per span
  std::vector<double> kept_energy;         // truncation energy fraction per kernel
};

/// Kernels initialized so the model reproduces dbp(link, cfg) exactly up to
/// kernel truncation: each unique kernel composes the inverse dispersion of
/// the segments it merges, the folded loss/gain scalars, an undo of the
/// previous activation scale, and the scale √(γ·ξ·L_eff) feeding the next
/// activation so the fixed activation applies the segment's nonlinear
/// rotation. Errors if γ·ξ == 0 (degenerate zero scale; use init_cdc_model)
/// or if `taps` keeps < 99% of a kernel's energy. taps == 0 picks
/// default_taps.
CnnModel init_from_dbp(const channel::LinkConfig& link, const DbpConfig& cfg, int taps,
                       double sample_rate_hz, bool shared,
                       InitDiagnostics* diag = nullptr);

/// Single-linear-kernel model equivalent to cdc (the purely linear path;
/// the γ = 0 companion of init_from_dbp). taps == 0 sizes the kernel for
/// the full link memory.
CnnModel init_cdc_model(const channel::LinkConfig& link, int taps, double sample_rate_hz,
                        double* kept_energy = nullptr);

/// Real trainable degrees of freedom: unique kernels × taps × 2.
std::int64_t param_count(const CnnModel& model);

}  // namespace foeq::eq
