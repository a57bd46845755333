// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "foeq/dataset.hpp"
#include "foeq/fiber.hpp"
#include "foeq/types.hpp"

namespace foeq::eq {

enum class StepDistribution { Uniform, Logarithmic };

struct DbpConfig {
  int steps_per_span = 1;                                    // M
  StepDistribution distribution = StepDistribution::Uniform;
  double xi = 1.0;                                           // nonlinear scaling factor
};

/// Chromatic dispersion compensation: one inverse dispersion response over
/// the full link length applied to both polarizations.
DualPolWaveform cdc(const DualPolWaveform& w, const channel::LinkConfig& link);

/// Digital backpropagation. Spans are processed in reverse; per span the
/// amplifier gain is removed, then each of the M segments (in reverse
/// spatial order) applies inverse dispersion, inverse loss and an inverse
/// nonlinear rotation of -γ·ξ·L_eff per segment, loss-referenced so the
/// rotation matches the forward cumulative nonlinear phase. Uniform
/// segments split the span evenly; logarithmic segments have equal
/// effective length.
DualPolWaveform dbp(const DualPolWaveform& w, const channel::LinkConfig& link,
                    const DbpConfig& cfg);

/// Segment boundaries (km, ascending, size M+1, from 0 to span length) for
/// one span under the given distribution.
std::vector<double> segment_bounds_km(const channel::LinkConfig& link,
                                      const DbpConfig& cfg);

struct DbpGrid {
  int steps_per_span = 1;
  std::vector<double> xi;
  std::vector<StepDistribution> distributions;
};

/// Exhaustive grid search maximizing the mean per-example unit-normalized
/// NMSE (in dB) over the validation set. Ties break toward smaller xi, then
/// toward the uniform distribution.
DbpConfig optimize_dbp(const channel::LinkConfig& link, const DbpGrid& grid,
                       std::span<const train::Example> validation, int threads = 1);

}  // namespace foeq::eq
