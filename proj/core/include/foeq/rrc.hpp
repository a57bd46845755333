// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace foeq::dsp {

/// Root-raised-cosine FIR, taps sampled at sps points per symbol over
/// span_symbols symbols (odd count, symmetric), normalized to unit energy.
struct RrcFilter {
  double roll_off = 0.0;
  int sps = 0;
  int span_symbols = 0;
  std::vector<double> taps;
};

/// Closed-form RRC impulse response at time t (in symbol periods), before
/// any normalization. Handles the t = 0 and |t| = 1/(4β) removable
/// singularities.
double rrc_prototype_tap(double roll_off, double t_symbols);

/// roll_off in (0, 1], sps >= 2, span_symbols >= 8.
RrcFilter design_rrc(double roll_off, int sps, int span_symbols);

}  // namespace foeq::dsp
