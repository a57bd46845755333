// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "foeq/types.hpp"

namespace foeq::dsp {

/// dB ceiling reported for an exact (or numerically exact) match.
inline constexpr double kNmseDbCap = 100.0;

struct Nmse {
  double linear = 0.0;
  double db = 0.0;  // -10*log10(linear), capped at kNmseDbCap; larger is better
};

/// (|x-x̂|^2 + |y-ŷ|^2) summed over samples, divided by the reference
/// energy |x|^2 + |y|^2. Scale- and phase-sensitive; no alignment of any
/// kind is applied.
Nmse nmse(const DualPolWaveform& ref, const DualPolWaveform& est);

/// nmse after rescaling the estimate to unit total average power. The
/// standard scoring pipeline for equalizer outputs against unit-power
/// targets; the scale is taken from the estimate alone.
Nmse nmse_unit_normalized(const DualPolWaveform& ref, const DualPolWaveform& est);

/// Least-squares complex-scalar alignment of est onto ref before nmse.
/// Diagnostics only; never part of reported scores.
Nmse nmse_ls_aligned(const DualPolWaveform& ref, const DualPolWaveform& est);

}  // namespace foeq::dsp
