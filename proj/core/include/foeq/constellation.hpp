// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "foeq/types.hpp"

namespace foeq::dsp {

/// Unit-average-energy symbol alphabet with per-point bit labels.
struct Constellation {
  int order = 0;
  std::vector<cplx> points;
  std::vector<int> bit_labels;  // bit_labels[i] is the label of points[i]
};

/// Square QAM, Gray-labeled independently per axis (high label bits on the
/// in-phase axis), scaled to unit mean symbol energy. Supported orders:
/// 4, 16, 64.
Constellation gray_qam(int order);

}  // namespace foeq::dsp
