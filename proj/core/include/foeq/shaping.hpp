// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "foeq/rrc.hpp"
#include "foeq/types.hpp"

namespace foeq::dsp {

/// One block of unit-average-power symbols for both polarizations.
struct SymbolFrame {
  std::vector<cplx> sx;
  std::vector<cplx> sy;
  double symbol_rate_baud = 0.0;

  std::size_t n_symbols() const { return sx.size(); }
};

/// Zero-insertion upsampling by filt.sps followed by circular convolution
/// with the RRC taps. Output length = n_symbols * sps, sample rate =
/// symbol_rate * sps; symbol k peaks at sample k*sps.
DualPolWaveform pulse_shape(const SymbolFrame& frame, const RrcFilter& filt);

/// Circular convolution with the (symmetric) RRC taps, then keep every
/// (filt.sps / out_sps)-th sample starting at index 0. filt.sps must be an
/// integer multiple of out_sps and the input must be on filt's grid.
DualPolWaveform matched_filter_decimate(const DualPolWaveform& w, const RrcFilter& filt,
                                        int out_sps);

/// mean_n(|x_n|^2 + |y_n|^2), the total average power in watts.
double total_mean_power(const DualPolWaveform& w);

/// Rescales so the total average power equals 10^((p_dbm - 30)/10) watts.
DualPolWaveform set_launch_power(const DualPolWaveform& w, double p_dbm);

/// Rescales so the total average power equals 1.
DualPolWaveform normalize_unit_power(const DualPolWaveform& w);

}  // namespace foeq::dsp
