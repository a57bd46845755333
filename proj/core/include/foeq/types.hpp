// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace foeq {

using cplx = std::complex<double>;

/// Runtime failure in signal processing or data handling (bad files,
/// inconsistent shapes, degenerate inputs). Argument/precondition
/// violations throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two complex baseband sample sequences (X/Y polarization) on a common
/// uniform time grid. All signal-path operations treat the block as
/// circular (periodic) in time.
struct DualPolWaveform {
  std::vector<cplx> x;
  std::vector<cplx> y;
  double sample_rate_hz = 0.0;

  std::size_t size() const { return x.size(); }
};

inline void check_waveform(const DualPolWaveform& w, const char* what) {
  if (w.x.empty() || w.x.size() != w.y.size())
    throw std::invalid_argument(std::string(what) +
                                ": polarizations must be nonempty and equal length");
  if (!(w.sample_rate_hz > 0.0))
    throw std::invalid_argument(std::string(what) + ": sample_rate_hz must be > 0");
}

}  // namespace foeq
