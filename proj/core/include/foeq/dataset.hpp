// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "foeq/fiber.hpp"
#include "foeq/types.hpp"

namespace foeq::train {

/// Transmit chain parameters for one simulated block.
struct TxConfig {
  int constellation_order = 16;
  double symbol_rate_baud = 32e9;
  double roll_off = 0.1;
  int sps = 16;            // simulation oversampling
  int n_symbols = 256;     // symbols per example block
  int rrc_span_symbols = 32;
};

/// One input/target pair at the receiver rate. The input keeps its physical
/// launch-power scale; the target is normalized to unit total average power.
struct Example {
  DualPolWaveform input;
  DualPolWaveform target;
  double p_dbm = 0.0;
};

struct DatasetMeta {
  channel::LinkConfig link;
  TxConfig tx;
  int rx_sps = 2;
  std::uint64_t seed = 0;
};

struct Dataset {
  std::vector<Example> examples;
  DatasetMeta meta;
};

/// Seeded end-to-end generation: draw QAM symbols, RRC pulse-shape at
/// tx.sps, set a launch power drawn uniformly from powers_dbm, propagate
/// through the link, matched-filter and decimate to rx_sps. The target is
/// the clean transmitted block through the same receiver front end,
/// unit-power normalized. Bitwise reproducible for a given seed under any
/// thread count.
Dataset generate_dataset(const channel::LinkConfig& link, const TxConfig& tx, int rx_sps,
                         std::span<const double> powers_dbm, int n_examples,
                         std::uint64_t seed, int threads = 1);

/// Binary container, magic "FOEQDS1", little-endian 64-bit header fields and
/// IEEE-754 doubles, then per example p_dbm plus four interleaved re/im
/// arrays (input x/y, target x/y).
void save_dataset(const Dataset& ds, const std::filesystem::path& path);
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace foeq::train
