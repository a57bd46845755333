// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "foeq/cnn.hpp"

namespace foeq::eq {

/// JSON document {format_version, n_spans, m_steps, shared, taps,
/// conjugate_io, kernels: {name: {re: [...], im: [...]}}}. Numeric arrays
/// use shortest round-trip decimal, so save/load is value-exact.
std::string model_to_json(const CnnModel& model);
CnnModel model_from_json(const std::string& text);

void save_model(const CnnModel& model, const std::filesystem::path& path);
CnnModel load_model(const std::filesystem::path& path);

}  // namespace foeq::eq
