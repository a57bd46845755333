// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace foeq::eq {

enum class LayerKind { Linear, Activation };

struct PlanPosition {
  LayerKind kind = LayerKind::Linear;
  std::uint32_t unique_id = 0;  // index into unique_names; valid for Linear only
};

/// The unrolled layer sequence Linear, Activation, Linear, ..., Linear.
/// Activations are implicit between consecutive linear positions, so the
/// strict alternation holds by construction. unique ids tie repeated
/// per-span linear positions together (shared mode) or give every position
/// its own id (unshared mode).
struct UnrolledPlan {
  int n_spans = 0;  // 0 marks a degenerate single-linear plan
  int m_steps = 0;
  bool shared = true;
  std::vector<std::uint32_t> linear_ids;   // one entry per linear position
  std::vector<std::string> unique_names;   // size == number of unique kernels

  std::size_t n_linear() const { return linear_ids.size(); }
  std::size_t n_activations() const { return linear_ids.empty() ? 0 : linear_ids.size() - 1; }
  std::size_t n_unique() const { return unique_names.size(); }

  /// Explicit L, A, L, ..., L sequence view.
  std::vector<PlanPosition> positions() const;
};

/// Unrolled backward-propagation plan for n_spans spans and m_steps
/// segments per span: n_spans*m_steps + 1 linear positions with an
/// activation between each adjacent pair. Shared mode reuses
/// {first, interior_1..interior_{m-1}, bridge, last} across spans
/// (bridge only exists for n_spans >= 2); unshared mode ids are
/// pos_0..pos_{n*m}.
UnrolledPlan build_plan(int n_spans, int m_steps, bool shared);

/// One linear position, no activations (a purely linear equalizer in plan
/// form).
UnrolledPlan single_linear_plan(const std::string& name = "cdc");

}  // namespace foeq::eq
