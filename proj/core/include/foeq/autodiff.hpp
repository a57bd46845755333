// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "foeq/cnn.hpp"
#include "foeq/dataset.hpp"

namespace foeq::train {

/// Per-unique-kernel complex gradients of the real loss, in the convention
/// grad = dL/d(Re w) + j dL/d(Im w) (the steepest-ascent direction; twice
/// the Wirtinger conjugate derivative). Shared ids accumulate contributions
/// from every plan position and both polarizations.
struct GradientSet {
  std::vector<std::vector<cplx>> g;

  double max_abs() const;
  void scale(double s);
  void add(const GradientSet& other);
};

struct LossGrad {
  double loss = 0.0;
  GradientSet grads;
};

/// Training objective for one example: unit-power-normalize the model
/// output, then NMSE against the target. Differentiation goes through the
/// normalization.
double example_loss(const eq::CnnModel& model, const Example& ex);

/// Mean example_loss over the batch and its gradient by reverse traversal
/// of the plan (adjoint convolutions at linear positions, the
/// non-holomorphic activation adjoint with both Wirtinger components and
/// the 2/3 cross-polarization terms between them).
LossGrad loss_and_gradient(const eq::CnnModel& model, std::span<const Example> batch,
                           int threads = 1);

/// Central-finite-difference check of loss_and_gradient on one example:
/// perturbs every real and imaginary kernel coordinate by ±eps and returns
/// the worst relative error, denominator max(|analytic|, |numeric|, 1e-12).
double grad_check(const eq::CnnModel& model, const Example& ex, double eps);

}  // namespace foeq::train
