#pragma once

#include <cstddef>
#include <vector>

namespace ruleplay {

struct ConjunctionConfig {
  double alpha = 0.95;   // noise threshold, must lie in (0.5, 1]
  double lambda = 1.0;   // quadratic constraint penalty strength
};

// Gradient with respect to (w_1..w_n, beta).
struct ParamGrad {
  std::vector<double> w;
  double beta = 0.0;

  explicit ParamGrad(std::size_t n = 0) : w(n, 0.0) {}
  void add_scaled(const ParamGrad& g, double s);
  void scale(double s);
};

// Weighted Lukasiewicz conjunction: f(x) = clamp(beta - sum w_k (1 - x_k)).
// Weights and bias stay nonnegative via projection after every update.
class ConjunctionNeuron {
 public:
  explicit ConjunctionNeuron(std::size_t n_inputs, ConjunctionConfig config = {});

  std::size_t n_inputs() const { return w_.size(); }
  double beta() const { return beta_; }
  const std::vector<double>& weights() const { return w_; }
  const ConjunctionConfig& config() const { return config_; }
  void set_parameters(std::vector<double> w, double beta);

  // Unclamped affine value beta - sum w_k (1 - x_k).
  double affine(const std::vector<double>& x) const;
  // Clamped output in [0, 1].
  double forward(const std::vector<double>& x) const;

  // Analytic gradients of forward, scaled by upstream. Subgradient 0 when
  // the affine value sits at or beyond a clamp boundary.
  std::vector<double> input_grad(const std::vector<double>& x,
                                 double upstream = 1.0) const;
  ParamGrad param_grad(const std::vector<double>& x,
                       double upstream = 1.0) const;

  // Hinge residuals of the truth-table constraints on the clamped forward,
  // ordered [all-high, single-low per input, all-low]; all zero iff the
  // neuron behaves as a conjunction at noise threshold alpha.
  std::vector<double> constraint_residuals() const;
  double max_constraint_residual() const;

  // Gradient of lambda * sum of squared hinge violations, evaluated on the
  // unclamped corner values so saturated corners still push parameters
  // back. The violation zero set matches constraint_residuals exactly.
  ParamGrad penalty_grad() const;

  // One step of task gradient + constraint penalty, then projection of
  // weights and bias onto the nonnegative orthant.
  void update(const ParamGrad& task_grad, double lr);

 private:
  ConjunctionConfig config_;
  std::vector<double> w_;
  double beta_;
};

}  // namespace ruleplay
