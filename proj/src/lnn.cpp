#include "ruleplay/lnn.hpp"

#include <algorithm>

#include "ruleplay/entities.hpp"

namespace ruleplay {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

void ParamGrad::add_scaled(const ParamGrad& g, double s) {
  if (g.w.size() != w.size()) throw InputError("grad: dimension mismatch");
  for (std::size_t k = 0; k < w.size(); ++k) w[k] += s * g.w[k];
  beta += s * g.beta;
}

void ParamGrad::scale(double s) {
  for (auto& v : w) v *= s;
  beta *= s;
}

ConjunctionNeuron::ConjunctionNeuron(std::size_t n_inputs,
                                     ConjunctionConfig config)
    : config_(config), w_(n_inputs, 1.0), beta_(1.0) {
  if (n_inputs == 0) throw InputError("neuron: n_inputs must be positive");
  if (!(config_.alpha > 0.5 && config_.alpha <= 1.0))
    throw InputError("neuron: alpha must lie in (0.5, 1]");
  if (config_.lambda < 0.0) throw InputError("neuron: lambda must be >= 0");
}

void ConjunctionNeuron::set_parameters(std::vector<double> w, double beta) {
  if (w.size() != w_.size()) throw InputError("neuron: weight count mismatch");
  for (double v : w)
    if (v < 0.0) throw InputError("neuron: weights must be nonnegative");
  if (beta < 0.0) throw InputError("neuron: beta must be nonnegative");
  w_ = std::move(w);
  beta_ = beta;
}

double ConjunctionNeuron::affine(const std::vector<double>& x) const {
  if (x.size() != w_.size()) throw InputError("neuron: input size mismatch");
  double v = beta_;
  for (std::size_t k = 0; k < w_.size(); ++k) v -= w_[k] * (1.0 - x[k]);
  return v;
}

double ConjunctionNeuron::forward(const std::vector<double>& x) const {
  return clamp01(affine(x));
}

std::vector<double> ConjunctionNeuron::input_grad(const std::vector<double>& x,
                                                  double upstream) const {
  double a = affine(x);
  std::vector<double> g(w_.size(), 0.0);
  if (a <= 0.0 || a >= 1.0) return g;
  for (std::size_t k = 0; k < w_.size(); ++k) g[k] = upstream * w_[k];
  return g;
}

ParamGrad ConjunctionNeuron::param_grad(const std::vector<double>& x,
                                        double upstream) const {
  double a = affine(x);
  ParamGrad g(w_.size());
  if (a <= 0.0 || a >= 1.0) return g;
  for (std::size_t k = 0; k < w_.size(); ++k)
    g.w[k] = -upstream * (1.0 - x[k]);
  g.beta = upstream;
  return g;
}

std::vector<double> ConjunctionNeuron::constraint_residuals() const {
  const double alpha = config_.alpha;
  const std::size_t n = w_.size();
  std::vector<double> res;
  res.reserve(n + 2);

  std::vector<double> x(n, alpha);
  res.push_back(std::max(0.0, alpha - forward(x)));

  for (std::size_t k = 0; k < n; ++k) {
    std::fill(x.begin(), x.end(), 1.0);
    x[k] = 1.0 - alpha;
    res.push_back(std::max(0.0, forward(x) - (1.0 - alpha)));
  }

  std::fill(x.begin(), x.end(), 1.0 - alpha);
  res.push_back(std::max(0.0, forward(x) - (1.0 - alpha)));
  return res;
}

double ConjunctionNeuron::max_constraint_residual() const {
  auto res = constraint_residuals();
  return *std::max_element(res.begin(), res.end());
}

ParamGrad ConjunctionNeuron::penalty_grad() const {
  const double alpha = config_.alpha;
  const double lam = config_.lambda;
  const std::size_t n = w_.size();
  double wsum = 0.0;
  for (double wk : w_) wsum += wk;

  ParamGrad g(n);
  // All-high corner: want beta - (1-alpha)*W >= alpha.
  double v = alpha - (beta_ - (1.0 - alpha) * wsum);
  if (v > 0.0) {
    g.beta += lam * 2.0 * v * -1.0;
    for (std::size_t k = 0; k < n; ++k) g.w[k] += lam * 2.0 * v * (1.0 - alpha);
  }
  // Single-low corners: want beta - alpha*w_k <= 1 - alpha.
  for (std::size_t k = 0; k < n; ++k) {
    v = (beta_ - alpha * w_[k]) - (1.0 - alpha);
    if (v > 0.0) {
      g.beta += lam * 2.0 * v;
      g.w[k] += lam * 2.0 * v * -alpha;
    }
  }
  // All-low corner: want beta - alpha*W <= 1 - alpha.
  v = (beta_ - alpha * wsum) - (1.0 - alpha);
  if (v > 0.0) {
    g.beta += lam * 2.0 * v;
    for (std::size_t k = 0; k < n; ++k) g.w[k] += lam * 2.0 * v * -alpha;
  }
  return g;
}

void ConjunctionNeuron::update(const ParamGrad& task_grad, double lr) {
  if (lr <= 0.0) throw InputError("neuron: learning rate must be positive");
  if (task_grad.w.size() != w_.size())
    throw InputError("neuron: gradient size mismatch");
  ParamGrad g = penalty_grad();
  g.add_scaled(task_grad, 1.0);
  for (std::size_t k = 0; k < w_.size(); ++k)
    w_[k] = std::max(0.0, w_[k] - lr * g.w[k]);
  beta_ = std::max(0.0, beta_ - lr * g.beta);
}

}  // namespace ruleplay
