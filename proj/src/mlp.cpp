#include "samu/mlp.hpp"

#include <cmath>
#include <stdexcept>

#include "samu/rng.hpp"

namespace samu {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

Perceptron::Perceptron(int n_in, int n_hidden, std::uint64_t seed, double learning_rate,
                       bool use_bias)
    : n_in_(n_in), n_hidden_(n_hidden), rate_(learning_rate), bias_(use_bias) {
  if (n_in < 1 || n_hidden < 1)
    throw std::invalid_argument("perceptron needs at least one input and one hidden unit");
  if (!(learning_rate > 0.0))
    throw std::invalid_argument("learning rate must be positive");
  std::mt19937_64 gen(seed);
  auto draw = [&gen] { return uniform_unit(gen) - 0.5; };
  w_ih_.resize(static_cast<std::size_t>(n_hidden) * n_in);
  for (double& w : w_ih_) w = draw();
  w_ho_.resize(static_cast<std::size_t>(n_hidden));
  for (double& w : w_ho_) w = draw();
  if (bias_) {
    b_h_.resize(static_cast<std::size_t>(n_hidden));
    for (double& w : b_h_) w = draw();
    b_o_ = draw();
  }
}

Perceptron Perceptron::from_weights(int n_in, int n_hidden, double learning_rate,
                                    std::vector<double> w_ih, std::vector<double> w_ho,
                                    std::vector<double> b_h, double b_o) {
  if (n_in < 1 || n_hidden < 1)
    throw std::invalid_argument("perceptron needs at least one input and one hidden unit");
  if (w_ih.size() != static_cast<std::size_t>(n_hidden) * n_in ||
      w_ho.size() != static_cast<std::size_t>(n_hidden) ||
      (!b_h.empty() && b_h.size() != static_cast<std::size_t>(n_hidden)))
    throw std::invalid_argument("weight vector sizes do not match the layer sizes");
  Perceptron p;
  p.n_in_ = n_in;
  p.n_hidden_ = n_hidden;
  p.rate_ = learning_rate;
  p.bias_ = !b_h.empty();
  p.w_ih_ = std::move(w_ih);
  p.w_ho_ = std::move(w_ho);
  p.b_h_ = std::move(b_h);
  p.b_o_ = b_o;
  return p;
}

void Perceptron::check_input(std::span<const double> input) const {
  if (input.size() != static_cast<std::size_t>(n_in_))
    throw std::invalid_argument("input length " + std::to_string(input.size()) +
                                " does not match n_in " + std::to_string(n_in_));
}

double Perceptron::forward(std::span<const double> input) const {
  check_input(input);
  double out = bias_ ? b_o_ : 0.0;
  for (int j = 0; j < n_hidden_; ++j) {
    const double* row = w_ih_.data() + static_cast<std::size_t>(j) * n_in_;
    double z = bias_ ? b_h_[j] : 0.0;
    for (int i = 0; i < n_in_; ++i) z += row[i] * input[i];
    out += w_ho_[j] * sigmoid(z);
  }
  return out;
}

void Perceptron::train_to_target(std::span<const double> input, double target,
                                 double predicted) {
  check_input(input);
  (void)predicted;  // documented precondition: predicted == forward(input)

  // forward pass, keeping the hidden activations
  std::vector<double> hidden(static_cast<std::size_t>(n_hidden_));
  double out = bias_ ? b_o_ : 0.0;
  for (int j = 0; j < n_hidden_; ++j) {
    const double* row = w_ih_.data() + static_cast<std::size_t>(j) * n_in_;
    double z = bias_ ? b_h_[j] : 0.0;
    for (int i = 0; i < n_in_; ++i) z += row[i] * input[i];
    hidden[j] = sigmoid(z);
    out += w_ho_[j] * hidden[j];
  }

  const double err = target - out;
  for (int j = 0; j < n_hidden_; ++j) {
    const double v_old = w_ho_[j];
    w_ho_[j] += rate_ * err * hidden[j];
    const double delta = err * v_old * hidden[j] * (1.0 - hidden[j]);
    double* row = w_ih_.data() + static_cast<std::size_t>(j) * n_in_;
    for (int i = 0; i < n_in_; ++i) row[i] += rate_ * delta * input[i];
    if (bias_) b_h_[j] += rate_ * delta;
  }
  if (bias_) b_o_ += rate_ * err;
}

}  // namespace samu
