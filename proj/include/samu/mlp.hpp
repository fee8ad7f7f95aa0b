#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace samu {

/// Three-layer perceptron: sigmoidal hidden units, linear output unit (the
/// Q-values it approximates can be negative). One network exists per action;
/// training is a single squared-error gradient step toward a scalar target.
class Perceptron {
public:
  Perceptron(int n_in, int n_hidden, std::uint64_t seed, double learning_rate = 0.01,
             bool use_bias = false);

  double forward(std::span<const double> input) const;

  /// One backpropagation step toward `target`. `predicted` must be the
  /// current forward(input) value; target - predicted is the output error.
  void train_to_target(std::span<const double> input, double target, double predicted);

  int n_in() const { return n_in_; }
  int n_hidden() const { return n_hidden_; }
  double learning_rate() const { return rate_; }
  bool has_bias() const { return bias_; }

  // flat weight access (serialization, gradient checks)
  std::span<const double> input_weights() const { return w_ih_; }  // n_hidden x n_in
  std::span<const double> output_weights() const { return w_ho_; }
  std::span<const double> hidden_bias() const { return b_h_; }
  double output_bias() const { return b_o_; }

  static Perceptron from_weights(int n_in, int n_hidden, double learning_rate,
                                 std::vector<double> w_ih, std::vector<double> w_ho,
                                 std::vector<double> b_h, double b_o);

private:
  Perceptron() = default;
  void check_input(std::span<const double> input) const;

  int n_in_ = 0;
  int n_hidden_ = 0;
  double rate_ = 0.01;
  bool bias_ = false;
  std::vector<double> w_ih_;
  std::vector<double> w_ho_;
  std::vector<double> b_h_;
  double b_o_ = 0.0;
};

}  // namespace samu
