#pragma once

// Fourier residual networks in real sin/cos form:
//
//   f_1(x)   = g_1(x)
//   f_l(x)   = f_{l-1}(x) + g_l(x) + h_l(f_{l-1}(x)),   l = 2..L
//   g(x)     = sum_k a_k sin(w_k x) + b_k cos(w_k x)
//
// with h_l of the same form applied to the previous layer's output.

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fresnet/errors.hpp"

namespace fresnet {

struct Branch {
  std::vector<double> freqs;
  std::vector<double> sin_amps;
  std::vector<double> cos_amps;

  std::size_t width() const noexcept { return freqs.size(); }
  bool empty() const noexcept { return freqs.empty(); }

  void add(double freq, double sin_amp, double cos_amp) {
    freqs.push_back(freq);
    sin_amps.push_back(sin_amp);
    cos_amps.push_back(cos_amp);
  }

  /// Adds the neuron Re(c e^{i w x}) = Re(c) cos(w x) - Im(c) sin(w x).
  void add_complex(double freq, std::complex<double> c) { add(freq, -c.imag(), c.real()); }

  void append(const Branch& other) {
    freqs.insert(freqs.end(), other.freqs.begin(), other.freqs.end());
    sin_amps.insert(sin_amps.end(), other.sin_amps.begin(), other.sin_amps.end());
    cos_amps.insert(cos_amps.end(), other.cos_amps.begin(), other.cos_amps.end());
  }

  double operator()(double x) const noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < freqs.size(); ++k) {
      const double t = freqs[k] * x;
      acc += sin_amps[k] * std::sin(t) + cos_amps[k] * std::cos(t);
    }
    return acc;
  }

  /// Neurons with nonzero frequency. A zero-frequency entry only adds a
  /// constant and is counted as a bias, not a neuron.
  std::size_t neurons() const noexcept {
    std::size_t n = 0;
    for (double w : freqs) n += (w != 0.0);
    return n;
  }

  void validate() const {
    if (sin_amps.size() != freqs.size() || cos_amps.size() != freqs.size())
      throw ValidationError("branch has mismatched freqs/a/b lengths");
    for (std::size_t k = 0; k < freqs.size(); ++k)
      if (!std::isfinite(freqs[k]) || !std::isfinite(sin_amps[k]) || !std::isfinite(cos_amps[k]))
        throw ValidationError("branch has a non-finite parameter");
  }

  bool operator==(const Branch&) const = default;
};

struct Layer {
  Branch g;
  std::optional<Branch> h;

  std::size_t width() const noexcept { return g.width() + (h ? h->width() : 0); }
  bool operator==(const Layer&) const = default;
};

class FourierResNet {
 public:
  explicit FourierResNet(std::vector<Layer> layers) : layers_(std::move(layers)) { validate(); }

  std::size_t depth() const noexcept { return layers_.size(); }
  std::span<const Layer> layers() const noexcept { return layers_; }
  const Layer& layer(std::size_t index) const { return layers_.at(index); }

  /// f_l(x) for 1 <= l <= depth.
  double eval_prefix(double x, std::size_t l) const {
    if (l < 1 || l > layers_.size())
      throw IndexError("layer index " + std::to_string(l) + " outside [1, " +
                       std::to_string(layers_.size()) + "]");
    double f = layers_[0].g(x);
    for (std::size_t i = 1; i < l; ++i) {
      const Layer& layer = layers_[i];
      const double h = layer.h ? (*layer.h)(f) : 0.0;
      f = f + layer.g(x) + h;
    }
    return f;
  }

  double eval(double x) const { return eval_prefix(x, layers_.size()); }
  double operator()(double x) const { return eval(x); }

  std::vector<double> eval_grid(std::span<const double> xs) const {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(eval(x));
    return out;
  }

  std::size_t neuron_count() const noexcept {
    std::size_t n = 0;
    for (const Layer& layer : layers_) n += layer.g.neurons() + (layer.h ? layer.h->neurons() : 0);
    return n;
  }

  /// Number of (frequency, a, b) entries per layer, counting both branches.
  std::vector<std::size_t> layer_widths() const {
    std::vector<std::size_t> w;
    for (const Layer& layer : layers_) w.push_back(layer.width());
    return w;
  }

  /// All frequencies in layer order, g-branch before h-branch.
  std::vector<double> frequencies() const {
    std::vector<double> out;
    for (const Layer& layer : layers_) {
      out.insert(out.end(), layer.g.freqs.begin(), layer.g.freqs.end());
      if (layer.h) out.insert(out.end(), layer.h->freqs.begin(), layer.h->freqs.end());
    }
    return out;
  }

  double max_abs_amplitude() const noexcept {
    double m = 0.0;
    auto visit = [&m](const Branch& b) {
      for (double a : b.sin_amps) m = std::max(m, std::abs(a));
      for (double a : b.cos_amps) m = std::max(m, std::abs(a));
    };
    for (const Layer& layer : layers_) {
      visit(layer.g);
      if (layer.h) visit(*layer.h);
    }
    return m;
  }

  /// Stacks `tail` after `head`; the first layer of `tail` gets an empty h-branch.
  static FourierResNet concatenate(const FourierResNet& head, const FourierResNet& tail) {
    std::vector<Layer> layers(head.layers_);
    for (std::size_t i = 0; i < tail.layers_.size(); ++i) {
      Layer layer = tail.layers_[i];
      if (i == 0) layer.h = Branch{};
      layers.push_back(std::move(layer));
    }
    return FourierResNet(std::move(layers));
  }

  bool operator==(const FourierResNet&) const = default;

 private:
  void validate() const {
    if (layers_.empty()) throw ValidationError("network needs at least one layer");
    if (layers_.front().h) throw ValidationError("layer 1 cannot have an h-branch");
    for (const Layer& layer : layers_) {
      layer.g.validate();
      if (layer.h) layer.h->validate();
    }
  }

  std::vector<Layer> layers_;
};

}  // namespace fresnet
