#include "vekua/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace vekua {

RandomSmoothField::RandomSmoothField(int dimension, std::mt19937_64& rng,
                                     double amplitude)
    : n_(dimension) {
  const int nb = 1 << dimension;
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<int> freq(1, 2);
  std::uniform_real_distribution<double> angle(0.0, 6.28318530717958647692);
  for (int b = 0; b < nb; ++b) {
    Eigen::VectorXd poly(1 + dimension + dimension);
    poly[0] = amplitude * gauss(rng);
    for (int i = 0; i < dimension; ++i) poly[1 + i] = 0.5 * amplitude * gauss(rng);
    for (int i = 0; i < dimension; ++i)
      poly[1 + dimension + i] = 0.3 * amplitude * gauss(rng);
    poly_.push_back(poly);
    Eigen::VectorXi f(dimension);
    for (int i = 0; i < dimension; ++i) f[i] = freq(rng);
    freq_.push_back(f);
    sine_amp_.push_back(0.3 * amplitude * gauss(rng));
    phase_.push_back(angle(rng));
  }
}

Multivector RandomSmoothField::evaluate(const Eigen::VectorXd& x) const {
  if (x.size() != n_)
    throw std::invalid_argument("RandomSmoothField::evaluate: arity mismatch");
  Multivector out(n_);
  const int nb = 1 << n_;
  for (int b = 0; b < nb; ++b) {
    const Eigen::VectorXd& c = poly_[b];
    double v = c[0];
    double arg = phase_[b];
    for (int i = 0; i < n_; ++i) {
      v += c[1 + i] * x[i] + c[1 + n_ + i] * x[i] * x[i];
      arg += freq_[b][i] * 3.14159265358979323846 * x[i];
    }
    out[b] = v + sine_amp_[b] * std::sin(arg);
  }
  return out;
}

Field RandomSmoothField::sample(std::shared_ptr<const GridDomain> grid) const {
  return vekua::sample([this](const Eigen::VectorXd& x) { return evaluate(x); },
                       std::move(grid));
}

double fit_order(const std::vector<double>& h, const std::vector<double>& value) {
  if (h.size() != value.size() || h.size() < 2)
    throw std::invalid_argument("fit_order: need matching lists of >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int k = static_cast<int>(h.size());
  for (int i = 0; i < k; ++i) {
    const double lx = std::log(h[i]);
    const double ly = std::log(std::max(value[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace vekua
