#pragma once

#include "vekua/field.hpp"

#include <random>

namespace vekua {

/// A random smooth multivector-valued function: per blade, a quadratic
/// polynomial plus one sine mode with integer frequencies. Drawing the
/// coefficients once and sampling per grid keeps refinement studies
/// evaluating the same underlying function.
class RandomSmoothField {
public:
  RandomSmoothField(int dimension, std::mt19937_64& rng, double amplitude = 1.0);

  Multivector evaluate(const Eigen::VectorXd& x) const;
  Field sample(std::shared_ptr<const GridDomain> grid) const;

private:
  int n_;
  // per blade: [const, linear..., quadratic diag..., sine amp], frequencies,
  // phases
  std::vector<Eigen::VectorXd> poly_;
  std::vector<Eigen::VectorXi> freq_;
  std::vector<double> sine_amp_;
  std::vector<double> phase_;
};

/// Least-squares slope of log(value) against log(h); the empirical
/// convergence order of a refinement study.
double fit_order(const std::vector<double>& h, const std::vector<double>& value);

}  // namespace vekua
