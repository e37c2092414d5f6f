#include "hetpref/link.hpp"

#include <cmath>
#include <stdexcept>

namespace hetpref {

double LinkFunction::value(double z) const {
  double s = z / temperature;
  if (s >= 0.0) {
    return 1.0 / (1.0 + std::exp(-s));
  }
  double e = std::exp(s);
  return e / (1.0 + e);
}

double LinkFunction::first_deriv(double z) const {
  double v = value(z);
  return v * (1.0 - v) / temperature;
}

double LinkFunction::second_deriv(double z) const {
  double v = value(z);
  return v * (1.0 - v) * (1.0 - 2.0 * v) / (temperature * temperature);
}

double LinkFunction::inverse(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("link inverse requires an argument in (0, 1)");
  }
  return temperature * std::log(p / (1.0 - p));
}

double LinkFunction::log_value(double z) const {
  // log sigma(z/t) = -log1p(exp(-z/t)) for z >= 0, z/t - log1p(exp(z/t)) otherwise.
  double s = z / temperature;
  if (s >= 0.0) {
    return -std::log1p(std::exp(-s));
  }
  return s - std::log1p(std::exp(s));
}

double link(double z, LinkMode mode, const LinkFunction& f) {
  switch (mode) {
    case LinkMode::value:
      return f.value(z);
    case LinkMode::first_deriv:
      return f.first_deriv(z);
    case LinkMode::second_deriv:
      return f.second_deriv(z);
    case LinkMode::inverse:
      return f.inverse(z);
  }
  throw std::logic_error("unknown link mode");
}

}  // namespace hetpref
