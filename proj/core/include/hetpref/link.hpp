#pragma once

namespace hetpref {

enum class LinkKind { logistic };

enum class LinkMode { value, first_deriv, second_deriv, inverse };

// Logistic link with temperature t: value(z) = 1 / (1 + exp(-z/t)).
// Strictly increasing, maps into (0,1), and satisfies value(z) + value(-z) = 1.
struct LinkFunction {
  LinkKind kind = LinkKind::logistic;
  double temperature = 1.0;

  double value(double z) const;
  double first_deriv(double z) const;
  double second_deriv(double z) const;
  // Throws std::domain_error unless p is in (0, 1).
  double inverse(double p) const;
  // log(value(z)) computed without underflow for large negative z.
  double log_value(double z) const;
};

double link(double z, LinkMode mode, const LinkFunction& f);

}  // namespace hetpref
