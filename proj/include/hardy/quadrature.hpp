#pragma once

#include <functional>
#include <vector>

#include "hardy/quadfloat.hpp"
#include "hardy/scaled.hpp"

namespace hardy {

/// Rule for the weight e^{-x^2} on the real line.
/// Tail weights underflow double once the order passes ~350; ln_weights stays
/// finite and is what the scaled integrators consume.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;       // ascending, symmetric about 0
  std::vector<double> weights;     // positive
  std::vector<double> ln_weights;  // log of each weight
};

/// m-point Gauss-Hermite rule, 1 <= m <= 2000. Nodes by Newton iteration on the
/// orthonormal three-term recurrence with asymptotic initial guesses; cached.
const QuadratureRule& gauss_hermite_rule(int m);

/// Same rule carried in binary128 (nodes re-polished, weights rebuilt); cached.
struct QuadratureRuleQ {
  int order = 0;
  std::vector<qf::qreal> nodes;
  std::vector<qf::qreal> weights;
};
const QuadratureRuleQ& gauss_hermite_rule_q(int m);

/// Gauss-Legendre rule on [-1, 1].
struct LegendreRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};
const LegendreRule& gauss_legendre_rule(int m);

using ScaledSampler = std::function<ScaledComplex(double)>;

/// sum_i w_i g(x_i) accumulated in scaled arithmetic. Throws on a non-finite sample.
ScaledComplex integrate_weighted(const ScaledSampler& g, const QuadratureRule& rule);

/// Default inner-product order for coefficient work up to index n_max.
inline int default_rule_order(int n_max) { return n_max > 50 ? 4 * n_max : 200; }

}  // namespace hardy
