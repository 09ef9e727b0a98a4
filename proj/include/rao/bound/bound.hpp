#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rao::bound {

class InfeasibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cut fraction g and the two auxiliary knapsack sizes beta, gamma.
struct BoundParams {
  double g = 0;
  double beta = 0;
  double gamma = 0;
};

struct BoundEvaluation {
  double tail1 = 0;       // bound on P[Z1 >= 1/2 - g]
  double tail2 = 0;       // bound on P[Z2 >= 1 - 2g]
  double p_prime_lb = 0;  // 1 - tail1 - tail2
  double p = 0;           // p_prime_lb / 2
  double objective = 0;   // g * beta * p_prime_lb / 2
  double ratio_multiplier = std::numeric_limits<double>::infinity();  // 1 / (g * beta * p)
  bool bounded = false;   // p_prime_lb > 0
};

/// Strict inequalities are enforced with this margin.
inline constexpr double kMargin = 1e-9;

/// exp(-(mu_h / z_max) * ((1+delta) ln(1+delta) - delta)): bound on
/// P[Z >= (1+delta) mu_h] for independent summands in [0, z_max] with mean <= mu_h.
inline double chernoff_tail(double mu_h, double z_max, double delta) {
  if (!(mu_h > 0) || !(z_max > 0) || !(delta > 0))
    throw std::invalid_argument("chernoff_tail needs positive mu_h, z_max and delta");
  return std::exp(-(mu_h / z_max) * ((1 + delta) * std::log1p(delta) - delta));
}

/// Closed form of chernoff_tail(beta/2, g, (1-2g)/beta - 1).
inline double tail_z1(double g, double beta) {
  if (!(g > 0) || !(beta > 0)) throw InfeasibleParams("tail_z1 needs g > 0 and beta > 0");
  if (!((1 - 2 * g) / beta - 1 > 0)) throw InfeasibleParams("tail_z1 needs 2g + beta < 1");
  return std::exp((1 - 1 / (2 * g)) * std::log((1 - 2 * g) / beta) - 1 + (1 - beta) / (2 * g));
}

/// Closed form of chernoff_tail(gamma/2, g, (2-4g)/gamma - 1).
inline double tail_z2(double g, double gamma) {
  if (!(g > 0) || !(gamma > 0)) throw InfeasibleParams("tail_z2 needs g > 0 and gamma > 0");
  if (!((2 - 4 * g) / gamma - 1 > 0)) throw InfeasibleParams("tail_z2 needs 4g + gamma < 2");
  return std::exp((2 - 1 / g) * std::log((2 - 4 * g) / gamma) - 2 + (1 - gamma / 2) / g);
}

/// Empty string when feasible, else the first violated constraint.
///
/// `closed` accepts the boundary of gamma > 1 and gamma + g > 1.5. Neither
/// enters the tail formulas, and reported optima lie on gamma + g = 1.5.
inline std::string infeasibility(const BoundParams& p, double margin = kMargin, bool closed = false) {
  const double edge = closed ? -1e-12 : margin;
  if (!(p.g > margin && p.g < 0.5 - margin)) return "0 < g < 0.5";
  if (!(p.beta > margin && p.beta < 1 - margin)) return "0 < beta < 1";
  if (!(p.gamma > 1 + edge)) return "gamma > 1";
  if (!(p.gamma + p.g > 1.5 + edge)) return "gamma + g > 1.5";
  if (!(2 * p.g + p.beta < 1 - margin)) return "2g + beta < 1";
  if (!(4 * p.g + p.gamma < 2 - margin)) return "4g + gamma < 2";
  return {};
}

inline bool feasible(const BoundParams& p, double margin = kMargin) { return infeasibility(p, margin).empty(); }

/// Evaluates the bound at `p`; the closure of the non-singular constraints is accepted.
inline BoundEvaluation evaluate_bound(const BoundParams& p) {
  if (auto why = infeasibility(p, kMargin, true); !why.empty()) throw InfeasibleParams("infeasible bound parameters: need " + why);
  BoundEvaluation e;
  e.tail1 = tail_z1(p.g, p.beta);
  e.tail2 = tail_z2(p.g, p.gamma);
  e.p_prime_lb = 1 - e.tail1 - e.tail2;
  e.p = e.p_prime_lb / 2;
  e.objective = p.g * p.beta * e.p_prime_lb / 2;
  e.bounded = e.p_prime_lb > 0;
  if (e.bounded) e.ratio_multiplier = 2 / (p.g * p.beta * e.p_prime_lb);
  return e;
}

/// Objective for the search: -inf outside the feasible region.
inline double objective_or_floor(const BoundParams& p) {
  if (!feasible(p)) return -std::numeric_limits<double>::infinity();
  return p.g * p.beta * (1 - tail_z1(p.g, p.beta) - tail_z2(p.g, p.gamma)) / 2;
}

}  // namespace rao::bound
