#pragma once

#include "rao/bound/bound.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace rao::bound {

struct SearchConfig {
  double g_lo = 0.001, g_hi = 0.499, g_step = 1e-3;
  double beta_lo = 0.01, beta_hi = 0.99, beta_step = 1e-2;
  double gamma_lo = 1.01, gamma_hi = 1.99, gamma_step = 1e-2;
  std::optional<double> fixed_g;  // restrict the search to one g slice
  double tolerance = 1e-13;       // relative objective spread of the final simplex
  int max_iterations = 20000;
  int restarts = 8;
};

struct SearchResult {
  BoundParams params;
  BoundEvaluation evaluation;
  std::size_t grid_points = 0;  // feasible points visited by the scan
  int iterations = 0;           // simplex iterations over all restarts
};

namespace detail {

inline std::size_t grid_count(double lo, double hi, double step) {
  return hi < lo ? 0 : static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

// Nelder-Mead maximization over the free coordinates of `start`.
template <std::size_t Dim, typename F>
std::array<double, Dim> nelder_mead(F&& f, std::array<double, Dim> start, const std::array<double, Dim>& scale,
                                    const SearchConfig& cfg, int& iterations) {
  using Point = std::array<double, Dim>;
  std::array<Point, Dim + 1> pts;
  std::array<double, Dim + 1> val;
  auto neg = [&](const Point& p) {
    double v = f(p);
    return std::isfinite(v) ? -v : std::numeric_limits<double>::infinity();
  };

  for (int round = 0; round < cfg.restarts; ++round) {
    pts[0] = start;
    for (std::size_t k = 0; k < Dim; ++k) {
      pts[k + 1] = start;
      pts[k + 1][k] += scale[k] / static_cast<double>(1 << std::min(round, 20));
    }
    for (std::size_t k = 0; k <= Dim; ++k) val[k] = neg(pts[k]);

    for (int it = 0; it < cfg.max_iterations; ++it, ++iterations) {
      std::array<std::size_t, Dim + 1> idx;
      for (std::size_t k = 0; k <= Dim; ++k) idx[k] = k;
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
      const std::size_t best = idx[0], worst = idx[Dim], second = idx[Dim - 1];
      if (std::isfinite(val[worst]) && val[worst] - val[best] <= cfg.tolerance * std::abs(val[best])) break;

      Point centroid{};
      for (std::size_t k = 0; k < Dim; ++k)
        for (std::size_t d = 0; d < Dim; ++d) centroid[d] += pts[idx[k]][d] / static_cast<double>(Dim);
      auto along = [&](double t) {
        Point p;
        for (std::size_t d = 0; d < Dim; ++d) p[d] = centroid[d] + t * (pts[worst][d] - centroid[d]);
        return p;
      };

      Point reflected = along(-1.0);
      double fr = neg(reflected);
      if (fr < val[best]) {
        Point expanded = along(-2.0);
        double fe = neg(expanded);
        if (fe < fr) {
          pts[worst] = expanded;
          val[worst] = fe;
        } else {
          pts[worst] = reflected;
          val[worst] = fr;
        }
      } else if (fr < val[second]) {
        pts[worst] = reflected;
        val[worst] = fr;
      } else {
        Point contracted = fr < val[worst] ? along(-0.5) : along(0.5);
        double fc = neg(contracted);
        if (fc < std::min(fr, val[worst])) {
          pts[worst] = contracted;
          val[worst] = fc;
        } else {
          for (std::size_t k = 0; k <= Dim; ++k) {
            if (k == best) continue;
            for (std::size_t d = 0; d < Dim; ++d) pts[k][d] = pts[best][d] + 0.5 * (pts[k][d] - pts[best][d]);
            val[k] = neg(pts[k]);
          }
        }
      }
    }
    start = pts[static_cast<std::size_t>(std::min_element(val.begin(), val.end()) - val.begin())];
  }
  return start;
}

}  // namespace detail

/// Maximizes g*beta*(1 - tail1 - tail2)/2 over the feasible region: a grid
/// scan followed by restarted Nelder-Mead refinement from the best grid point.
/// Deterministic for a fixed configuration.
inline SearchResult maximize_bound(const SearchConfig& cfg = {}) {
  SearchResult result;
  double best_obj = -std::numeric_limits<double>::infinity();
  BoundParams best{};

  const std::size_t ng = cfg.fixed_g ? 1 : detail::grid_count(cfg.g_lo, cfg.g_hi, cfg.g_step);
  const std::size_t nb = detail::grid_count(cfg.beta_lo, cfg.beta_hi, cfg.beta_step);
  const std::size_t nc = detail::grid_count(cfg.gamma_lo, cfg.gamma_hi, cfg.gamma_step);
  for (std::size_t i = 0; i < ng; ++i) {
    const double g = cfg.fixed_g ? *cfg.fixed_g : cfg.g_lo + static_cast<double>(i) * cfg.g_step;
    for (std::size_t j = 0; j < nb; ++j) {
      const double beta = cfg.beta_lo + static_cast<double>(j) * cfg.beta_step;
      for (std::size_t k = 0; k < nc; ++k) {
        const BoundParams p{g, beta, cfg.gamma_lo + static_cast<double>(k) * cfg.gamma_step};
        const double v = objective_or_floor(p);
        if (!std::isfinite(v)) continue;
        ++result.grid_points;
        if (v > best_obj) {
          best_obj = v;
          best = p;
        }
      }
    }
  }
  if (!std::isfinite(best_obj)) throw InfeasibleParams("search grid contains no feasible point");

  if (cfg.fixed_g) {
    const double g = *cfg.fixed_g;
    auto f = [g](const std::array<double, 2>& x) { return objective_or_floor({g, x[0], x[1]}); };
    auto x = detail::nelder_mead<2>(f, {best.beta, best.gamma}, {cfg.beta_step, cfg.gamma_step}, cfg, result.iterations);
    BoundParams refined{g, x[0], x[1]};
    if (objective_or_floor(refined) > best_obj) best = refined;
  } else {
    auto f = [](const std::array<double, 3>& x) { return objective_or_floor({x[0], x[1], x[2]}); };
    auto x = detail::nelder_mead<3>(f, {best.g, best.beta, best.gamma}, {cfg.g_step, cfg.beta_step, cfg.gamma_step}, cfg,
                                    result.iterations);
    BoundParams refined{x[0], x[1], x[2]};
    if (objective_or_floor(refined) > best_obj) best = refined;
  }
  result.params = best;
  result.evaluation = evaluate_bound(best);
  return result;
}

struct GridSample {
  BoundParams params;
  double objective;
  double ratio_multiplier;
};

/// Objective landscape over (g, beta); gamma is fixed or, when absent, the
/// best gamma on the configured gamma grid for each point. Infeasible points
/// are skipped.
inline std::vector<GridSample> objective_grid(const SearchConfig& cfg, std::optional<double> gamma = std::nullopt) {
  std::vector<GridSample> out;
  const std::size_t ng = detail::grid_count(cfg.g_lo, cfg.g_hi, cfg.g_step);
  const std::size_t nb = detail::grid_count(cfg.beta_lo, cfg.beta_hi, cfg.beta_step);
  const std::size_t nc = detail::grid_count(cfg.gamma_lo, cfg.gamma_hi, cfg.gamma_step);
  for (std::size_t i = 0; i < ng; ++i) {
    const double g = cfg.g_lo + static_cast<double>(i) * cfg.g_step;
    for (std::size_t j = 0; j < nb; ++j) {
      const double beta = cfg.beta_lo + static_cast<double>(j) * cfg.beta_step;
      double best = -std::numeric_limits<double>::infinity();
      BoundParams arg{g, beta, 0};
      if (gamma) {
        arg.gamma = *gamma;
        best = objective_or_floor(arg);
      } else {
        for (std::size_t k = 0; k < nc; ++k) {
          BoundParams p{g, beta, cfg.gamma_lo + static_cast<double>(k) * cfg.gamma_step};
          if (double v = objective_or_floor(p); v > best) {
            best = v;
            arg = p;
          }
        }
      }
      if (!std::isfinite(best)) continue;
      out.push_back({arg, best, best > 0 ? 1 / best : std::numeric_limits<double>::infinity()});
    }
  }
  return out;
}

}  // namespace rao::bound
