#include "latscat/quadrature.hpp"

#include <cmath>

#include "latscat/error.hpp"
#include "latscat/lattice.hpp"

namespace latscat {

GaussRule gauss_legendre_rule(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre_rule: need n >= 1");
  GaussRule rule;
  rule.x.resize(static_cast<std::size_t>(n));
  rule.w.resize(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.x[static_cast<std::size_t>(i)] = -x;
    rule.w[static_cast<std::size_t>(i)] = w;
    rule.x[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.x[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

AngleGrid AngleGrid::gauss_legendre(int nodes_per_panel, int panels_per_half) {
  if (nodes_per_panel < 1 || panels_per_half < 1) throw InvalidArgument("AngleGrid: need positive node and panel counts");
  const GaussRule rule = gauss_legendre_rule(nodes_per_panel);
  const double h = kPi / panels_per_half;
  std::vector<double> pos_nodes;
  std::vector<double> pos_weights;
  pos_nodes.reserve(static_cast<std::size_t>(nodes_per_panel) * panels_per_half);
  pos_weights.reserve(pos_nodes.capacity());
  for (int p = 0; p < panels_per_half; ++p) {
    const double a = p * h;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      pos_nodes.push_back(a + 0.5 * h * (rule.x[i] + 1.0));
      pos_weights.push_back(0.5 * h * rule.w[i]);
    }
  }
  AngleGrid g;
  g.nodes_per_panel_ = nodes_per_panel;
  g.panels_per_half_ = panels_per_half;
  const std::size_t half = pos_nodes.size();
  g.nodes_.resize(2 * half);
  g.weights_.resize(2 * half);
  for (std::size_t j = 0; j < half; ++j) {
    g.nodes_[half + j] = pos_nodes[j];
    g.weights_[half + j] = pos_weights[j];
    g.nodes_[half - 1 - j] = -pos_nodes[j];
    g.weights_[half - 1 - j] = pos_weights[j];
  }
  return g;
}

int default_nodes_per_panel(int half_width) {
  const int wanted = static_cast<int>(std::ceil(0.8 * 2.0 * half_width)) + 64;
  const int rounded = (wanted + 63) / 64 * 64;
  return rounded < 256 ? 256 : rounded;
}

}  // namespace latscat
