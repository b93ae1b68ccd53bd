#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace latscat {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

GaussRule gauss_legendre_rule(int n);

/// Composite Gauss-Legendre nodes on the torus [-pi, pi], split at 0 (and at pi
/// by periodicity). The rule on [-pi, 0] is the mirror image of the rule on
/// [0, pi], so nodes come in pairs theta, -theta and never hit 0 or +-pi.
///
/// Layout: indices [0, half) hold the negative nodes in ascending order,
/// [half, size) the positive nodes in ascending order; mirror(k) = size-1-k.
class AngleGrid {
 public:
  static AngleGrid gauss_legendre(int nodes_per_panel, int panels_per_half = 1);

  std::size_t size() const { return nodes_.size(); }
  std::size_t half() const { return nodes_.size() / 2; }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  double node(std::size_t k) const { return nodes_[k]; }
  double weight(std::size_t k) const { return weights_[k]; }
  std::size_t mirror(std::size_t k) const { return size() - 1 - k; }
  std::size_t positive_index(std::size_t j) const { return half() + j; }

  int nodes_per_panel() const { return nodes_per_panel_; }
  int panels_per_half() const { return panels_per_half_; }

 private:
  AngleGrid() = default;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  int nodes_per_panel_ = 0;
  int panels_per_half_ = 0;
};

/// Default nodes per panel for window work at half width N: 256, raised so that
/// oscillations up to frequency ~2N are resolved on each half of the torus.
int default_nodes_per_panel(int half_width);

}  // namespace latscat
