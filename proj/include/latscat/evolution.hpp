#pragma once

#include <vector>

#include "latscat/operator_matrix.hpp"
#include "latscat/spectral_decomp.hpp"

namespace latscat {

/// e^{itH} Pc(n, m) = int e^{2it(1 - cos theta)} conj(psi(n, theta)) psi(m, theta) d theta.
/// Throws InvalidArgument when the table grid has fewer than
/// evolution_nodes_per_panel(t) nodes per panel.
OperatorMatrix evolve_pc_kernel(const PlaneWaveTable& table, double t);
OperatorMatrix evolve_pc_kernel(const Potential& q, double t, const Window& window, const AngleGrid& grid);

/// Nodes per panel that resolve both the window and the phase at time t.
int propagator_nodes_per_panel(int half_width, double t_max);

/// Dense oracle: exp(itH) (I - Pd) on an enlarged window, restricted to `window`.
/// The enlargement is 2|t| + 64 sites on each side.
Eigen::MatrixXcd dense_propagator_pc(const Potential& q, double t, const Window& window);

struct DecayReport {
  std::vector<double> t;
  std::vector<double> sup_entry;  ///< s(t), max over the core
  std::vector<double> rescaled;   ///< c(t) = <t>^{1/3} s(t)
  double c_star = 0.0;            ///< max c(t)
  bool alarm = false;             ///< c(t_last) > 1.5 x median of c
};

/// The grid needs propagator_nodes_per_panel(N, max t) nodes per panel.
DecayReport decay_probe(const Potential& q, const std::vector<double>& t_grid, const Window& window,
                        const AngleGrid& grid);

}  // namespace latscat
