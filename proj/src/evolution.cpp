#include "latscat/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latscat/error.hpp"
#include "latscat/free_ops.hpp"
#include "latscat/spectrum.hpp"

namespace latscat {

OperatorMatrix evolve_pc_kernel(const PlaneWaveTable& table, double t) {
  const AngleGrid& g = table.grid();
  const int need = evolution_nodes_per_panel(t);
  if (g.nodes_per_panel() < need) {
    throw InvalidArgument("evolve_pc_kernel: " + std::to_string(g.nodes_per_panel()) +
                          " nodes per panel, t = " + std::to_string(t) + " needs " + std::to_string(need));
  }
  std::vector<cplx> phase(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) phase[k] = std::exp(cplx(0.0, t * symbol_energy(g.node(k))));
  return OperatorMatrix(table.window(), gram_matrix(table.split(), weighted_columns(table, phase)), "eitH_Pc",
                        table.meta());
}

OperatorMatrix evolve_pc_kernel(const Potential& q, double t, const Window& window, const AngleGrid& grid) {
  return evolve_pc_kernel(PlaneWaveTable(q, grid, window), t);
}

int propagator_nodes_per_panel(int half_width, double t_max) {
  return std::max(default_nodes_per_panel(half_width), evolution_nodes_per_panel(t_max));
}

Eigen::MatrixXcd dense_propagator_pc(const Potential& q, double t, const Window& window) {
  const Window big(window.half_width() + static_cast<int>(std::ceil(2.0 * std::abs(t))) + 64);
  const DenseSpectrum ds = dense_reference_spectrum(q, big);
  const Eigen::Index n = ds.values.size();
  Eigen::VectorXcd phase(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = ds.values(i);
    // Pc removes the bound states, which are the eigenvalues off [0, 4].
    const bool continuous = lam >= -1e-9 && lam <= 4.0 + 1e-9;
    phase(i) = continuous ? std::exp(cplx(0.0, t * lam)) : cplx(0.0);
  }
  const Eigen::MatrixXcd v = ds.vectors.cast<cplx>();
  const Eigen::MatrixXcd full = v * phase.asDiagonal() * v.adjoint();
  return core_block(full, big, window.half_width());
}

DecayReport decay_probe(const Potential& q, const std::vector<double>& t_grid, const Window& window,
                        const AngleGrid& grid) {
  const PlaneWaveTable table(q, grid, window);
  const int core = core_half_width(q, window);
  DecayReport r;
  for (double t : t_grid) {
    const OperatorMatrix k = evolve_pc_kernel(table, t);
    const double s = max_abs(k.core(core));
    r.t.push_back(t);
    r.sup_entry.push_back(s);
    r.rescaled.push_back(std::cbrt(bracket(t)) * s);
  }
  if (!r.rescaled.empty()) {
    r.c_star = *std::max_element(r.rescaled.begin(), r.rescaled.end());
    std::vector<double> sorted = r.rescaled;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(sorted.size() / 2), sorted.end());
    const double median = sorted[sorted.size() / 2];
    r.alarm = r.rescaled.back() > 1.5 * median;
  }
  return r;
}

}  // namespace latscat
