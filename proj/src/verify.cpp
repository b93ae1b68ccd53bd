#include "latscat/verify.hpp"

#include <cmath>
#include <random>

#include "latscat/error.hpp"
#include "latscat/evolution.hpp"
#include "latscat/hilbert.hpp"
#include "latscat/io.hpp"
#include "latscat/jost.hpp"
#include "latscat/scattering.hpp"
#include "latscat/spectral_decomp.hpp"
#include "latscat/spectrum.hpp"
#include "latscat/wave_op.hpp"

namespace latscat {

Potential seeded_random_potential(std::uint64_t seed, int sites, int offset, double amplitude) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(static_cast<std::size_t>(sites));
  for (auto& x : v) {
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    x = amplitude * (2.0 * u - 1.0);
  }
  return Potential(offset, std::move(v));
}

std::vector<NamedPotential> builtin_potentials() {
  return {
      {"zero", Potential()},
      {"delta+1", Potential::delta(0, 1.0)},
      {"delta-1", Potential::delta(0, -1.0)},
      {"delta-2", Potential::delta(0, -2.0)},
      {"delta+2", Potential::delta(0, 2.0)},
      {"delta+4", Potential::delta(0, 4.0)},
      {"delta-4", Potential::delta(0, -4.0)},
      {"random-a", seeded_random_potential(kRandomSeedA)},
      {"random-b", seeded_random_potential(kRandomSeedB)},
  };
}

Potential builtin_potential(const std::string& name) {
  for (auto& p : builtin_potentials()) {
    if (p.name == name) return p.q;
  }
  throw InvalidArgument("unknown built-in potential '" + name + "'");
}

std::vector<cplx> smooth_test_function(const AngleGrid& grid) {
  std::vector<cplx> g(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double th = grid.node(k);
    g[k] = std::pow(std::sin(th), 6) * (1.0 + std::cos(th) + 0.5 * std::sin(2.0 * th));
  }
  return g;
}

int RunConfig::nodes_for(int half_width) const { return nodes > 0 ? nodes : default_nodes_per_panel(half_width); }

nlohmann::json RunConfig::echo() const {
  nlohmann::json j;
  j["potential"] = potential_path;
  j["builtin"] = builtin;
  j["window"] = window;
  j["nodes"] = nodes_for(window);
  j["tol"] = tol;
  j["eps_res"] = eps_res;
  j["out"] = out.string();
  return j;
}

void RunConfig::validate(const Potential& q, int min_nodes) const {
  if (window < 1) throw InvalidArgument("window N must be >= 1");
  const int need = q.support_radius() + band_buffer(q);
  if (window < need) {
    throw InvalidArgument("window N = " + std::to_string(window) + " too small; need at least " + std::to_string(need));
  }
  if (nodes != 0 && nodes < min_nodes) {
    throw InvalidArgument("nodes K = " + std::to_string(nodes) + " below the minimum " + std::to_string(min_nodes));
  }
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json VerifyReport::to_json(const RunConfig& config) const {
  nlohmann::json j;
  j["config"] = config.echo();
  j["pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back(
        {{"potential", c.potential}, {"check", c.check}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  }
  return j;
}

namespace {

void verify_one(const NamedPotential& np, const RunConfig& cfg, std::vector<CheckResult>& out) {
  const Potential& q = np.q;
  auto add = [&](const std::string& name, double value, double tol) {
    out.push_back({np.name, name, value, tol, std::isfinite(value) && value < tol});
  };
  auto add_bool = [&](const std::string& name, bool ok) { out.push_back({np.name, name, ok ? 0.0 : 1.0, 0.5, ok}); };

  const Window w(cfg.window);
  const AngleGrid grid = AngleGrid::gauss_legendre(cfg.nodes_for(cfg.window));
  const int core = core_half_width(q, w);

  const ScatteringData sd = scattering_coefficients(q, grid, w);
  double unit = 0.0, lower = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t2 = std::norm(sd.T[k]);
    unit = std::max({unit, std::abs(t2 + std::norm(sd.R_plus[k]) - 1.0), std::abs(t2 + std::norm(sd.R_minus[k]) - 1.0)});
    lower = std::max(lower, 2.0 * std::abs(std::sin(grid.node(k))) - std::abs(sd.W[k]));
  }
  add("unitarity", unit, 1e-10);
  add("wronskian_constancy", sd.wronskian_spread, 1e-10);
  add("wronskian_lower_bound", lower, 1e-10);

  double route = 0.0, volterra = 0.0;
  for (Side side : {Side::plus, Side::minus}) {
    const JostData jd = b_coefficients(q, side, w);
    for (std::size_t k = grid.half(); k < grid.size(); k += 7) {
      const double th = grid.node(k);
      const LatticeSeq f = jost_by_recursion(q, th, w, side);
      for (int n = w.lo(); n <= w.hi(); ++n) route = std::max(route, std::abs(jd.f(n, th) - f[n]));
      volterra = std::max(volterra, volterra_residual(q, th, f, side));
    }
  }
  add("jost_two_route", route, 1e-9);
  add("volterra_residual", volterra, 1e-10);

  const PlaneWaveTable table(q, grid, w);
  add("lippmann_schwinger", ls_residual(table), 1e-8);

  const auto pairs = find_eigenvalues(q, w, 0.0, cfg.tol);
  double eres = 0.0;
  for (const auto& p : pairs) eres = std::max(eres, eigen_residual(q, p.lambda, p.phi));
  add("eigen_residual", eres, 1e-9);
  add_bool("count_bounds", negative_count_bound_check(q, w).ok());

  const OperatorMatrix pd = projection_discrete(pairs, w);
  const auto n = static_cast<Eigen::Index>(w.size());
  const Eigen::MatrixXcd pc_eig = Eigen::MatrixXcd::Identity(n, n) - pd.matrix();
  const OperatorMatrix pc_quad = projection_continuous_quadrature(table);
  add("completeness", max_abs(core_block(pc_eig - pc_quad.matrix(), w, core)), 1e-6);
  add("idempotence", max_abs(core_block(pc_quad.matrix() * pc_quad.matrix() - pc_quad.matrix(), w, core)), 1e-8);

  const std::vector<cplx> g = smooth_test_function(grid);
  const std::vector<cplx> ffg = distorted_forward(distorted_adjoint(g, table), table);
  double ff = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) ff = std::max(ff, std::abs(ffg[k] - g[k]));
  add("ff_star_identity", ff, 1e-8);

  const OperatorMatrix W = wave_operator_matrix(table);
  const Eigen::MatrixXcd H = to_complex(hamiltonian_matrix(q, w));
  const Eigen::MatrixXcd L = to_complex(hamiltonian_matrix(Potential(), w));
  add("intertwining", max_abs(core_block(H * W.matrix() - W.matrix() * L, w, std::max(0, core - 1))), 1e-6);

  const EdgeReport edges = classify_edges(q, cfg.eps_res);
  add_bool("edge_criterion", p_boundedness_criterion(edges) == q.empty());

  if (grid.nodes_per_panel() >= evolution_nodes_per_panel(1.0)) {
    const OperatorMatrix prop = evolve_pc_kernel(table, 1.0);
    add("propagator_vs_dense", max_abs(core_block(prop.matrix() - dense_propagator_pc(q, 1.0, w), w, core)), 1e-6);
  } else {
    out.push_back({np.name, "propagator_vs_dense", kInf, 1e-6, false});
  }
}

}  // namespace

VerifyReport run_verify(const RunConfig& config) {
  std::vector<NamedPotential> list;
  if (!config.potential_path.empty() && config.builtin.empty()) {
    list.push_back({config.potential_path, load_potential(config.potential_path)});
  } else if (config.builtin.empty() || config.builtin == "all") {
    list = builtin_potentials();
  } else {
    list.push_back({config.builtin, builtin_potential(config.builtin)});
  }
  VerifyReport r;
  for (const auto& np : list) {
    config.validate(np.q, 1);
    try {
      verify_one(np, config, r.checks);
    } catch (const NumericalFailure& e) {
      r.checks.push_back({np.name, std::string("numerical_failure: ") + e.what(), kInf, 0.0, false});
    }
  }
  return r;
}

}  // namespace latscat
