#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latscat/error.hpp"
#include "latscat/evolution.hpp"
#include "latscat/hilbert.hpp"
#include "latscat/io.hpp"
#include "latscat/jost.hpp"
#include "latscat/scattering.hpp"
#include "latscat/spectral_decomp.hpp"
#include "latscat/spectrum.hpp"
#include "latscat/verify.hpp"
#include "latscat/wave_op.hpp"

using namespace latscat;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNumerical = 2, kIo = 3 };

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

Potential resolve_potential(const RunConfig& cfg) {
  if (!cfg.builtin.empty()) return builtin_potential(cfg.builtin);
  if (!cfg.potential_path.empty()) return load_potential(cfg.potential_path);
  throw InvalidArgument("one of --potential or --builtin is required");
}

json edge_json(const EdgeReport& e) {
  json j;
  j["eps_res"] = e.eps_res;
  j["resonant_at_0"] = e.resonant_at_0;
  j["resonant_at_4"] = e.resonant_at_4;
  j["W0"] = cjson(e.W0);
  j["Wpi"] = cjson(e.Wpi);
  if (e.Wdot0) j["Wdot0"] = cjson(*e.Wdot0);
  if (e.Wdotpi) j["Wdotpi"] = cjson(*e.Wdotpi);
  j["T0"] = cjson(e.T0);
  j["Tpi"] = cjson(e.Tpi);
  j["R_plus_0"] = cjson(e.R_plus_0);
  j["R_minus_0"] = cjson(e.R_minus_0);
  j["R_plus_pi"] = cjson(e.R_plus_pi);
  j["R_minus_pi"] = cjson(e.R_minus_pi);
  return j;
}

json base_report(const RunConfig& cfg, const Potential& q, const std::string& command) {
  json j;
  j["command"] = command;
  j["config"] = cfg.echo();
  j["potential"] = potential_to_json(q);
  return j;
}

std::string matrix_csv(const OperatorMatrix& a) {
  const Window& w = a.window();
  std::vector<std::string> header{"mu"};
  for (int nu = w.lo(); nu <= w.hi(); ++nu) {
    header.push_back("re(" + std::to_string(nu) + ")");
    header.push_back("im(" + std::to_string(nu) + ")");
  }
  CsvTable t(header);
  for (int mu = w.lo(); mu <= w.hi(); ++mu) {
    std::vector<std::string> row{std::to_string(mu)};
    for (int nu = w.lo(); nu <= w.hi(); ++nu) {
      row.push_back(format_double(a(mu, nu).real()));
      row.push_back(format_double(a(mu, nu).imag()));
    }
    t.add_row(std::move(row));
  }
  return t.str();
}

AngleGrid grid_for(const RunConfig& cfg, int half_width) {
  return AngleGrid::gauss_legendre(cfg.nodes_for(half_width));
}

int cmd_scatter(const RunConfig& cfg) {
  const Potential q = resolve_potential(cfg);
  cfg.validate(q);
  const Window w(cfg.window);
  const AngleGrid grid = grid_for(cfg, cfg.window);
  const ScatteringData sd = scattering_coefficients(q, grid, w);
  const EdgeReport edges = classify_edges(q, cfg.eps_res);
  CsvTable t({"theta", "re_T", "im_T", "re_Rp", "im_Rp", "re_Rm", "im_Rm", "unitarity"});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    t.add_row(std::vector<double>{grid.node(k), sd.T[k].real(), sd.T[k].imag(), sd.R_plus[k].real(),
                                  sd.R_plus[k].imag(), sd.R_minus[k].real(), sd.R_minus[k].imag(),
                                  std::norm(sd.T[k]) + std::norm(sd.R_plus[k])});
  }
  write_text(cfg.out / "scatter.csv", t.str());
  json r = base_report(cfg, q, "scatter");
  r["edges"] = edge_json(edges);
  r["wronskian_spread"] = sd.wronskian_spread;
  write_json(cfg.out / "edges.json", r);
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, double a_max) {
  const Potential q = resolve_potential(cfg);
  cfg.validate(q);
  const Window w(cfg.window);
  const auto pairs = find_eigenvalues(q, w, a_max, cfg.tol);
  CsvTable ev({"lambda", "branch", "a", "eigen_residual", "edge_amplitude"});
  json list = json::array();
  for (const auto& p : pairs) {
    const std::string branch = p.angle.branch == ComplexAngle::Branch::lower ? "lower" : "upper";
    const double res = eigen_residual(q, p.lambda, p.phi);
    ev.add_row({format_double(p.lambda), branch, format_double(p.decay_rate), format_double(res),
                format_double(p.edge_amplitude)});
    list.push_back({{"lambda", p.lambda}, {"branch", branch}, {"decay_rate", p.decay_rate}, {"eigen_residual", res}});
  }
  write_text(cfg.out / "eigenvalues.csv", ev.str());
  double lam_min = -1.0;
  for (const auto& p : pairs) lam_min = std::min(lam_min, p.lambda - 0.5);
  CsvTable osc({"lambda", "N"});
  for (int j = 0; j < 20; ++j) {
    const double lam = lam_min * (1.0 - j / 19.0);
    osc.add_row(std::vector<double>{lam, static_cast<double>(oscillation_count(q, lam, w))});
  }
  write_text(cfg.out / "oscillation.csv", osc.str());
  const CountReport c = negative_count_bound_check(q, w);
  json r = base_report(cfg, q, "spectrum");
  r["eigenvalues"] = list;
  r["bounds"] = {{"negative", c.negative},
                 {"above_four", c.above_four},
                 {"above_four_reflected", c.above_four_reflected},
                 {"bound_total", c.bound_total},
                 {"bound_negative", c.bound_negative},
                 {"bound_above", c.bound_above},
                 {"reflection_residual", c.reflection_residual},
                 {"ok", c.ok()}};
  write_json(cfg.out / "spectrum.json", r);
  return kOk;
}

int cmd_project(const RunConfig& cfg, bool dump) {
  const Potential q = resolve_potential(cfg);
  cfg.validate(q);
  const Window w(cfg.window);
  const AngleGrid grid = grid_for(cfg, cfg.window);
  const int core = core_half_width(q, w);
  const auto pairs = find_eigenvalues(q, w, 0.0, cfg.tol);
  const ProjectionRoutes pc = projection_continuous_two_routes(q, w, grid);
  const Eigen::MatrixXcd& pq = pc.quad.matrix();
  double orth = 0.0;
  for (const auto& p : pairs) orth = std::max(orth, (pq * to_vector(p.phi)).norm());
  json r = base_report(cfg, q, "project");
  r["core_half_width"] = core;
  r["bound_states"] = pairs.size();
  r["route_difference"] = max_abs(pc.eig.core(core) - pc.quad.core(core));
  r["idempotence"] = max_abs(core_block(pq * pq - pq, w, core));
  r["hermiticity"] = max_abs(core_block(pq - pq.adjoint(), w, core));
  r["orthogonality"] = orth;
  write_json(cfg.out / "project.json", r);
  if (dump) {
    write_text(cfg.out / "pc_eig.csv", matrix_csv(pc.eig));
    write_text(cfg.out / "pc_quad.csv", matrix_csv(pc.quad));
  }
  return kOk;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse '" + item + "' as a number");
    }
  }
  return out;
}

int cmd_waveop(const RunConfig& cfg, bool probe, const std::string& pearson, bool dump) {
  const Potential q = resolve_potential(cfg);
  cfg.validate(q);
  const Window w(cfg.window);
  const EdgeReport edges = classify_edges(q, cfg.eps_res);
  json r = base_report(cfg, q, "waveop");
  r["criterion"] = p_boundedness_criterion(edges);
  r["T0"] = cjson(edges.T0);
  r["Tpi"] = cjson(edges.Tpi);
  r["edges"] = edge_json(edges);
  const AngleGrid grid = grid_for(cfg, cfg.window);
  const PlaneWaveTable table(q, grid, w);
  const OperatorMatrix W = wave_operator_matrix(table);
  r["ls_residual"] = ls_residual(table);
  if (probe) {
    json norms = json::array();
    std::vector<int> sizes;
    for (int n = 64; n < cfg.window; n *= 2) sizes.push_back(n);
    sizes.push_back(cfg.window);
    for (int n : sizes) {
      if (n < q.support_radius() + band_buffer(q)) continue;
      const Window wn(n);
      const OperatorMatrix Wn = wave_operator_matrix(q, wn, grid_for(cfg, n));
      norms.push_back({{"N", n},
                       {"l1", lp_norm_probe(Wn, 1.0)},
                       {"l2", lp_norm_probe(Wn, 2.0)},
                       {"linf", lp_norm_probe(Wn, kInf)}});
    }
    r["norms"] = norms;
  }
  if (!pearson.empty()) {
    const std::vector<double> ts = parse_list(pearson);
    const LatticeSeq u = LatticeSeq::delta(w, std::min(3, w.hi()));
    const PearsonReport p = pearson_probe(q, u, ts, grid);
    r["pearson"] = {{"u", "delta_3"}, {"t", p.t}, {"residual", p.residual}, {"edge_mass", p.edge_mass}};
  }
  write_json(cfg.out / "waveop.json", r);
  if (dump) write_text(cfg.out / "W.csv", matrix_csv(W));
  return kOk;
}

int cmd_evolve(const RunConfig& cfg, double t_max, int count) {
  const Potential q = resolve_potential(cfg);
  cfg.validate(q);
  if (!(t_max > 0.0) || count < 2) throw InvalidArgument("need --t-max > 0 and --t-count >= 2");
  const Window w(cfg.window);
  const int npp = cfg.nodes > 0 ? cfg.nodes : propagator_nodes_per_panel(cfg.window, t_max);
  const AngleGrid grid = AngleGrid::gauss_legendre(npp);
  std::vector<double> ts;
  const double t0 = std::min(1.0, t_max);
  for (int j = 0; j < count; ++j) ts.push_back(t0 * std::pow(t_max / t0, static_cast<double>(j) / (count - 1)));
  const DecayReport d = decay_probe(q, ts, w, grid);
  CsvTable t({"t", "s", "c"});
  for (std::size_t i = 0; i < d.t.size(); ++i) t.add_row(std::vector<double>{d.t[i], d.sup_entry[i], d.rescaled[i]});
  write_text(cfg.out / "evolve.csv", t.str());
  json r = base_report(cfg, q, "evolve");
  r["nodes_per_panel"] = npp;
  r["c_star"] = d.c_star;
  r["alarm"] = d.alarm;
  write_json(cfg.out / "evolve.json", r);
  return kOk;
}

int cmd_hilbert(const RunConfig& cfg) {
  if (cfg.window < 8) throw InvalidArgument("hilbert needs --window >= 8");
  json r;
  r["command"] = "hilbert";
  r["config"] = cfg.echo();
  json norms = json::array();
  CsvTable t({"N", "l1", "linf"});
  for (int n = 64; n <= cfg.window; n *= 2) {
    const OperatorMatrix h = hilbert_matrix(Window(n));
    const double l1 = lp_norm_probe(h, 1.0), li = lp_norm_probe(h, kInf);
    t.add_row(std::vector<double>{static_cast<double>(n), l1, li});
    norms.push_back({{"N", n}, {"l1", l1}, {"linf", li}});
  }
  r["norms"] = norms;
  const Window w(cfg.window);
  LatticeSeq v(w);
  const int s = std::max(1, cfg.window / 8);
  for (int n = -2 * s; n <= 2 * s; ++n) {
    const double x = static_cast<double>(n) / s;
    v[n] = x * std::exp(-x * x) * std::pow(std::max(0.0, 1.0 - 0.25 * x * x), 4);
  }
  r["symbol_defect"] = hilbert_symbol_defect(v, grid_for(cfg, cfg.window));
  write_text(cfg.out / "hilbert.csv", t.str());
  write_json(cfg.out / "hilbert.json", r);
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const VerifyReport rep = run_verify(cfg);
  write_json(cfg.out / "verify.json", rep.to_json(cfg));
  for (const auto& c : rep.checks) {
    if (!c.pass) std::cerr << "FAIL " << c.potential << " " << c.check << " = " << c.value << " (tol " << c.tolerance << ")\n";
  }
  return rep.all_pass() ? kOk : kNumerical;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--potential", cfg.potential_path, "potential file {\"offset\":..,\"values\":[..]}");
  sub->add_option("--builtin", cfg.builtin, "built-in potential name");
  sub->add_option("--out", cfg.out, "output directory");
  sub->add_option("--window", cfg.window, "window half width N");
  sub->add_option("--nodes", cfg.nodes, "Gauss-Legendre nodes per panel K (0 = default for N)");
  sub->add_option("--tol", cfg.tol, "eigenvalue tolerance");
  sub->add_option("--eps-res", cfg.eps_res, "resonance threshold (0 = 1e-8 (1 + |q|_1))");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering and spectral toolkit for the lattice operator -Delta + q"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* scatter = app.add_subcommand("scatter", "T, R+, R- on the angle grid and the band-edge report");
  add_common(scatter, cfg);

  double a_max = 0.0;
  auto* spectrum = app.add_subcommand("spectrum", "bound states, oscillation counts, counting bounds");
  add_common(spectrum, cfg);
  spectrum->add_option("--a-max", a_max, "upper end of the decay-rate bracket (0 = default)");

  bool dump = false;
  auto* project = app.add_subcommand("project", "Pc by the eigenvector and the plane-wave routes");
  add_common(project, cfg);
  project->add_flag("--dump", dump, "write full matrices as CSV");

  bool probe = false;
  std::string pearson;
  auto* waveop = app.add_subcommand("waveop", "wave operator, edge criterion, norm probes");
  add_common(waveop, cfg);
  waveop->add_flag("--probe-norms", probe, "l1, l2, linf norms over windows 64, 128, ... up to N");
  waveop->add_option("--pearson", pearson, "comma-separated times for the time-dependent probe");
  waveop->add_flag("--dump", dump, "write W as CSV");

  double t_max = 100.0;
  int t_count = 24;
  auto* evolve = app.add_subcommand("evolve", "dispersive decay of e^{itH} Pc");
  add_common(evolve, cfg);
  evolve->add_option("--t-max", t_max, "largest time");
  evolve->add_option("--t-count", t_count, "number of log-spaced times in [1, t-max]");

  auto* hilbert = app.add_subcommand("hilbert", "discrete Hilbert transform norms and symbol check");
  add_common(hilbert, cfg);

  auto* verify = app.add_subcommand("verify", "property suite on the built-in potentials");
  add_common(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*scatter) return cmd_scatter(cfg);
    if (*spectrum) return cmd_spectrum(cfg, a_max);
    if (*project) return cmd_project(cfg, dump);
    if (*waveop) return cmd_waveop(cfg, probe, pearson, dump);
    if (*evolve) return cmd_evolve(cfg, t_max, t_count);
    if (*hilbert) return cmd_hilbert(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
