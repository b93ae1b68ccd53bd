#pragma once

#include <optional>
#include <vector>

#include "latscat/jost.hpp"
#include "latscat/quadrature.hpp"

namespace latscat {

/// [u, v](n) = u(n+1) v(n) - u(n) v(n+1). Throws when n or n+1 is outside.
cplx wronskian(const LatticeSeq& u, const LatticeSeq& v, int n);

/// W(theta) = [f_+, f_-], evaluated just left of the support.
cplx jost_wronskian(const Potential& q, cplx theta);
/// W_1(theta) = [f_+, conj f_-] for real theta.
cplx jost_wronskian_conj(const Potential& q, double theta);

/// Values at a single real angle off the band edges.
struct ScatteringPoint {
  cplx W;
  cplx W1;
  cplx T;
  cplx R_plus;
  cplx R_minus;
};

/// T = -2i sin(theta) / W, R_+ = -conj(W_1) / W, R_- = -W_1 / W.
/// Throws NumericalFailure if W vanishes (impossible off the edges).
ScatteringPoint scattering_at(const Potential& q, double theta);

/// Band-edge (resonance) classification and the continuous extension of the
/// coefficients at theta = 0 (lambda = 0) and theta = pi (lambda = 4).
struct EdgeReport {
  double eps_res = 0.0;
  bool resonant_at_0 = false;
  bool resonant_at_4 = false;
  cplx W0;
  cplx Wpi;
  std::optional<cplx> Wdot0;   ///< only at a resonant edge
  std::optional<cplx> Wdotpi;  ///< only at a resonant edge
  cplx T0;
  cplx Tpi;
  cplx R_plus_0;
  cplx R_minus_0;
  cplx R_plus_pi;
  cplx R_minus_pi;
};

/// 1e-8 (1 + ||q||_1)
double default_eps_res(const Potential& q);

/// Resonance at an edge iff |W(theta0)| <= eps_res. At a resonant edge the
/// coefficients take their L'Hopital values, with the derivatives from
/// 4th-order centered differences (h = 1e-3). eps_res <= 0 selects the default.
/// Throws NumericalFailure when a resonant edge has |W'(theta0)| ~ 0.
EdgeReport classify_edges(const Potential& q, double eps_res = 0.0);

struct ScatteringData {
  AngleGrid grid;
  std::vector<cplx> W;
  std::vector<cplx> W1;
  std::vector<cplx> T;
  std::vector<cplx> R_plus;
  std::vector<cplx> R_minus;
  EdgeReport edges;
  /// max over nodes and window sites of |[f_+, f_-](n) - W(theta)|
  double wronskian_spread = 0.0;
};

/// Scattering data on every grid node from Jost solutions on the window;
/// W is read at n = 0 and its constancy across the window is recorded.
ScatteringData scattering_coefficients(const Potential& q, const AngleGrid& grid, const Window& window);

}  // namespace latscat
