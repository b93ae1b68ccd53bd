#pragma once

#include <span>
#include <vector>

#include "latscat/lattice.hpp"
#include "latscat/quadrature.hpp"

namespace latscat {

/// Point of D = {-pi <= Re theta <= pi, Im theta < 0} on one of the two rays
/// that map onto the real axis outside [0, 4]:
///   lower branch theta = -i a      ->  z = 2 - 2 cosh a < 0
///   upper branch theta = pi - i a  ->  z = 2 + 2 cosh a > 4
struct ComplexAngle {
  enum class Branch { lower, upper };
  Branch branch = Branch::lower;
  double a = 1.0;

  cplx theta() const { return branch == Branch::lower ? cplx(0.0, -a) : cplx(kPi, -a); }
  /// cos(theta), real on both rays.
  double cos_theta() const { return branch == Branch::lower ? std::cosh(a) : -std::cosh(a); }
  double energy() const { return 2.0 - 2.0 * cos_theta(); }

  /// Inverse of energy() for lambda outside [0, 4].
  static ComplexAngle from_energy(double lambda);
};

/// z = 2(1 - cos theta)
inline cplx symbol_energy(cplx theta) { return 2.0 - 2.0 * std::cos(theta); }
inline double symbol_energy(double theta) { return 2.0 - 2.0 * std::cos(theta); }

/// sin(k theta) / sin(theta) through S_{k+1} = 2 cos(theta) S_k - S_{k-1},
/// S_0 = 0, S_1 = 1, S_{-k} = -S_k; regular at theta = 0 and pi.
cplx cheb_kernel(int k, cplx theta);
double cheb_kernel(int k, double theta);

/// F0[u](theta_k) = (2 pi)^{-1/2} sum_n e^{-i n theta_k} u(n)
std::vector<cplx> f0_forward(const LatticeSeq& u, const AngleGrid& grid);
/// (2 pi)^{-1/2} int e^{i n theta} g(theta) dtheta by quadrature.
LatticeSeq f0_adjoint(std::span<const cplx> g, const AngleGrid& grid, Window window);

/// Boundary value selection for z on (0, 4).
enum class ResolventSide {
  off_axis,  ///< z must lie off [0, 4]
  plus,      ///< theta(lambda) in (0, pi], kernel e^{-i theta |n-m|}
  minus,     ///< complex conjugate of plus
};

/// theta in D with 2(1 - cos theta) = z, for z off [0, 4].
cplx angle_in_lower_half(cplx z);

/// Kernel of (-Delta - z)^{-1}: (-i / 2 sin theta) e^{-i theta |n - m|}.
cplx free_resolvent_kernel(int m, int n, cplx z, ResolventSide side = ResolventSide::off_axis);

/// Nodes per panel used for the free and the perturbed propagators at time t.
int evolution_nodes_per_panel(double t);

/// e^{it Delta}(n, m) with k = n - m:
/// (1/2pi) int e^{-2it(1 - cos theta)} e^{i k theta} dtheta.
/// nodes_per_panel = 0 selects evolution_nodes_per_panel(t).
cplx free_evolution_kernel(double t, int k, int nodes_per_panel = 0);

}  // namespace latscat
