#include "latscat/free_ops.hpp"

#include <algorithm>
#include <cmath>

#include "latscat/error.hpp"

namespace latscat {

ComplexAngle ComplexAngle::from_energy(double lambda) {
  if (lambda < 0.0) return {Branch::lower, std::acosh(1.0 - 0.5 * lambda)};
  if (lambda > 4.0) return {Branch::upper, std::acosh(0.5 * lambda - 1.0)};
  throw InvalidArgument("ComplexAngle::from_energy: lambda must lie outside [0, 4]");
}

namespace {

template <class T>
T cheb_impl(int k, T c2) {
  const int m = std::abs(k);
  if (m == 0) return T(0.0);
  T s_prev = T(0.0);
  T s = T(1.0);
  for (int j = 1; j < m; ++j) {
    const T next = c2 * s - s_prev;
    s_prev = s;
    s = next;
  }
  return k < 0 ? -s : s;
}

}  // namespace

cplx cheb_kernel(int k, cplx theta) { return cheb_impl<cplx>(k, 2.0 * std::cos(theta)); }
double cheb_kernel(int k, double theta) { return cheb_impl<double>(k, 2.0 * std::cos(theta)); }

std::vector<cplx> f0_forward(const LatticeSeq& u, const AngleGrid& grid) {
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  const Window& w = u.window();
  std::vector<cplx> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double th = grid.node(k);
    cplx s = 0.0;
    for (int n = w.lo(); n <= w.hi(); ++n) {
      const cplx v = u[n];
      if (v != 0.0) s += std::polar(1.0, -n * th) * v;
    }
    out[k] = norm * s;
  }
  return out;
}

LatticeSeq f0_adjoint(std::span<const cplx> g, const AngleGrid& grid, Window window) {
  if (g.size() != grid.size()) throw InvalidArgument("f0_adjoint: values do not match grid");
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  LatticeSeq u(window);
  for (int n = window.lo(); n <= window.hi(); ++n) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) s += grid.weight(k) * std::polar(1.0, n * grid.node(k)) * g[k];
    u[n] = norm * s;
  }
  return u;
}

cplx angle_in_lower_half(cplx z) {
  const cplx c = 1.0 - 0.5 * z;
  cplx th = std::acos(c);
  if (th.imag() > 0.0) th = -th;
  return th;
}

cplx free_resolvent_kernel(int m, int n, cplx z, ResolventSide side) {
  const int d = std::abs(n - m);
  const bool on_band = z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 4.0;
  cplx th;
  switch (side) {
    case ResolventSide::off_axis:
      if (on_band) throw InvalidArgument("free_resolvent_kernel: z on [0,4] needs a boundary side");
      th = angle_in_lower_half(z);
      break;
    case ResolventSide::plus:
    case ResolventSide::minus: {
      if (!on_band) throw InvalidArgument("free_resolvent_kernel: boundary side requested off the band");
      const double t = std::acos(std::clamp(1.0 - 0.5 * z.real(), -1.0, 1.0));
      if (t == 0.0) throw InvalidArgument("free_resolvent_kernel: kernel is singular at z = 0");
      th = t;
      break;
    }
  }
  const cplx s = std::sin(th);
  if (std::abs(s) == 0.0) throw InvalidArgument("free_resolvent_kernel: kernel is singular at z = 4");
  const cplx val = cplx(0.0, -1.0) / (2.0 * s) * std::exp(cplx(0.0, -1.0) * th * static_cast<double>(d));
  return side == ResolventSide::minus ? std::conj(val) : val;
}

int evolution_nodes_per_panel(double t) {
  return std::max(256, static_cast<int>(std::ceil(8.0 * std::abs(t))));
}

cplx free_evolution_kernel(double t, int k, int nodes_per_panel) {
  const int npp = nodes_per_panel > 0 ? nodes_per_panel : evolution_nodes_per_panel(t) + 2 * std::abs(k);
  const AngleGrid grid = AngleGrid::gauss_legendre(npp);
  cplx s = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double th = grid.node(j);
    s += grid.weight(j) * std::polar(1.0, -t * symbol_energy(th) + k * th);
  }
  return s / (2.0 * kPi);
}

}  // namespace latscat
