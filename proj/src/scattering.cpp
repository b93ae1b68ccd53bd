#include "latscat/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latscat/error.hpp"

namespace latscat {

namespace {

const cplx kI(0.0, 1.0);

int reference_site(const Potential& q) { return q.empty() ? 0 : q.support_min() - 1; }

cplx fourth_order_derivative(auto&& fn, double x, double h) {
  return (-fn(x + 2.0 * h) + 8.0 * fn(x + h) - 8.0 * fn(x - h) + fn(x - 2.0 * h)) / (12.0 * h);
}

}  // namespace

cplx wronskian(const LatticeSeq& u, const LatticeSeq& v, int n) {
  return u.at(n + 1) * v.at(n) - u.at(n) * v.at(n + 1);
}

cplx jost_wronskian(const Potential& q, cplx theta) {
  const int n = reference_site(q);
  const JostPoint fp = jost_pair_at(q, theta, n, Side::plus);
  const JostPoint fm = jost_pair_at(q, theta, n, Side::minus);
  return fp.at_next * fm.at_n - fp.at_n * fm.at_next;
}

cplx jost_wronskian_conj(const Potential& q, double theta) {
  const int n = reference_site(q);
  const JostPoint fp = jost_pair_at(q, theta, n, Side::plus);
  const JostPoint fm = jost_pair_at(q, theta, n, Side::minus);
  return fp.at_next * std::conj(fm.at_n) - fp.at_n * std::conj(fm.at_next);
}

ScatteringPoint scattering_at(const Potential& q, double theta) {
  ScatteringPoint p;
  p.W = jost_wronskian(q, theta);
  p.W1 = jost_wronskian_conj(q, theta);
  if (std::abs(p.W) == 0.0) {
    throw NumericalFailure("scattering_at: W(theta) = 0 at theta = " + std::to_string(theta));
  }
  p.T = -2.0 * kI * std::sin(theta) / p.W;
  p.R_plus = -std::conj(p.W1) / p.W;
  p.R_minus = -p.W1 / p.W;
  return p;
}

double default_eps_res(const Potential& q) { return 1e-8 * (1.0 + q.l1_norm()); }

EdgeReport classify_edges(const Potential& q, double eps_res) {
  EdgeReport r;
  r.eps_res = eps_res > 0.0 ? eps_res : default_eps_res(q);
  constexpr double h = 1e-3;
  auto W = [&](double th) { return jost_wronskian(q, th); };
  auto W1 = [&](double th) { return jost_wronskian_conj(q, th); };

  auto edge = [&](double th0, bool& resonant, cplx& Wval, std::optional<cplx>& Wdot, cplx& T, cplx& Rp, cplx& Rm) {
    Wval = W(th0);
    resonant = std::abs(Wval) <= r.eps_res;
    if (resonant) {
      const cplx wd = fourth_order_derivative(W, th0, h);
      if (std::abs(wd) < 1e-6) {
        throw NumericalFailure("classify_edges: resonant edge with vanishing W' at theta = " + std::to_string(th0));
      }
      const cplx w1d = fourth_order_derivative(W1, th0, h);
      Wdot = wd;
      T = -2.0 * kI * std::cos(th0) / wd;
      Rp = -std::conj(w1d) / wd;
      Rm = -w1d / wd;
    } else {
      const cplx w1 = W1(th0);
      T = 0.0;
      Rp = -std::conj(w1) / Wval;
      Rm = -w1 / Wval;
    }
  };
  edge(0.0, r.resonant_at_0, r.W0, r.Wdot0, r.T0, r.R_plus_0, r.R_minus_0);
  edge(kPi, r.resonant_at_4, r.Wpi, r.Wdotpi, r.Tpi, r.R_plus_pi, r.R_minus_pi);
  return r;
}

ScatteringData scattering_coefficients(const Potential& q, const AngleGrid& grid, const Window& window) {
  if (!window.contains(0) || !window.contains(1)) throw InvalidArgument("scattering_coefficients: window too small");
  ScatteringData d{grid, {}, {}, {}, {}, {}, classify_edges(q), 0.0};
  const std::size_t m = grid.size();
  d.W.resize(m);
  d.W1.resize(m);
  d.T.resize(m);
  d.R_plus.resize(m);
  d.R_minus.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double th = grid.node(k);
    const LatticeSeq fp = jost_by_recursion(q, th, window, Side::plus);
    const LatticeSeq fm = jost_by_recursion(q, th, window, Side::minus);
    const cplx W = wronskian(fp, fm, 0);
    if (std::abs(W) == 0.0) throw NumericalFailure("scattering_coefficients: W vanished at a grid node");
    for (int n = window.lo(); n < window.hi(); ++n) {
      d.wronskian_spread = std::max(d.wronskian_spread, std::abs(wronskian(fp, fm, n) - W));
    }
    LatticeSeq fm_conj(window);
    for (int n = window.lo(); n <= window.hi(); ++n) fm_conj[n] = std::conj(fm[n]);
    const cplx W1 = wronskian(fp, fm_conj, 0);
    d.W[k] = W;
    d.W1[k] = W1;
    d.T[k] = -2.0 * kI * std::sin(th) / W;
    d.R_plus[k] = -std::conj(W1) / W;
    d.R_minus[k] = -W1 / W;
  }
  return d;
}

}  // namespace latscat
