#pragma once

#include <vector>

#include "latscat/free_ops.hpp"
#include "latscat/lattice.hpp"

namespace latscat {

/// f_+ is normalized at +infinity (f_+ ~ e^{-i n theta}), f_- at -infinity
/// (f_- ~ e^{+i n theta}).
enum class Side { plus, minus };

inline int side_sign(Side s) { return s == Side::plus ? 1 : -1; }

/// Jost solution of H f = 2(1 - cos theta) f on the window by the three-term
/// recursion. f_+ is the exact exponential on n >= support_max and is carried
/// leftwards through the support; f_- mirrors this. For theta in D this is the
/// growing direction, so the recursion is stable there.
///
/// Throws InvalidArgument when the window does not cover the support plus one
/// site on each side.
LatticeSeq jost_by_recursion(const Potential& q, cplx theta, const Window& window, Side side);
inline LatticeSeq jost_by_recursion(const Potential& q, ComplexAngle angle, const Window& window, Side side) {
  return jost_by_recursion(q, angle.theta(), window, side);
}

/// Jost values at n and n + 1 only, without building the whole window.
struct JostPoint {
  cplx at_n;
  cplx at_next;
};
JostPoint jost_pair_at(const Potential& q, cplx theta, int n, Side side);

/// Sup over interior sites of the defect of the Volterra equation
///   f_+(mu) = e^{-i mu theta} - sum_{nu >= mu} S_{mu-nu}(theta) q(nu) f_+(nu)
///   f_-(mu) = e^{+i mu theta} - sum_{nu <= mu} S_{nu-mu}(theta) q(nu) f_-(nu)
/// with S_k = sin(k theta)/sin(theta) evaluated by cheb_kernel. The sums only
/// run over the support, so every window site is an interior site as long as
/// the window covers the support.
double volterra_residual(const Potential& q, cplx theta, const LatticeSeq& f, Side side);

/// Coefficients of m_+(n, theta) = 1 + sum_{nu >= 1} B_+(n, nu) e^{-i nu theta}
/// (and of m_- for the minus side), tabulated for n in the window and
/// 0 <= nu <= nu_max. B(n, 0) = 0.
class JostData {
 public:
  JostData(Side side, Window window, int nu_max, std::vector<double> table, bool exact);

  Side side() const { return side_; }
  const Window& window() const { return window_; }
  int nu_max() const { return nu_max_; }
  /// True when the two top nu-slices vanish identically, i.e. the series is
  /// the exact polynomial and not a truncation.
  bool exact() const { return exact_; }

  double B(int n, int nu) const;
  /// m(n, theta) for real theta (Horner in e^{-i theta}).
  cplx m(int n, double theta) const;
  /// f(n, theta) = e^{-+ i n theta} m(n, theta)
  cplx f(int n, double theta) const;
  LatticeSeq f_on_window(double theta) const;

 private:
  Side side_;
  Window window_;
  int nu_max_;
  std::vector<double> table_;  // row n (window index), column nu
  bool exact_;
};

/// Smallest nu_max for which the table over `window` is exact plus two
/// vanishing guard slices.
int exact_nu_max(const Potential& q, Side side, const Window& window);

/// Double recursion for B_+ evaluated with tail sums over the support; the
/// minus table applies the same recursion to mirror(q) and reflects n.
/// nu_max <= 0 selects exact_nu_max.
JostData b_coefficients(const Potential& q, Side side, const Window& window, int nu_max = 0);

}  // namespace latscat
