#include "latscat/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latscat/error.hpp"
#include "latscat/jost.hpp"
#include "latscat/scattering.hpp"

namespace latscat {

namespace {

using Branch = ComplexAngle::Branch;

double lambda_of(Branch b, double a) { return ComplexAngle{b, a}.energy(); }

// sign(W) scanning on one ray, then bisection in a.
std::vector<double> ray_roots(const Potential& q, Branch branch, double a_max, double tol) {
  constexpr int kGrid = 64;
  constexpr double kAmin = 1e-4;
  std::vector<double> a(kGrid), w(kGrid);
  for (int j = 0; j < kGrid; ++j) {
    a[j] = kAmin * std::pow(a_max / kAmin, static_cast<double>(j) / (kGrid - 1));
    w[j] = ray_wronskian(q, {branch, a[j]});
  }
  const double scale = 1.0 + q.l1_norm();
  if (std::abs(w.back()) <= 1e-12 * scale * std::cosh(a_max)) {
    throw NumericalFailure("find_eigenvalues: root at the bracket endpoint a_max = " + std::to_string(a_max) +
                           "; increase a_max");
  }
  std::vector<double> roots;
  for (int j = 0; j + 1 < kGrid; ++j) {
    if (w[j] == 0.0) {
      roots.push_back(a[j]);
      continue;
    }
    if ((w[j] < 0.0) == (w[j + 1] < 0.0) || w[j + 1] == 0.0) continue;
    double lo = a[j], hi = a[j + 1];
    double wlo = w[j];
    // Bisect past tol until the bracket collapses in floating point; the
    // eigenvector is glued from f_+ and f_-, so its accuracy follows W(a).
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double wm = ray_wronskian(q, {branch, mid});
      if (wm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((wm < 0.0) == (wlo < 0.0)) {
        lo = mid;
        wlo = wm;
      } else {
        hi = mid;
      }
    }
    if (std::abs(lambda_of(branch, hi) - lambda_of(branch, lo)) >= tol) {
      throw NumericalFailure("find_eigenvalues: bisection did not reach tol");
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

EigenPair build_pair(const Potential& q, ComplexAngle angle, const Window& window) {
  LatticeSeq fp = jost_by_recursion(q, angle, window, Side::plus);
  // f_+ is proportional to f_- at an eigenvalue. Left of the support use the
  // exact f_- exponential so the decaying tail is not carried by the
  // recursion in its unstable direction.
  const int a = q.support_min();
  const cplx theta = angle.theta();
  const cplx scale = fp[a] / std::exp(cplx(0.0, 1.0) * theta * static_cast<double>(a));
  for (int n = window.lo(); n < a; ++n) fp[n] = scale * std::exp(cplx(0.0, 1.0) * theta * static_cast<double>(n));
  double norm2 = 0.0;
  for (int n = window.lo(); n <= window.hi(); ++n) {
    fp[n] = fp[n].real();
    norm2 += std::norm(fp[n]);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  int peak = window.lo();
  for (int n = window.lo(); n <= window.hi(); ++n) {
    fp[n] *= inv;
    if (std::abs(fp[n]) > std::abs(fp[peak])) peak = n;
  }
  if (fp[peak].real() < 0.0) {
    for (int n = window.lo(); n <= window.hi(); ++n) fp[n] = -fp[n];
  }
  EigenPair p{angle.energy(), angle, fp, angle.a, std::max(std::abs(fp[window.lo()]), std::abs(fp[window.hi()]))};
  return p;
}

}  // namespace

double ray_wronskian(const Potential& q, ComplexAngle angle) { return jost_wronskian(q, angle.theta()).real(); }

double default_a_max(const Potential& q) { return std::acosh(1.0 + 0.5 * q.l1_norm()) + 1.0; }

std::vector<EigenPair> find_eigenvalues(const Potential& q, const Window& window, double a_max, double tol) {
  if (q.empty()) return {};
  if (!(tol > 0.0)) throw InvalidArgument("find_eigenvalues: tol must be positive");
  if (a_max <= 0.0) a_max = default_a_max(q);
  if (!window.covers(q, 1)) throw InvalidArgument("find_eigenvalues: window does not cover the support");
  std::vector<EigenPair> out;
  for (Branch b : {Branch::lower, Branch::upper}) {
    for (double a : ray_roots(q, b, a_max, tol)) out.push_back(build_pair(q, {b, a}, window));
  }
  std::sort(out.begin(), out.end(), [](const EigenPair& x, const EigenPair& y) { return x.lambda < y.lambda; });
  for (std::size_t j = 1; j < out.size(); ++j) {
    if (out[j].lambda - out[j - 1].lambda < 10.0 * tol) {
      throw NumericalFailure("find_eigenvalues: two roots closer than 10 tol near lambda = " +
                             std::to_string(out[j].lambda));
    }
  }
  return out;
}

int oscillation_count(const Potential& q, double lambda, const Window& window) {
  if (lambda > 0.0) throw InvalidArgument("oscillation_count: lambda must be <= 0");
  if (!window.covers(q, 1)) throw InvalidArgument("oscillation_count: window does not cover the support");
  const double a = lambda == 0.0 ? 0.0 : std::acosh(1.0 - 0.5 * lambda);
  const double c2 = 2.0 * std::cosh(a);
  // u(n) = mant[n] * 2^expo[n]; the recursion only ever sees the last two
  // sites, which share one exponent, so nothing overflows or underflows.
  const std::size_t m = window.size();
  std::vector<double> mant(m);
  std::vector<int> expo(m, 0);
  const int b = q.empty() ? window.hi() : std::min(q.support_max(), window.hi());
  for (int n = window.hi(); n >= b; --n) {
    const double x = -a * static_cast<double>(n - b) / std::log(2.0);
    const int e = static_cast<int>(std::floor(x));
    mant[window.index(n)] = std::exp2(x - e);
    expo[window.index(n)] = e;
  }
  for (int n = b - 1; n >= window.lo(); --n) {
    const std::size_t i1 = window.index(n + 1), i2 = window.index(n + 2);
    const int e = expo[i1];
    const double u2 = std::ldexp(mant[i2], expo[i2] - e);
    double u0 = (c2 + q(n + 1)) * mant[i1] - u2;
    int e0 = e;
    if (u0 != 0.0) {
      int shift = 0;
      u0 = std::frexp(u0, &shift);
      e0 += shift;
    }
    mant[window.index(n)] = u0;
    expo[window.index(n)] = e0;
  }
  auto is_zero = [&](std::size_t i) {
    if (mant[i] == 0.0) return true;
    double nb = 0.0;
    if (i > 0) nb = std::max(nb, std::abs(std::ldexp(mant[i - 1], expo[i - 1] - expo[i])));
    if (i + 1 < m) nb = std::max(nb, std::abs(std::ldexp(mant[i + 1], expo[i + 1] - expo[i])));
    return std::abs(mant[i]) <= 1e-12 * nb;
  };
  int count = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (is_zero(i)) {
      ++count;
    } else if (!is_zero(i + 1) && mant[i] * mant[i + 1] < 0.0) {
      ++count;
    }
  }
  return count;
}

double eigen_residual(const Potential& q, double lambda, const LatticeSeq& phi) {
  const Window& w = phi.window();
  double r = 0.0;
  for (int n = w.lo() + 1; n < w.hi(); ++n) {
    const cplx hphi = (2.0 + q(n)) * phi[n] - phi[n + 1] - phi[n - 1];
    r = std::max(r, std::abs(hphi - lambda * phi[n]));
  }
  return r;
}

CountReport negative_count_bound_check(const Potential& q, const Window& window) {
  CountReport r;
  const auto pairs = find_eigenvalues(q, window);
  const Potential mq = q.negated();
  const auto reflected = find_eigenvalues(mq, window);
  for (const auto& p : pairs) {
    if (p.lambda < 0.0) ++r.negative;
    if (p.lambda > 4.0) ++r.above_four;
  }
  for (const auto& p : reflected) {
    if (p.lambda >= 0.0) continue;
    ++r.above_four_reflected;
    LatticeSeq v(window);
    for (int n = window.lo(); n <= window.hi(); ++n) v[n] = (n % 2 == 0 ? 1.0 : -1.0) * p.phi[n];
    r.reflection_residual = std::max(r.reflection_residual, eigen_residual(q, 4.0 - p.lambda, v));
  }
  r.bound_total = 4.0 + first_moment(q);
  r.bound_negative = 2.0 + first_moment(q.negative_part());
  r.bound_above = 2.0 + first_moment(mq.negative_part());
  r.total_ok = static_cast<double>(pairs.size()) <= r.bound_total;
  r.negative_ok = r.negative <= r.bound_negative;
  r.above_ok = r.above_four <= r.bound_above;
  r.reflection_ok = r.above_four == r.above_four_reflected && r.reflection_residual < 1e-9;
  return r;
}

DenseSpectrum dense_reference_spectrum(const Potential& q, const Window& window, Boundary) {
  if (window.half_width() > 2048) throw InvalidArgument("dense_reference_spectrum: window too large");
  const auto n = static_cast<Eigen::Index>(window.size());
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub = Eigen::VectorXd::Constant(std::max<Eigen::Index>(n - 1, 0), -1.0);
  for (Eigen::Index i = 0; i < n; ++i) diag(i) = 2.0 + q(window.site(static_cast<std::size_t>(i)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericalFailure("dense_reference_spectrum: eigensolver failed");
  return {window, es.eigenvalues(), es.eigenvectors()};
}

}  // namespace latscat
