#include "latscat/jost.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "latscat/error.hpp"

namespace latscat {

namespace {

const cplx kI(0.0, 1.0);

void require_covered(const Potential& q, const Window& window, int buffer, const char* who) {
  if (!window.covers(q, buffer)) {
    throw InvalidArgument(std::string(who) + ": window [" + std::to_string(window.lo()) + ", " +
                          std::to_string(window.hi()) + "] does not cover the potential support with buffer " +
                          std::to_string(buffer));
  }
}

}  // namespace

LatticeSeq jost_by_recursion(const Potential& q, cplx theta, const Window& window, Side side) {
  require_covered(q, window, 1, "jost_by_recursion");
  // extended precision: |f| ~ 1/|T| on the far side and [conj f, f] loses |f|^2 eps
  using lcplx = std::complex<long double>;
  const lcplx th(theta.real(), theta.imag());
  const lcplx c2 = 2.0L * std::cos(th);
  std::vector<lcplx> g(window.size());
  auto at = [&](int n) -> lcplx& { return g[window.index(n)]; };
  if (side == Side::plus) {
    const int b = q.empty() ? window.lo() : q.support_max();
    for (int n = window.hi(); n >= window.lo(); --n) {
      if (n >= b) {
        at(n) = lcplx(std::exp(-kI * theta * static_cast<double>(n)));
      } else {
        at(n) = (c2 + static_cast<long double>(q(n + 1))) * at(n + 1) - at(n + 2);
      }
    }
  } else {
    const int a = q.empty() ? window.hi() : q.support_min();
    for (int n = window.lo(); n <= window.hi(); ++n) {
      if (n <= a) {
        at(n) = lcplx(std::exp(kI * theta * static_cast<double>(n)));
      } else {
        at(n) = (c2 + static_cast<long double>(q(n - 1))) * at(n - 1) - at(n - 2);
      }
    }
  }
  LatticeSeq f(window);
  for (int n = window.lo(); n <= window.hi(); ++n) {
    f[n] = cplx(static_cast<double>(at(n).real()), static_cast<double>(at(n).imag()));
  }
  return f;
}

JostPoint jost_pair_at(const Potential& q, cplx theta, int n, Side side) {
  const cplx c2 = 2.0 * std::cos(theta);
  auto expo = [&](int k, double s) { return std::exp(s * kI * theta * static_cast<double>(k)); };
  if (side == Side::plus) {
    if (q.empty() || n >= q.support_max()) return {expo(n, -1.0), expo(n + 1, -1.0)};
    const int b = q.support_max();
    cplx hi2 = expo(b + 1, -1.0);  // f(k + 1)
    cplx hi1 = expo(b, -1.0);      // f(k)
    for (int k = b; k > n; --k) {
      const cplx next = (c2 + q(k)) * hi1 - hi2;  // f(k - 1)
      hi2 = hi1;
      hi1 = next;
    }
    return {hi1, hi2};
  }
  if (q.empty() || n + 1 <= q.support_min()) return {expo(n, 1.0), expo(n + 1, 1.0)};
  const int a = q.support_min();
  cplx lo2 = expo(a - 1, 1.0);  // f(k - 1)
  cplx lo1 = expo(a, 1.0);      // f(k)
  for (int k = a; k < n + 1; ++k) {
    const cplx next = (c2 + q(k)) * lo1 - lo2;  // f(k + 1)
    lo2 = lo1;
    lo1 = next;
  }
  return {lo2, lo1};
}

double volterra_residual(const Potential& q, cplx theta, const LatticeSeq& f, Side side) {
  const Window& w = f.window();
  require_covered(q, w, 0, "volterra_residual");
  double worst = 0.0;
  const double s = side == Side::plus ? -1.0 : 1.0;
  for (int mu = w.lo(); mu <= w.hi(); ++mu) {
    const cplx free = std::exp(s * kI * theta * static_cast<double>(mu));
    cplx sum = 0.0;
    double scale = std::abs(free);
    if (!q.empty()) {
      if (side == Side::plus) {
        for (int nu = std::max(mu, q.support_min()); nu <= q.support_max(); ++nu) {
          const cplx term = cheb_kernel(mu - nu, theta) * q(nu) * f[nu];
          sum += term;
          scale += std::abs(term);
        }
      } else {
        for (int nu = q.support_min(); nu <= std::min(mu, q.support_max()); ++nu) {
          const cplx term = cheb_kernel(nu - mu, theta) * q(nu) * f[nu];
          sum += term;
          scale += std::abs(term);
        }
      }
    }
    const double defect = std::abs(f[mu] - free + sum) / std::max(1.0, scale);
    worst = std::max(worst, defect);
  }
  return worst;
}

JostData::JostData(Side side, Window window, int nu_max, std::vector<double> table, bool exact)
    : side_(side), window_(window), nu_max_(nu_max), table_(std::move(table)), exact_(exact) {
  if (table_.size() != window_.size() * static_cast<std::size_t>(nu_max_ + 1)) {
    throw InvalidArgument("JostData: table size mismatch");
  }
}

double JostData::B(int n, int nu) const {
  if (nu < 0 || nu > nu_max_) throw InvalidArgument("JostData::B: nu out of range");
  if (!window_.contains(n)) throw InvalidArgument("JostData::B: n outside window");
  return table_[window_.index(n) * static_cast<std::size_t>(nu_max_ + 1) + static_cast<std::size_t>(nu)];
}

cplx JostData::m(int n, double theta) const {
  if (!window_.contains(n)) throw InvalidArgument("JostData::m: n outside window");
  const double* row = &table_[window_.index(n) * static_cast<std::size_t>(nu_max_ + 1)];
  const cplx z = std::polar(1.0, -theta);
  cplx acc = 0.0;
  for (int nu = nu_max_; nu >= 1; --nu) acc = (acc + row[nu]) * z;
  return 1.0 + acc;
}

cplx JostData::f(int n, double theta) const {
  const double s = side_ == Side::plus ? -1.0 : 1.0;
  return std::polar(1.0, s * n * theta) * m(n, theta);
}

LatticeSeq JostData::f_on_window(double theta) const {
  LatticeSeq out(window_);
  for (int n = window_.lo(); n <= window_.hi(); ++n) out[n] = f(n, theta);
  return out;
}

int exact_nu_max(const Potential& q, Side side, const Window& window) {
  if (q.empty()) return 2;
  const int edge = side == Side::plus ? q.support_max() : -q.support_min();
  return std::max(2, 2 * (edge - window.lo()) + 1);
}

namespace {

// Table of B_+ for q over the window, row-major (window index, nu).
std::vector<double> plus_table(const Potential& q, const Window& window, int nu_max) {
  const std::size_t cols = static_cast<std::size_t>(nu_max + 1);
  std::vector<double> table(window.size() * cols, 0.0);
  if (q.empty()) return table;
  const int a = q.support_min();
  const int b = q.support_max();

  // Signed tails sum_{l >= m} q(l) for m in [a, b + 1].
  std::vector<double> signed_tail(static_cast<std::size_t>(b - a + 2), 0.0);
  for (int m = b; m >= a; --m) signed_tail[static_cast<std::size_t>(m - a)] = q(m) + signed_tail[static_cast<std::size_t>(m - a + 1)];
  auto eta_signed = [&](int m) {
    if (m > b) return 0.0;
    return signed_tail[static_cast<std::size_t>(std::max(m, a) - a)];
  };

  // Tail sums C(m, k) = sum_{j >= m} q(j) B(j, k) for m in [a, b + 1].
  std::vector<double> tails(static_cast<std::size_t>(b - a + 2) * cols, 0.0);
  auto tail = [&](int m, int k) {
    if (m > b) return 0.0;
    return tails[static_cast<std::size_t>(std::max(m, a) - a) * cols + static_cast<std::size_t>(k)];
  };

  for (int n = std::min(b - 1, window.hi()); n >= window.lo(); --n) {
    double* row = &table[window.index(n) * cols];
    for (int k = 1; k <= nu_max; ++k) {
      const int nu = (k + 1) / 2;
      const int l_first = std::max(0, n + nu - b);
      double s = 0.0;
      if (k % 2 == 0) {
        for (int l = l_first; l <= nu - 1; ++l) s += tail(n + nu - l, 2 * l + 1);
      } else {
        s = eta_signed(n + nu);
        for (int l = l_first; l <= nu - 1; ++l) s += tail(n + nu - l, 2 * l);
      }
      row[k] = s;
    }
    if (n >= a) {
      double* c = &tails[static_cast<std::size_t>(n - a) * cols];
      const double* c_next = &tails[static_cast<std::size_t>(n - a + 1) * cols];
      for (std::size_t k = 0; k < cols; ++k) c[k] = q(n) * row[k] + c_next[k];
    }
  }
  return table;
}

}  // namespace

JostData b_coefficients(const Potential& q, Side side, const Window& window, int nu_max) {
  require_covered(q, window, 0, "b_coefficients");
  if (nu_max <= 0) nu_max = exact_nu_max(q, side, window);
  if (nu_max < 1) throw InvalidArgument("b_coefficients: nu_max must be >= 1");
  const std::size_t cols = static_cast<std::size_t>(nu_max + 1);
  std::vector<double> table;
  if (side == Side::plus) {
    table = plus_table(q, window, nu_max);
  } else {
    const std::vector<double> mirrored = plus_table(mirror(q), window, nu_max);
    table.resize(mirrored.size());
    for (int n = window.lo(); n <= window.hi(); ++n) {
      std::copy_n(&mirrored[window.index(-n) * cols], cols, &table[window.index(n) * cols]);
    }
  }
  bool exact = true;
  if (nu_max >= 2) {
    for (std::size_t r = 0; r < window.size() && exact; ++r) {
      exact = table[r * cols + cols - 1] == 0.0 && table[r * cols + cols - 2] == 0.0;
    }
  } else {
    exact = false;
  }
  return JostData(side, window, nu_max, std::move(table), exact);
}

}  // namespace latscat
