#include "latscat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latscat/error.hpp"

namespace latscat {

Potential::Potential(int offset, std::vector<double> values) : offset_(offset) {
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("potential values must be finite");
  }
  auto first = std::find_if(values.begin(), values.end(), [](double v) { return v != 0.0; });
  if (first == values.end()) {
    offset_ = 0;
    return;
  }
  auto last = std::find_if(values.rbegin(), values.rend(), [](double v) { return v != 0.0; }).base();
  offset_ = offset + static_cast<int>(first - values.begin());
  values_.assign(first, last);
}

Potential Potential::delta(int site, double amplitude) { return Potential(site, {amplitude}); }

int Potential::support_radius() const {
  if (empty()) return 0;
  return std::max(std::abs(support_min()), std::abs(support_max()));
}

double Potential::l1_norm() const {
  double s = 0.0;
  for (double v : values_) s += std::abs(v);
  return s;
}

Potential Potential::negative_part() const {
  std::vector<double> v(values_);
  for (double& x : v) x = std::min(0.0, x);
  return Potential(offset_, std::move(v));
}

Potential Potential::negated() const {
  std::vector<double> v(values_);
  for (double& x : v) x = -x;
  return Potential(offset_, std::move(v));
}

Potential mirror(const Potential& q) {
  if (q.empty()) return q;
  std::vector<double> v(q.values().rbegin(), q.values().rend());
  return Potential(-q.support_max(), std::move(v));
}

double eta_tail(const Potential& q, int mu) {
  double s = 0.0;
  if (q.empty()) return s;
  for (int n = std::max(mu, q.support_min()); n <= q.support_max(); ++n) s += std::abs(q(n));
  return s;
}

double gamma_tail(const Potential& q, int mu) {
  double s = 0.0;
  if (q.empty()) return s;
  for (int n = std::max(mu, q.support_min()); n <= q.support_max(); ++n) s += (n - mu) * std::abs(q(n));
  return s;
}

double first_moment(const Potential& q) {
  double s = 0.0;
  if (q.empty()) return s;
  for (int n = q.support_min(); n <= q.support_max(); ++n) s += std::abs(n) * std::abs(q(n));
  return s;
}

Window::Window(int half_width) : half_width_(half_width) {
  if (half_width < 1) throw InvalidArgument("window half width must be >= 1, got " + std::to_string(half_width));
}

bool Window::covers(const Potential& q, int buffer) const {
  if (q.empty()) return half_width_ >= buffer;
  return q.support_min() - buffer >= lo() && q.support_max() + buffer <= hi();
}

int band_buffer(const Potential& q) { return q.support_radius() + 8; }

int bound_state_buffer(const Potential& q, double a_min, double tol) {
  if (!(a_min > 0.0) || !(tol > 0.0 && tol < 1.0)) throw InvalidArgument("bound_state_buffer: need a_min > 0, 0 < tol < 1");
  return q.support_radius() + static_cast<int>(std::ceil(-std::log(tol) / a_min));
}

LatticeSeq::LatticeSeq(Window window, std::vector<cplx> data) : window_(window), data_(std::move(data)) {
  if (data_.size() != window_.size()) throw InvalidArgument("LatticeSeq: data length does not match window");
}

LatticeSeq LatticeSeq::delta(Window window, int site, cplx value) {
  LatticeSeq u(window);
  u.at(site) = value;
  return u;
}

LatticeSeq LatticeSeq::from_potential(Window window, const Potential& q) {
  LatticeSeq u(window);
  for (int n = window.lo(); n <= window.hi(); ++n) u[n] = q(n);
  return u;
}

cplx& LatticeSeq::at(int n) {
  if (!window_.contains(n)) throw InvalidArgument("LatticeSeq: site " + std::to_string(n) + " outside window");
  return data_[window_.index(n)];
}

const cplx& LatticeSeq::at(int n) const {
  if (!window_.contains(n)) throw InvalidArgument("LatticeSeq: site " + std::to_string(n) + " outside window");
  return data_[window_.index(n)];
}

namespace {

template <class Get>
double weighted_norm_impl(int lo, int hi, Get&& abs_at, double p, double sigma) {
  if (!(p >= 1.0)) throw InvalidArgument("weighted_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (int n = lo; n <= hi; ++n) m = std::max(m, std::pow(bracket(n), sigma) * abs_at(n));
    return m;
  }
  double s = 0.0;
  for (int n = lo; n <= hi; ++n) {
    const double a = abs_at(n);
    if (a != 0.0) s += std::pow(bracket(n), p * sigma) * std::pow(a, p);
  }
  return std::pow(s, 1.0 / p);
}

}  // namespace

double weighted_norm(const LatticeSeq& u, double p, double sigma) {
  const Window& w = u.window();
  return weighted_norm_impl(w.lo(), w.hi(), [&](int n) { return std::abs(u[n]); }, p, sigma);
}

double weighted_norm(const Potential& q, double p, double sigma) {
  if (q.empty()) {
    if (!(p >= 1.0)) throw InvalidArgument("weighted_norm: p must be >= 1");
    return 0.0;
  }
  return weighted_norm_impl(q.support_min(), q.support_max(), [&](int n) { return std::abs(q(n)); }, p, sigma);
}

}  // namespace latscat
