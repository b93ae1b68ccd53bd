#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace latscat {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// <n> = sqrt(1 + n^2)
inline double bracket(double n) { return std::sqrt(1.0 + n * n); }

/// Finitely supported real potential q on Z. Leading and trailing zeros are
/// trimmed on construction, so a non-empty potential always has q(min) != 0
/// and q(max) != 0. Reads outside the stored range return 0.
class Potential {
 public:
  Potential() = default;
  Potential(int offset, std::vector<double> values);

  static Potential delta(int site, double amplitude);

  bool empty() const { return values_.empty(); }
  int offset() const { return offset_; }
  std::span<const double> values() const { return values_; }

  /// First and last support site. Only meaningful when !empty().
  int support_min() const { return offset_; }
  int support_max() const { return offset_ + static_cast<int>(values_.size()) - 1; }
  /// max |n| over the support, 0 for the empty potential.
  int support_radius() const;

  double operator()(int n) const {
    const long k = static_cast<long>(n) - offset_;
    if (k < 0 || k >= static_cast<long>(values_.size())) return 0.0;
    return values_[static_cast<std::size_t>(k)];
  }

  double l1_norm() const;
  /// q_-(n) = min(0, q(n))
  Potential negative_part() const;
  Potential negated() const;

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  int offset_ = 0;
  std::vector<double> values_;
};

/// q~(n) = q(-n)
Potential mirror(const Potential& q);

/// eta(mu) = sum_{nu >= mu} |q(nu)|
double eta_tail(const Potential& q, int mu);
/// gamma(mu) = sum_{nu >= mu} (nu - mu) |q(nu)|
double gamma_tail(const Potential& q, int mu);

/// Index set [-N, N].
class Window {
 public:
  explicit Window(int half_width);

  int half_width() const { return half_width_; }
  int lo() const { return -half_width_; }
  int hi() const { return half_width_; }
  std::size_t size() const { return static_cast<std::size_t>(2 * half_width_ + 1); }
  bool contains(int n) const { return n >= lo() && n <= hi(); }
  std::size_t index(int n) const { return static_cast<std::size_t>(n + half_width_); }
  int site(std::size_t index) const { return static_cast<int>(index) - half_width_; }

  /// True when the support of q plus `buffer` sites on each side fits.
  bool covers(const Potential& q, int buffer = 0) const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  int half_width_;
};

/// Buffer for real-angle work: support radius + 8.
int band_buffer(const Potential& q);
/// Buffer for bound-state work: support radius + ceil(-ln(tol) / a_min).
int bound_state_buffer(const Potential& q, double a_min, double tol);

/// Complex sequence on a window. Out-of-window reads throw.
class LatticeSeq {
 public:
  explicit LatticeSeq(Window window) : window_(window), data_(window.size()) {}
  LatticeSeq(Window window, std::vector<cplx> data);

  static LatticeSeq delta(Window window, int site, cplx value = 1.0);
  static LatticeSeq from_potential(Window window, const Potential& q);

  const Window& window() const { return window_; }
  std::size_t size() const { return data_.size(); }

  cplx& at(int n);
  const cplx& at(int n) const;
  cplx& operator[](int n) { return data_[window_.index(n)]; }
  const cplx& operator[](int n) const { return data_[window_.index(n)]; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

 private:
  Window window_;
  std::vector<cplx> data_;
};

/// ||u||_{l^{p,sigma}}; p = kInf gives the weighted sup. Throws for p < 1.
double weighted_norm(const LatticeSeq& u, double p, double sigma);
double weighted_norm(const Potential& q, double p, double sigma);

/// sum_n |n| |q(n)|
double first_moment(const Potential& q);

}  // namespace latscat
