#pragma once

#include <Eigen/Dense>
#include <vector>

#include "latscat/free_ops.hpp"
#include "latscat/lattice.hpp"

namespace latscat {

struct EigenPair {
  double lambda = 0.0;
  ComplexAngle angle;
  LatticeSeq phi;  ///< real, l2-normalized on the window
  double decay_rate = 0.0;
  /// max(|phi(lo)|, |phi(hi)|); large values mean the window is too small.
  double edge_amplitude = 0.0;
};

/// W(theta(a)) on a ray; real up to roundoff.
double ray_wronskian(const Potential& q, ComplexAngle angle);

/// arccosh(1 + ||q||_1 / 2) + 1
double default_a_max(const Potential& q);

/// Roots of W on the two rays, bracketed on 64 log-spaced a in [1e-4, a_max]
/// and refined by bisection to |d lambda| < tol. Sorted by lambda.
/// a_max <= 0 selects default_a_max. Throws NumericalFailure when W vanishes
/// at a_max (increase a_max) or when two roots are closer than 10 tol.
std::vector<EigenPair> find_eigenvalues(const Potential& q, const Window& window, double a_max = 0.0,
                                        double tol = 1e-12);

/// Number of sites nu in [lo, hi - 1] with u(nu) = 0 or u(nu) u(nu+1) < 0,
/// u = f_+(., theta(lambda)). A value counts as zero when it is below 1e-12
/// times its neighbours. Throws InvalidArgument for lambda > 0.
int oscillation_count(const Potential& q, double lambda, const Window& window);

struct CountReport {
  int negative = 0;                 ///< eigenvalues below 0
  int above_four = 0;               ///< eigenvalues above 4, from the upper ray
  int above_four_reflected = 0;     ///< eigenvalues below 0 of -q
  double bound_total = 0.0;         ///< 4 + sum |nu q(nu)|
  double bound_negative = 0.0;      ///< 2 + sum |nu q_-(nu)|
  double bound_above = 0.0;         ///< 2 + sum |nu (-q)_-(nu)|
  double reflection_residual = 0.0; ///< max over pairs of |(H - (4 - mu)) v|, v = (-1)^nu phi
  bool total_ok = false;
  bool negative_ok = false;
  bool above_ok = false;
  bool reflection_ok = false;
  bool ok() const { return total_ok && negative_ok && above_ok && reflection_ok; }
};

CountReport negative_count_bound_check(const Potential& q, const Window& window);

enum class Boundary { dirichlet };

struct DenseSpectrum {
  Window window;
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXd vectors;  ///< columns, orthonormal
};

/// Full diagonalization of the truncated tridiagonal H. Throws InvalidArgument
/// for N > 2048.
DenseSpectrum dense_reference_spectrum(const Potential& q, const Window& window, Boundary boundary = Boundary::dirichlet);

/// sup over interior sites of |(H - lambda) phi|
double eigen_residual(const Potential& q, double lambda, const LatticeSeq& phi);

}  // namespace latscat
