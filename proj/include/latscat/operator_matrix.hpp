#pragma once

#include <Eigen/Dense>
#include <string>

#include "latscat/lattice.hpp"

namespace latscat {

struct QuadratureMeta {
  int nodes_per_panel = 0;
  int panels_per_half = 0;
  std::size_t total_nodes = 0;  ///< 0 for matrices that involve no quadrature
};

/// Dense complex matrix indexed by window sites, A(mu, nu) = matrix()(index(mu), index(nu)).
class OperatorMatrix {
 public:
  /// Throws NumericalFailure on non-finite entries and InvalidArgument on a
  /// shape mismatch.
  OperatorMatrix(Window window, Eigen::MatrixXcd entries, std::string builder, QuadratureMeta meta = {});

  const Window& window() const { return window_; }
  const Eigen::MatrixXcd& matrix() const { return a_; }
  const std::string& builder() const { return builder_; }
  const QuadratureMeta& quadrature() const { return meta_; }

  cplx operator()(int mu, int nu) const { return a_(window_.index(mu), window_.index(nu)); }

  /// Block over |mu|, |nu| <= core.
  Eigen::MatrixXcd core(int core_half_width) const;
  OperatorMatrix restricted(Window smaller) const;

 private:
  Window window_;
  Eigen::MatrixXcd a_;
  std::string builder_;
  QuadratureMeta meta_;
};

/// Core half width N - (support radius + 8), at least 0.
int core_half_width(const Potential& q, const Window& window);

/// Block over |mu|, |nu| <= core of a window-indexed matrix.
Eigen::MatrixXcd core_block(const Eigen::MatrixXcd& a, const Window& window, int core_half_width);

double max_abs(const Eigen::MatrixXcd& a);

/// Dirichlet truncation of H = -Delta + q (real symmetric tridiagonal).
Eigen::MatrixXd hamiltonian_matrix(const Potential& q, const Window& window);

Eigen::MatrixXcd to_complex(const Eigen::MatrixXd& a);
Eigen::VectorXcd to_vector(const LatticeSeq& u);
LatticeSeq to_seq(const Eigen::VectorXcd& v, const Window& window);

/// p = 1: max column sum; p = kInf: max row sum; p = 2: largest singular value.
/// Throws InvalidArgument for any other p.
double lp_norm_probe(const Eigen::MatrixXcd& a, double p);
inline double lp_norm_probe(const OperatorMatrix& a, double p) { return lp_norm_probe(a.matrix(), p); }

}  // namespace latscat
