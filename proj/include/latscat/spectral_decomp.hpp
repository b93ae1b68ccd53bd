#pragma once

#include <span>
#include <vector>

#include "latscat/operator_matrix.hpp"
#include "latscat/quadrature.hpp"
#include "latscat/simd/gram.hpp"
#include "latscat/spectrum.hpp"

namespace latscat {

/// psi(nu, theta) on window x grid:
///   theta > 0:  T(theta) f_+(nu, theta) / sqrt(2 pi)
///   theta < 0:  T(|theta|) f_-(nu, |theta|) / sqrt(2 pi)
/// Normalized against d theta, so that F F* = 1 and F* F = Pc.
class PlaneWaveTable {
 public:
  PlaneWaveTable(const Potential& q, const AngleGrid& grid, const Window& window);

  const Potential& potential() const { return q_; }
  const AngleGrid& grid() const { return grid_; }
  const Window& window() const { return window_; }
  cplx psi(int nu, std::size_t k) const { return psi_.get(window_.index(nu), k); }
  /// Rows are window sites, columns grid nodes.
  const simd::SplitMatrix& split() const { return psi_; }
  /// T(|theta_k|)
  cplx transmission(std::size_t k) const { return t_[k]; }
  QuadratureMeta meta() const;

 private:
  Potential q_;
  AngleGrid grid_;
  Window window_;
  simd::SplitMatrix psi_;
  std::vector<cplx> t_;
};

inline PlaneWaveTable plane_wave_table(const Potential& q, const AngleGrid& grid, const Window& window) {
  return PlaneWaveTable(q, grid, window);
}

/// F[u](theta_k) = sum_n psi(n, theta_k) u(n). u must live on the table window.
std::vector<cplx> distorted_forward(const LatticeSeq& u, const PlaneWaveTable& table);
/// F*[g](n) = sum_k w_k conj(psi(n, theta_k)) g_k
LatticeSeq distorted_adjoint(std::span<const cplx> g, const PlaneWaveTable& table);

/// out(i, j) = sum_k conj(a(i, k)) c(j, k) through the dispatched kernel.
Eigen::MatrixXcd gram_matrix(const simd::SplitMatrix& a, const simd::SplitMatrix& c);
/// Columns of the table scaled by the quadrature weights times `factor(k)`.
simd::SplitMatrix weighted_columns(const PlaneWaveTable& table, std::span<const cplx> factor = {});

/// Pd = sum_j phi_j phi_j^*
OperatorMatrix projection_discrete(const std::vector<EigenPair>& pairs, const Window& window);
OperatorMatrix projection_discrete(const Potential& q, const Window& window);
/// Pc(mu, nu) = int conj(psi(mu, theta)) psi(nu, theta) d theta by quadrature.
OperatorMatrix projection_continuous_quadrature(const PlaneWaveTable& table);

struct ProjectionRoutes {
  OperatorMatrix eig;   ///< I - Pd
  OperatorMatrix quad;  ///< plane-wave quadrature
};
ProjectionRoutes projection_continuous_two_routes(const Potential& q, const Window& window, const AngleGrid& grid);

/// Resolvent kernel (H - z)^{-1}(mu, nu) = -f_+(max) f_-(min) / W(theta), theta in
/// the closed lower half strip with 2(1 - cos theta) = z.
cplx resolvent_kernel(const Potential& q, int mu, int nu, cplx theta);

/// Spectral density check at lambda in (0, 4): the jump of the resolvent
/// across the band, divided by 2 pi i, against
///   sum_{theta = +-theta0} conj(psi(mu, theta)) psi(nu, theta) / (2 sin theta0).
/// Returns the max defect over |mu|, |nu| <= half_width.
double resolvent_jump_defect(const Potential& q, double lambda, int half_width);

}  // namespace latscat
