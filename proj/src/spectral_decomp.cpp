#include "latscat/spectral_decomp.hpp"

#include <cmath>

#include "latscat/error.hpp"
#include "latscat/jost.hpp"
#include "latscat/scattering.hpp"

namespace latscat {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

}  // namespace

PlaneWaveTable::PlaneWaveTable(const Potential& q, const AngleGrid& grid, const Window& window)
    : q_(q), grid_(grid), window_(window), psi_(window.size(), grid.size()), t_(grid.size()) {
  if (!window.covers(q, 1)) throw InvalidArgument("plane_wave_table: window does not cover the support");
  const std::size_t half = grid.half();
  for (std::size_t j = 0; j < half; ++j) {
    const std::size_t kp = grid.positive_index(j);
    const std::size_t km = grid.mirror(kp);
    const double th = grid.node(kp);
    const cplx T = scattering_at(q, th).T;
    const LatticeSeq fp = jost_by_recursion(q, th, window, Side::plus);
    const LatticeSeq fm = jost_by_recursion(q, th, window, Side::minus);
    t_[kp] = t_[km] = T;
    for (std::size_t i = 0; i < window.size(); ++i) {
      psi_.set(i, kp, T * fp.data()[i] * kInvSqrt2Pi);
      psi_.set(i, km, T * fm.data()[i] * kInvSqrt2Pi);
    }
  }
}

QuadratureMeta PlaneWaveTable::meta() const {
  return {grid_.nodes_per_panel(), grid_.panels_per_half(), grid_.size()};
}

std::vector<cplx> distorted_forward(const LatticeSeq& u, const PlaneWaveTable& table) {
  if (!(u.window() == table.window())) throw InvalidArgument("distorted_forward: window mismatch");
  const auto& p = table.split();
  std::vector<cplx> out(p.cols);
  for (std::size_t i = 0; i < p.rows; ++i) {
    const cplx ui = u.data()[i];
    if (ui == 0.0) continue;
    for (std::size_t k = 0; k < p.cols; ++k) out[k] += p.get(i, k) * ui;
  }
  return out;
}

LatticeSeq distorted_adjoint(std::span<const cplx> g, const PlaneWaveTable& table) {
  const auto& p = table.split();
  if (g.size() != p.cols) throw InvalidArgument("distorted_adjoint: grid size mismatch");
  LatticeSeq out(table.window());
  const auto w = table.grid().weights();
  for (std::size_t i = 0; i < p.rows; ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < p.cols; ++k) s += w[k] * std::conj(p.get(i, k)) * g[k];
    out.data()[i] = s;
  }
  return out;
}

Eigen::MatrixXcd gram_matrix(const simd::SplitMatrix& a, const simd::SplitMatrix& c) {
  using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMajor out(static_cast<Eigen::Index>(a.rows), static_cast<Eigen::Index>(c.rows));
  simd::gram_conj(a, c, std::span<cplx>(out.data(), static_cast<std::size_t>(out.size())));
  return out;
}

simd::SplitMatrix weighted_columns(const PlaneWaveTable& table, std::span<const cplx> factor) {
  const auto& p = table.split();
  if (!factor.empty() && factor.size() != p.cols) throw InvalidArgument("weighted_columns: factor size mismatch");
  const auto w = table.grid().weights();
  simd::SplitMatrix c(p.rows, p.cols);
  for (std::size_t i = 0; i < p.rows; ++i) {
    for (std::size_t k = 0; k < p.cols; ++k) {
      const cplx f = factor.empty() ? cplx(w[k]) : w[k] * factor[k];
      c.set(i, k, f * p.get(i, k));
    }
  }
  return c;
}

OperatorMatrix projection_discrete(const std::vector<EigenPair>& pairs, const Window& window) {
  const auto n = static_cast<Eigen::Index>(window.size());
  Eigen::MatrixXcd pd = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& p : pairs) {
    if (!(p.phi.window() == window)) throw InvalidArgument("projection_discrete: eigenvector window mismatch");
    const Eigen::VectorXcd v = to_vector(p.phi);
    pd += v * v.adjoint();
  }
  return OperatorMatrix(window, std::move(pd), "Pd");
}

OperatorMatrix projection_discrete(const Potential& q, const Window& window) {
  return projection_discrete(find_eigenvalues(q, window), window);
}

OperatorMatrix projection_continuous_quadrature(const PlaneWaveTable& table) {
  return OperatorMatrix(table.window(), gram_matrix(table.split(), weighted_columns(table)), "Pc_quad", table.meta());
}

ProjectionRoutes projection_continuous_two_routes(const Potential& q, const Window& window, const AngleGrid& grid) {
  const OperatorMatrix pd = projection_discrete(q, window);
  const auto n = static_cast<Eigen::Index>(window.size());
  OperatorMatrix eig(window, Eigen::MatrixXcd::Identity(n, n) - pd.matrix(), "Pc_eig");
  return {std::move(eig), projection_continuous_quadrature(PlaneWaveTable(q, grid, window))};
}

cplx resolvent_kernel(const Potential& q, int mu, int nu, cplx theta) {
  const int hi = std::max(mu, nu), lo = std::min(mu, nu);
  const cplx fp = jost_pair_at(q, theta, hi, Side::plus).at_n;
  const cplx fm = jost_pair_at(q, theta, lo, Side::minus).at_n;
  const cplx W = jost_wronskian(q, theta);
  if (std::abs(W) == 0.0) throw NumericalFailure("resolvent_kernel: W vanished");
  return -fp * fm / W;
}

double resolvent_jump_defect(const Potential& q, double lambda, int half_width) {
  if (!(lambda > 0.0 && lambda < 4.0)) throw InvalidArgument("resolvent_jump_defect: lambda must lie in (0, 4)");
  const double th = std::acos(1.0 - 0.5 * lambda);
  const cplx T = scattering_at(q, th).T;
  const int reach = std::max(half_width, q.empty() ? 0 : q.support_radius()) + 2;
  const Window w(reach);
  const LatticeSeq fp = jost_by_recursion(q, th, w, Side::plus);
  const LatticeSeq fm = jost_by_recursion(q, th, w, Side::minus);
  const cplx i2pi(0.0, 2.0 * kPi);
  double defect = 0.0;
  for (int mu = -half_width; mu <= half_width; ++mu) {
    for (int nu = -half_width; nu <= half_width; ++nu) {
      // theta0 in (0, pi) is the limit from Im z < 0; -theta0 the one from Im z > 0.
      const cplx below = resolvent_kernel(q, mu, nu, th);
      const cplx above = resolvent_kernel(q, mu, nu, -th);
      const cplx stone = (above - below) / i2pi;
      const cplx dens = (std::conj(T * fp[mu]) * T * fp[nu] + std::conj(T * fm[mu]) * T * fm[nu]) /
                        (2.0 * kPi * 2.0 * std::sin(th));
      defect = std::max(defect, std::abs(stone - dens));
    }
  }
  return defect;
}

}  // namespace latscat
