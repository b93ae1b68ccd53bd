#include "latscat/wave_op.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latscat/error.hpp"
#include "latscat/jost.hpp"
#include "latscat/spectrum.hpp"

namespace latscat {

namespace {

const cplx kI(0.0, 1.0);
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

// exp(i t A) for a real symmetric A, applied to u.
Eigen::VectorXcd expm_apply(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es, double t,
                            const Eigen::VectorXcd& u) {
  const Eigen::MatrixXcd v = es.eigenvectors().cast<cplx>();
  Eigen::VectorXcd c = v.adjoint() * u;
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::exp(kI * t * es.eigenvalues()(i));
  return v * c;
}

}  // namespace

OperatorMatrix wave_operator_matrix(const PlaneWaveTable& table) {
  const Window& w = table.window();
  const AngleGrid& g = table.grid();
  simd::SplitMatrix c(w.size(), g.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double nu = w.site(i);
    for (std::size_t k = 0; k < g.size(); ++k) c.set(i, k, g.weight(k) * std::exp(-kI * nu * g.node(k)) * kInvSqrt2Pi);
  }
  return OperatorMatrix(w, gram_matrix(table.split(), c), "W", table.meta());
}

OperatorMatrix wave_operator_matrix(const Potential& q, const Window& window, const AngleGrid& grid) {
  return wave_operator_matrix(PlaneWaveTable(q, grid, window));
}

double ls_residual(const PlaneWaveTable& table, int core) {
  const Potential& q = table.potential();
  const Window& w = table.window();
  const AngleGrid& g = table.grid();
  if (core < 0) core = core_half_width(q, w);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double th = g.node(k);
    const double s = th > 0.0 ? 1.0 : -1.0;
    const cplx pre = s * kI / (2.0 * std::sin(th));
    for (int mu = -core; mu <= core; ++mu) {
      cplx sum = 0.0;
      if (!q.empty()) {
        for (int nu = q.support_min(); nu <= q.support_max(); ++nu) {
          sum += std::exp(-s * kI * th * static_cast<double>(std::abs(nu - mu))) * q(nu) * table.psi(nu, k);
        }
      }
      const cplx rhs = std::exp(-kI * th * static_cast<double>(mu)) * kInvSqrt2Pi + pre * sum;
      worst = std::max(worst, std::abs(table.psi(mu, k) - rhs));
    }
  }
  return worst;
}

PearsonReport pearson_probe(const Potential& q, const LatticeSeq& u, const std::vector<double>& t_list,
                            const AngleGrid& grid) {
  const Window& w = u.window();
  const Eigen::MatrixXd h = hamiltonian_matrix(q, w);
  const Eigen::MatrixXd l = hamiltonian_matrix(Potential(), w);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eh(h), el(l);
  if (eh.info() != Eigen::Success || el.info() != Eigen::Success) throw NumericalFailure("pearson_probe: eigensolver failed");
  const OperatorMatrix W = wave_operator_matrix(q, w, grid);
  const Eigen::VectorXcd uv = to_vector(u);
  const Eigen::VectorXcd wu = W.matrix() * uv;
  PearsonReport r;
  constexpr int kEdge = 8;
  for (double t : t_list) {
    // W = F* F0 with the outgoing-kernel plane waves is the limit of
    // e^{-itH} e^{-it Delta} as t -> +infinity; e^{-it Delta} = e^{it(-Delta)}.
    const Eigen::VectorXcd free = expm_apply(el, t, uv);
    double edge = 0.0;
    for (int n = w.lo(); n <= w.hi(); ++n) {
      if (n < w.lo() + kEdge || n > w.hi() - kEdge) edge += std::norm(free(static_cast<Eigen::Index>(w.index(n))));
    }
    edge = std::sqrt(edge);
    if (edge > 1e-8) {
      throw NumericalFailure("pearson_probe: mass " + std::to_string(edge) + " at the window edge for t = " +
                             std::to_string(t) + "; enlarge the window");
    }
    const Eigen::VectorXcd full = expm_apply(eh, -t, free);
    r.t.push_back(t);
    r.residual.push_back((full - wu).norm());
    r.edge_mass.push_back(edge);
  }
  return r;
}

double cutoff_chi(double theta) {
  const double a = std::abs(theta);
  if (a <= kPi / 3.0) return 1.0;
  if (a >= 2.0 * kPi / 3.0) return 0.0;
  return 0.5 * (1.0 + std::cos(3.0 * (a - kPi / 3.0)));
}

namespace {

// h(k) for |k| <= kmax from one panel rule:
// (1/2pi) int sign chi e^{ik theta} = (i/pi) int_0^pi chi sin(k theta), panels split at pi/3 and 2pi/3.
std::vector<cplx> boundary_symbols(int kmax, bool complement) {
  const GaussRule rule = gauss_legendre_rule(64 + kmax / 2);
  std::vector<double> th, wchi;
  for (int p = 0; p < 3; ++p) {
    const double a = p * kPi / 3.0, b = (p + 1) * kPi / 3.0;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t j = 0; j < rule.x.size(); ++j) {
      const double x = mid + half * rule.x[j];
      const double chi = complement ? 1.0 - cutoff_chi(x) : cutoff_chi(x);
      th.push_back(x);
      wchi.push_back(half * rule.w[j] * chi);
    }
  }
  std::vector<cplx> h(static_cast<std::size_t>(2 * kmax + 1));
  for (int k = 0; k <= kmax; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < th.size(); ++j) s += wchi[j] * std::sin(static_cast<double>(k) * th[j]);
    h[static_cast<std::size_t>(kmax + k)] = kI * s / kPi;
    h[static_cast<std::size_t>(kmax - k)] = -kI * s / kPi;
  }
  return h;
}

}  // namespace

cplx boundary_symbol(int k, bool complement) {
  const int m = std::abs(k);
  return boundary_symbols(m, complement)[static_cast<std::size_t>(m + k)];
}

std::array<OperatorMatrix, 4> boundary_operators(const Potential& q, const Window& window) {
  return boundary_operators(q, window, classify_edges(q));
}

std::array<OperatorMatrix, 4> boundary_operators(const Potential& q, const Window& window, const EdgeReport& e) {
  const LatticeSeq mp = jost_by_recursion(q, 0.0, window, Side::plus);
  const LatticeSeq mm = jost_by_recursion(q, 0.0, window, Side::minus);
  const int N = window.half_width();
  const std::vector<cplx> h0 = boundary_symbols(2 * N, false);
  const std::vector<cplx> h1 = boundary_symbols(2 * N, true);
  auto H0 = [&](int k) { return h0[static_cast<std::size_t>(k + 2 * N)]; };
  auto H1 = [&](int k) { return h1[static_cast<std::size_t>(k + 2 * N)]; };
  const auto n = static_cast<Eigen::Index>(window.size());
  std::array<Eigen::MatrixXcd, 4> v;
  for (auto& m : v) m = Eigen::MatrixXcd::Zero(n, n);
  for (int mu = window.lo(); mu <= window.hi(); ++mu) {
    const auto i = static_cast<Eigen::Index>(window.index(mu));
    for (int nu = window.lo(); nu <= window.hi(); ++nu) {
      const auto j = static_cast<Eigen::Index>(window.index(nu));
      if (mu >= 0) {
        v[0](i, j) = mp[mu] * ((e.T0 - 1.0) * H0(mu - nu) - e.R_plus_0 * H0(-mu - nu));
        v[1](i, j) = mp[mu] * ((e.Tpi - 1.0) * H1(mu - nu) - e.R_plus_pi * H1(-mu - nu));
      } else {
        v[2](i, j) = mm[mu] * ((1.0 - e.T0) * H0(mu - nu) + e.R_minus_0 * H0(-mu - nu));
        v[3](i, j) = mm[mu] * ((1.0 - e.Tpi) * H1(mu - nu) + e.R_minus_pi * H1(-mu - nu));
      }
    }
  }
  return {OperatorMatrix(window, std::move(v[0]), "V1"), OperatorMatrix(window, std::move(v[1]), "V2"),
          OperatorMatrix(window, std::move(v[2]), "V3"), OperatorMatrix(window, std::move(v[3]), "V4")};
}

cplx edge_relation_at_zero(const EdgeReport& e) { return e.T0 - 1.0 + e.R_plus_0; }

bool p_boundedness_criterion(const EdgeReport& e) {
  return e.resonant_at_0 && e.resonant_at_4 && std::abs(e.T0 - 1.0) < e.eps_res && std::abs(e.Tpi - 1.0) < e.eps_res;
}

}  // namespace latscat
