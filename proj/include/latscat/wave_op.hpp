#pragma once

#include <array>
#include <vector>

#include "latscat/operator_matrix.hpp"
#include "latscat/scattering.hpp"
#include "latscat/spectral_decomp.hpp"

namespace latscat {

/// W(mu, nu) = int conj(psi(mu, theta)) e^{-i nu theta} / sqrt(2 pi) d theta.
OperatorMatrix wave_operator_matrix(const PlaneWaveTable& table);
OperatorMatrix wave_operator_matrix(const Potential& q, const Window& window, const AngleGrid& grid);

/// Sup over the grid and |mu| <= core of the defect of
///   psi(mu, theta) = e^{-i mu theta} / sqrt(2 pi) + (i / 2 sin theta) sum_nu e^{-i theta |nu - mu|} q(nu) psi(nu, theta)
/// for theta > 0, and of the conjugate-kernel form with the opposite sign for theta < 0.
/// core < 0 selects core_half_width.
double ls_residual(const PlaneWaveTable& table, int core = -1);

struct PearsonReport {
  std::vector<double> t;
  std::vector<double> residual;  ///< ||e^{-itH} e^{-it Delta} u - W u||_2
  std::vector<double> edge_mass; ///< l2 mass of e^{it Delta} u within 8 sites of the window edge
};

/// Dense-exponential evolutions on the window against the stationary W u.
/// The time direction is the one in which W = F* F0 is the limit: with these
/// plane waves e^{itH} e^{it Delta} u tends to conj(W) u, not W u.
/// Throws NumericalFailure when the edge mass exceeds 1e-8 at some t.
PearsonReport pearson_probe(const Potential& q, const LatticeSeq& u, const std::vector<double>& t_list,
                            const AngleGrid& grid);

/// Even raised-cosine cutoff: 1 for |theta| <= pi/3, 0 for |theta| >= 2pi/3.
double cutoff_chi(double theta);

/// h(k) = (1/2pi) int sign(theta) chi(theta) e^{ik theta} d theta (chi1 = 1 - chi when `complement`).
cplx boundary_symbol(int k, bool complement);

/// V1..V4 on the window (indices 0..3), assembled from the edge extension.
std::array<OperatorMatrix, 4> boundary_operators(const Potential& q, const Window& window);
std::array<OperatorMatrix, 4> boundary_operators(const Potential& q, const Window& window, const EdgeReport& edges);

/// T(0) - 1 + R_+(0)
cplx edge_relation_at_zero(const EdgeReport& edges);

/// True iff both edges are resonant and |T(0) - 1|, |T(pi) - 1| < eps_res.
bool p_boundedness_criterion(const EdgeReport& edges);

}  // namespace latscat
