#include "latscat/operator_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "latscat/error.hpp"

namespace latscat {

OperatorMatrix::OperatorMatrix(Window window, Eigen::MatrixXcd entries, std::string builder, QuadratureMeta meta)
    : window_(window), a_(std::move(entries)), builder_(std::move(builder)), meta_(meta) {
  const auto n = static_cast<Eigen::Index>(window_.size());
  if (a_.rows() != n || a_.cols() != n) throw InvalidArgument("OperatorMatrix: shape does not match the window");
  if (!a_.allFinite()) throw NumericalFailure("OperatorMatrix(" + builder_ + "): non-finite entries");
}

Eigen::MatrixXcd OperatorMatrix::core(int core_half_width) const {
  return core_block(a_, window_, core_half_width);
}

OperatorMatrix OperatorMatrix::restricted(Window smaller) const {
  if (smaller.half_width() > window_.half_width()) throw InvalidArgument("OperatorMatrix::restricted: window grows");
  return OperatorMatrix(smaller, core(smaller.half_width()), builder_, meta_);
}

int core_half_width(const Potential& q, const Window& window) {
  return std::max(0, window.half_width() - band_buffer(q));
}

Eigen::MatrixXcd core_block(const Eigen::MatrixXcd& a, const Window& window, int core_half_width) {
  if (core_half_width > window.half_width() || core_half_width < 0) throw InvalidArgument("core_block: bad core");
  const auto start = static_cast<Eigen::Index>(window.index(-core_half_width));
  const auto len = static_cast<Eigen::Index>(2 * core_half_width + 1);
  return a.block(start, start, len, len);
}

double max_abs(const Eigen::MatrixXcd& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

Eigen::MatrixXd hamiltonian_matrix(const Potential& q, const Window& window) {
  const auto n = static_cast<Eigen::Index>(window.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    h(i, i) = 2.0 + q(window.site(static_cast<std::size_t>(i)));
    if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = -1.0;
  }
  return h;
}

Eigen::MatrixXcd to_complex(const Eigen::MatrixXd& a) { return a.cast<cplx>(); }

Eigen::VectorXcd to_vector(const LatticeSeq& u) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) v(static_cast<Eigen::Index>(i)) = u.data()[i];
  return v;
}

LatticeSeq to_seq(const Eigen::VectorXcd& v, const Window& window) {
  if (static_cast<std::size_t>(v.size()) != window.size()) throw InvalidArgument("to_seq: size mismatch");
  return LatticeSeq(window, std::vector<cplx>(v.data(), v.data() + v.size()));
}

double lp_norm_probe(const Eigen::MatrixXcd& a, double p) {
  if (a.size() == 0) return 0.0;
  if (p == 1.0) return a.cwiseAbs().colwise().sum().maxCoeff();
  if (p == kInf) return a.cwiseAbs().rowwise().sum().maxCoeff();
  if (p == 2.0) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues()(0);
  }
  throw InvalidArgument("lp_norm_probe: p must be 1, 2 or inf");
}

}  // namespace latscat
