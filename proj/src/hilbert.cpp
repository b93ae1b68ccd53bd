#include "latscat/hilbert.hpp"

#include <algorithm>
#include <cmath>

#include "latscat/free_ops.hpp"

namespace latscat {

cplx hilbert_kernel(int k) {
  if (k % 2 == 0) return 0.0;
  return cplx(0.0, 2.0 / (kPi * static_cast<double>(k)));
}

LatticeSeq discrete_hilbert(const LatticeSeq& v, const Window& out) {
  LatticeSeq h(out);
  const Window& in = v.window();
  for (int m = in.lo(); m <= in.hi(); ++m) {
    const cplx vm = v[m];
    if (vm == 0.0) continue;
    for (int n = out.lo(); n <= out.hi(); ++n) {
      if ((n - m) % 2 != 0) h[n] += hilbert_kernel(n - m) * vm;
    }
  }
  return h;
}

LatticeSeq discrete_hilbert(const LatticeSeq& v) { return discrete_hilbert(v, v.window()); }

OperatorMatrix hilbert_matrix(const Window& window) {
  const auto n = static_cast<Eigen::Index>(window.size());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = hilbert_kernel(static_cast<int>(i - j));
  }
  return OperatorMatrix(window, std::move(h), "hilbert");
}

LatticeSeq hilbert_by_symbol(const LatticeSeq& v, const AngleGrid& grid) {
  std::vector<cplx> g = f0_forward(v, grid);
  for (std::size_t k = 0; k < g.size(); ++k) g[k] *= grid.node(k) > 0.0 ? 1.0 : -1.0;
  return f0_adjoint(g, grid, v.window());
}

double hilbert_symbol_defect(const LatticeSeq& v, const AngleGrid& grid) {
  const LatticeSeq a = discrete_hilbert(v);
  const LatticeSeq b = hilbert_by_symbol(v, grid);
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

}  // namespace latscat
