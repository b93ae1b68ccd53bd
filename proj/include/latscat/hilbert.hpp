#pragma once

#include "latscat/operator_matrix.hpp"
#include "latscat/quadrature.hpp"

namespace latscat {

/// (2i/pi) / k for odd k, 0 for even k.
cplx hilbert_kernel(int k);

/// Hv(nu) = (2i/pi) sum_{nu' in nu + 2Z + 1} v(nu') / (nu - nu'), summed over the window.
LatticeSeq discrete_hilbert(const LatticeSeq& v);
/// Same sum, evaluated on `out` from a v that may live on another window.
LatticeSeq discrete_hilbert(const LatticeSeq& v, const Window& out);

/// Truncation of the kernel to the window.
OperatorMatrix hilbert_matrix(const Window& window);

/// (F0* sign F0 v)(n) on the window of v, by quadrature on `grid`.
LatticeSeq hilbert_by_symbol(const LatticeSeq& v, const AngleGrid& grid);

/// max_n |Hv(n) - (F0* sign F0 v)(n)| over the window.
double hilbert_symbol_defect(const LatticeSeq& v, const AngleGrid& grid);

}  // namespace latscat
