#include "latscat/simd/gram.hpp"

namespace latscat::simd {

void gram_conj_scalar(const SplitMatrix& a, const SplitMatrix& c, std::span<std::complex<double>> out) {
  const std::size_t K = a.cols;
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* ar = a.re.data() + i * K;
    const double* ai = a.im.data() + i * K;
    for (std::size_t j = 0; j < c.rows; ++j) {
      const double* cr = c.re.data() + j * K;
      const double* ci = c.im.data() + j * K;
      double sr = 0.0;
      double si = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        sr += ar[k] * cr[k] + ai[k] * ci[k];
        si += ar[k] * ci[k] - ai[k] * cr[k];
      }
      out[i * c.rows + j] = {sr, si};
    }
  }
}

}  // namespace latscat::simd
