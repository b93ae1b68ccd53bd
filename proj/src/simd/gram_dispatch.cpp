#include <cstdlib>
#include <stdexcept>
#include <string>

#include "latscat/simd/gram.hpp"

namespace latscat::simd {

std::string_view kernel_name(Kernel k) { return k == Kernel::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(LATSCAT_HAVE_AVX2_KERNELS)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Kernel active_kernel() {
  const char* env = std::getenv("LATSCAT_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return Kernel::scalar;
  return avx2_available() ? Kernel::avx2 : Kernel::scalar;
}

#if !defined(LATSCAT_HAVE_AVX2_KERNELS)
void gram_conj_avx2(const SplitMatrix&, const SplitMatrix&, std::span<std::complex<double>>) {
  throw std::invalid_argument("gram_conj_avx2: not compiled in");
}
#endif

void gram_conj(const SplitMatrix& a, const SplitMatrix& c, std::span<std::complex<double>> out, Kernel kernel) {
  if (a.cols != c.cols) throw std::invalid_argument("gram_conj: inner dimensions differ");
  if (out.size() != a.rows * c.rows) throw std::invalid_argument("gram_conj: output has wrong size");
  if (kernel == Kernel::avx2) {
    if (!avx2_available()) throw std::invalid_argument("gram_conj: avx2 kernel unavailable");
    gram_conj_avx2(a, c, out);
  } else {
    gram_conj_scalar(a, c, out);
  }
}

}  // namespace latscat::simd
