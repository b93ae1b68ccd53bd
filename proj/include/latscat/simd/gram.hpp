#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace latscat::simd {

/// Row-major complex matrix with real and imaginary parts stored separately.
struct SplitMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> re;
  std::vector<double> im;

  SplitMatrix() = default;
  SplitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), re(r * c), im(r * c) {}

  void set(std::size_t i, std::size_t k, std::complex<double> v) {
    re[i * cols + k] = v.real();
    im[i * cols + k] = v.imag();
  }
  std::complex<double> get(std::size_t i, std::size_t k) const { return {re[i * cols + k], im[i * cols + k]}; }
};

enum class Kernel { scalar, avx2 };

std::string_view kernel_name(Kernel k);
bool avx2_available();
/// avx2 when the CPU supports it, unless LATSCAT_SIMD=scalar is set.
Kernel active_kernel();

/// out(i, j) = sum_k conj(a(i, k)) c(j, k), out row-major a.rows x c.rows.
void gram_conj_scalar(const SplitMatrix& a, const SplitMatrix& c, std::span<std::complex<double>> out);
void gram_conj_avx2(const SplitMatrix& a, const SplitMatrix& c, std::span<std::complex<double>> out);

/// Throws std::invalid_argument on shape mismatch, or when avx2 is requested
/// and unavailable.
void gram_conj(const SplitMatrix& a, const SplitMatrix& c, std::span<std::complex<double>> out,
               Kernel kernel = active_kernel());

}  // namespace latscat::simd
