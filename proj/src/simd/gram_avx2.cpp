#include <immintrin.h>

#include "latscat/simd/gram.hpp"

namespace latscat::simd {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

struct RowPtr {
  const double* re;
  const double* im;
};

// One output entry, vector body plus scalar tail.
std::complex<double> dot1(RowPtr a, RowPtr c, std::size_t K) {
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= K; k += 4) {
    const __m256d ar = _mm256_loadu_pd(a.re + k), ai = _mm256_loadu_pd(a.im + k);
    const __m256d cr = _mm256_loadu_pd(c.re + k), ci = _mm256_loadu_pd(c.im + k);
    sr = _mm256_fmadd_pd(ar, cr, sr);
    sr = _mm256_fmadd_pd(ai, ci, sr);
    si = _mm256_fmadd_pd(ar, ci, si);
    si = _mm256_fnmadd_pd(ai, cr, si);
  }
  double r = hsum(sr), i = hsum(si);
  for (; k < K; ++k) {
    r += a.re[k] * c.re[k] + a.im[k] * c.im[k];
    i += a.re[k] * c.im[k] - a.im[k] * c.re[k];
  }
  return {r, i};
}

}  // namespace

void gram_conj_avx2(const SplitMatrix& a, const SplitMatrix& c, std::span<std::complex<double>> out) {
  const std::size_t K = a.cols;
  const std::size_t M = a.rows, N = c.rows;
  auto arow = [&](std::size_t i) { return RowPtr{a.re.data() + i * K, a.im.data() + i * K}; };
  auto crow = [&](std::size_t j) { return RowPtr{c.re.data() + j * K, c.im.data() + j * K}; };
  const std::size_t K4 = K - K % 4;

  std::size_t i = 0;
  for (; i + 2 <= M; i += 2) {
    const RowPtr a0 = arow(i), a1 = arow(i + 1);
    std::size_t j = 0;
    for (; j + 2 <= N; j += 2) {
      const RowPtr c0 = crow(j), c1 = crow(j + 1);
      __m256d r00 = _mm256_setzero_pd(), i00 = _mm256_setzero_pd();
      __m256d r01 = _mm256_setzero_pd(), i01 = _mm256_setzero_pd();
      __m256d r10 = _mm256_setzero_pd(), i10 = _mm256_setzero_pd();
      __m256d r11 = _mm256_setzero_pd(), i11 = _mm256_setzero_pd();
      for (std::size_t k = 0; k < K4; k += 4) {
        const __m256d a0r = _mm256_loadu_pd(a0.re + k), a0i = _mm256_loadu_pd(a0.im + k);
        const __m256d a1r = _mm256_loadu_pd(a1.re + k), a1i = _mm256_loadu_pd(a1.im + k);
        const __m256d c0r = _mm256_loadu_pd(c0.re + k), c0i = _mm256_loadu_pd(c0.im + k);
        const __m256d c1r = _mm256_loadu_pd(c1.re + k), c1i = _mm256_loadu_pd(c1.im + k);
        r00 = _mm256_fmadd_pd(a0r, c0r, _mm256_fmadd_pd(a0i, c0i, r00));
        i00 = _mm256_fmadd_pd(a0r, c0i, _mm256_fnmadd_pd(a0i, c0r, i00));
        r01 = _mm256_fmadd_pd(a0r, c1r, _mm256_fmadd_pd(a0i, c1i, r01));
        i01 = _mm256_fmadd_pd(a0r, c1i, _mm256_fnmadd_pd(a0i, c1r, i01));
        r10 = _mm256_fmadd_pd(a1r, c0r, _mm256_fmadd_pd(a1i, c0i, r10));
        i10 = _mm256_fmadd_pd(a1r, c0i, _mm256_fnmadd_pd(a1i, c0r, i10));
        r11 = _mm256_fmadd_pd(a1r, c1r, _mm256_fmadd_pd(a1i, c1i, r11));
        i11 = _mm256_fmadd_pd(a1r, c1i, _mm256_fnmadd_pd(a1i, c1r, i11));
      }
      double s[8] = {hsum(r00), hsum(i00), hsum(r01), hsum(i01), hsum(r10), hsum(i10), hsum(r11), hsum(i11)};
      for (std::size_t k = K4; k < K; ++k) {
        s[0] += a0.re[k] * c0.re[k] + a0.im[k] * c0.im[k];
        s[1] += a0.re[k] * c0.im[k] - a0.im[k] * c0.re[k];
        s[2] += a0.re[k] * c1.re[k] + a0.im[k] * c1.im[k];
        s[3] += a0.re[k] * c1.im[k] - a0.im[k] * c1.re[k];
        s[4] += a1.re[k] * c0.re[k] + a1.im[k] * c0.im[k];
        s[5] += a1.re[k] * c0.im[k] - a1.im[k] * c0.re[k];
        s[6] += a1.re[k] * c1.re[k] + a1.im[k] * c1.im[k];
        s[7] += a1.re[k] * c1.im[k] - a1.im[k] * c1.re[k];
      }
      out[i * N + j] = {s[0], s[1]};
      out[i * N + j + 1] = {s[2], s[3]};
      out[(i + 1) * N + j] = {s[4], s[5]};
      out[(i + 1) * N + j + 1] = {s[6], s[7]};
    }
    for (; j < N; ++j) {
      out[i * N + j] = dot1(a0, crow(j), K);
      out[(i + 1) * N + j] = dot1(a1, crow(j), K);
    }
  }
  for (; i < M; ++i) {
    for (std::size_t j = 0; j < N; ++j) out[i * N + j] = dot1(arow(i), crow(j), K);
  }
}

}  // namespace latscat::simd
