// AVX2 kernels. Compiled with -mavx2 and only dispatched after a runtime
// CPU check. Multiplies and adds stay separate (_mm256_mul_pd/_mm256_add_pd,
// never FMA) and reductions keep the 4-lane split from kernels.hpp, so every
// result is bit-identical to the scalar reference.

#include <immintrin.h>

#include "domino/kernels.hpp"

namespace domino::kern {
namespace {

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t m = n - n % 4;
  for (std::size_t i = 0; i < m; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(xv, yv));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (std::size_t j = 0; m + j < n; ++j) lanes[j] += x[m + j] * y[m + j];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t m = n - n % 4;
  for (std::size_t i = 0; i < m; i += 4)
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (std::size_t j = 0; m + j < n; ++j) lanes[j] += x[m + j];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double max_avx2(const double* x, std::size_t n) {
  if (n < 4) {
    double best = x[0];
    for (std::size_t i = 1; i < n; ++i)
      if (x[i] > best) best = x[i];
    return best + 0.0;  // canonicalize -0.0, matching the scalar kernel
  }
  const std::size_t m = n - n % 4;
  __m256d acc = _mm256_loadu_pd(x);
  for (std::size_t i = 4; i < m; i += 4)
    acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double best = lanes[0];
  for (int j = 1; j < 4; ++j)
    if (lanes[j] > best) best = lanes[j];
  for (std::size_t j = m; j < n; ++j)
    if (x[j] > best) best = x[j];
  return best + 0.0;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  const std::size_t m = n - n % 4;
  for (std::size_t i = 0; i < m; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d xv = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(yv, _mm256_mul_pd(av, xv)));
  }
  for (std::size_t i = m; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  const std::size_t m = n - n % 4;
  for (std::size_t i = 0; i < m; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), av));
  for (std::size_t i = m; i < n; ++i) x[i] *= a;
}

void relu_avx2(const double* x, double* y, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const std::size_t m = n - n % 4;
  // max_pd returns the second operand on equality, so -0.0 maps to +0.0
  // exactly like the scalar `x > 0 ? x : 0.0`.
  for (std::size_t i = 0; i < m; i += 4)
    _mm256_storeu_pd(y + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  for (std::size_t i = m; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_mul_avx2(const double* pre, const double* g, double* out,
                        std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const std::size_t m = n - n % 4;
  for (std::size_t i = 0; i < m; i += 4) {
    const __m256d mask =
        _mm256_cmp_pd(_mm256_loadu_pd(pre + i), zero, _CMP_GT_OQ);
    _mm256_storeu_pd(out + i, _mm256_and_pd(_mm256_loadu_pd(g + i), mask));
  }
  for (std::size_t i = m; i < n; ++i) out[i] = pre[i] > 0.0 ? g[i] : 0.0;
}

void sgd_step_avx2(double* w, double* v, const double* g, double momentum,
                   double lr, std::size_t n) {
  const __m256d momv = _mm256_set1_pd(momentum);
  const __m256d lrv = _mm256_set1_pd(lr);
  const std::size_t m = n - n % 4;
  for (std::size_t i = 0; i < m; i += 4) {
    __m256d vv = _mm256_loadu_pd(v + i);
    const __m256d gv = _mm256_loadu_pd(g + i);
    vv = _mm256_sub_pd(_mm256_mul_pd(momv, vv), _mm256_mul_pd(lrv, gv));
    _mm256_storeu_pd(v + i, vv);
    _mm256_storeu_pd(w + i, _mm256_add_pd(_mm256_loadu_pd(w + i), vv));
  }
  for (std::size_t i = m; i < n; ++i) {
    v[i] = momentum * v[i] - lr * g[i];
    w[i] += v[i];
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k = {
      "avx2",         dot_avx2,  sum_avx2,
      max_avx2,       axpy_avx2, scale_avx2,
      relu_avx2,      relu_mask_mul_avx2,
      sgd_step_avx2,
  };
  return k;
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

}  // namespace domino::kern
