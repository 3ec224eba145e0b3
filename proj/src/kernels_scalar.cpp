// Scalar reference kernels. These define the numerical contract; the SIMD
// variants must reproduce them bit for bit (see kernels.hpp).

#include "domino/kernels.hpp"

namespace domino::kern {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  const std::size_t m = n - n % 4;
  for (std::size_t i = 0; i < m; i += 4) {
    s0 += x[i] * y[i];
    s1 += x[i + 1] * y[i + 1];
    s2 += x[i + 2] * y[i + 2];
    s3 += x[i + 3] * y[i + 3];
  }
  double lanes[4] = {s0, s1, s2, s3};
  for (std::size_t j = 0; m + j < n; ++j) lanes[j] += x[m + j] * y[m + j];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double sum_scalar(const double* x, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  const std::size_t m = n - n % 4;
  for (std::size_t i = 0; i < m; i += 4) {
    s0 += x[i];
    s1 += x[i + 1];
    s2 += x[i + 2];
    s3 += x[i + 3];
  }
  double lanes[4] = {s0, s1, s2, s3};
  for (std::size_t j = 0; m + j < n; ++j) lanes[j] += x[m + j];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double max_scalar(const double* x, std::size_t n) {
  double best = x[0];
  for (std::size_t i = 1; i < n; ++i)
    if (x[i] > best) best = x[i];
  return best + 0.0;  // canonicalize -0.0 so all variants agree on tied zeros
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void relu_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_mul_scalar(const double* pre, const double* g, double* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = pre[i] > 0.0 ? g[i] : 0.0;
}

void sgd_step_scalar(double* w, double* v, const double* g, double momentum,
                     double lr, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = momentum * v[i] - lr * g[i];
    w[i] += v[i];
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {
      "scalar",         dot_scalar,  sum_scalar,
      max_scalar,       axpy_scalar, scale_scalar,
      relu_scalar,      relu_mask_mul_scalar,
      sgd_step_scalar,
  };
  return k;
}

}  // namespace domino::kern
