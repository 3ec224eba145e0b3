#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace domino::kern {

// Inner-loop kernels behind the network, loss and optimizer. Every kernel is
// specified down to the bit so that the scalar reference and the SIMD
// variants are interchangeable: training trajectories do not depend on which
// implementation the dispatcher picks.
//
// Bit-exactness contract:
//  * Element-wise kernels (axpy, scale, relu, relu_mask_mul, sgd_step) apply
//    the written IEEE-754 double operations per element, no fused
//    multiply-add, no reassociation.
//  * Reductions (dot, sum, max) use a fixed 4-lane split. With m = n - n % 4:
//      lane k accumulates elements k, k+4, ..., over [0, m);
//      trailing element m + j (j < n % 4) folds into lane j;
//      the result is (lane0 + lane1) + (lane2 + lane3).
//    A 4-wide vector accumulator performs the identical per-lane operation
//    sequence, so scalar and SIMD results match bit for bit. The equivalence
//    suite in tests/ asserts exactly that.
struct Kernels {
  const char* name;

  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum_i x[i]
  double (*sum)(const double* x, std::size_t n);
  // max_i x[i]; n must be >= 1, inputs non-NaN; -0.0 results canonicalize
  // to +0.0 so every variant agrees bitwise
  double (*max)(const double* x, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x[i] *= a
  void (*scale)(double a, double* x, std::size_t n);
  // y[i] = x[i] > 0 ? x[i] : 0
  void (*relu)(const double* x, double* y, std::size_t n);
  // out[i] = pre[i] > 0 ? g[i] : 0
  void (*relu_mask_mul)(const double* pre, const double* g, double* out,
                        std::size_t n);
  // v[i] = momentum * v[i] - lr * g[i]; w[i] += v[i]
  void (*sgd_step)(double* w, double* v, const double* g, double momentum,
                   double lr, std::size_t n);
};

// Active kernel set. Selected once on first use: the DOMINO_KERNELS
// environment variable ("scalar", "avx2") wins if set and available,
// otherwise the best variant the CPU supports.
const Kernels& active();

// Force a variant by name; returns false if it is not available on this
// build/CPU. Intended for tests and benchmarking.
bool select(const std::string& name);

std::vector<std::string> available();

const Kernels& scalar_kernels();

}  // namespace domino::kern
