#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "domino/matrix.hpp"

namespace domino {

// Multilayer perceptron: affine layers with ReLU on all but the last, linear
// logits head. All arithmetic is 64-bit; forward/backward are exact analytic
// passes built on the fixed-order kernels.
struct ModelParams {
  std::vector<std::size_t> layer_sizes;       // [d_in, h_1, ..., N]
  std::vector<Matrix> weights;                // weights[l]: sizes[l+1] x sizes[l]
  std::vector<std::vector<double>> biases;    // biases[l]: sizes[l+1]
  std::uint64_t seed = 0;
  // Bumped on every in-place update; lets backward reject a cache produced
  // by an older parameter state.
  std::uint64_t revision = 0;

  std::size_t num_layers() const { return weights.size(); }
  std::size_t input_dim() const { return layer_sizes.front(); }
  std::size_t num_classes() const { return layer_sizes.back(); }
  std::uint64_t fingerprint() const;
};

struct ForwardCache {
  std::uint64_t params_fingerprint = 0;
  Matrix input;                 // batch copy
  std::vector<Matrix> pre;      // pre-activations per layer
  std::vector<Matrix> post;     // ReLU outputs for hidden layers
};

struct Gradients {
  std::vector<Matrix> weights;
  std::vector<std::vector<double>> biases;
};

// Deterministic in (layer_sizes, seed): weights are standard-normal draws
// scaled by 1/sqrt(fan_in), drawn layer by layer in row-major order from the
// seeded generator; biases start at zero.
ModelParams init_params(const std::vector<std::size_t>& layer_sizes,
                        std::uint64_t seed);

// Returns logits (batch x N). When cache is non-null it is filled with
// everything backward needs.
Matrix forward(const ModelParams& params, const Matrix& batch,
               ForwardCache* cache = nullptr);

// Standard backpropagation seeded by dlogits: exact gradients of
// sum_{i,k} logits[i][k] * dlogits[i][k] with respect to every weight/bias.
Gradients backward(const ModelParams& params, const ForwardCache& cache,
                   const Matrix& dlogits);

// probs[i] = exp(z[i] - max z) / sum_j exp(z[j] - max z)
void softmax(std::span<const double> logits, std::span<double> probs);
std::vector<double> softmax(std::span<const double> logits);
Matrix softmax_rows(const Matrix& logits);

struct Checkpoint {
  ModelParams params;
  std::uint64_t config_hash = 0;
};

// Flat binary container, little-endian throughout; layout documented in the
// README and covered by a byte-identical round-trip test.
void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace domino
