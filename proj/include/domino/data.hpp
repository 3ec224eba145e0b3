#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace domino {

// Image (or generic feature) container. IDX-sourced sets hold intensities in
// [0, 1]; blob-generated sets reuse the same carrier with height = 1,
// width = feature dimension, and real-valued entries (no [0, 1] clamp).
struct ImageSet {
  std::size_t count = 0;
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> pixels;  // count * height * width, row-major

  std::size_t feature_dim() const { return height * width; }
  const double* sample(std::size_t i) const {
    return pixels.data() + i * feature_dim();
  }
};

struct LabelSet {
  std::size_t count = 0;
  std::size_t num_classes = 0;  // >= 3
  std::vector<std::size_t> labels;
};

struct Dataset {
  ImageSet images;
  LabelSet labels;
  std::vector<std::string> class_names;  // empty or num_classes entries

  std::size_t size() const { return images.count; }
  std::size_t num_classes() const { return labels.num_classes; }
};

struct ConfusablePair {
  std::size_t class_a = 0;
  std::size_t class_b = 0;
  double center_distance = 0.0;
};

// Synthetic isotropic-Gaussian classes with optional engineered overlaps:
// each confusable pair's centers are moved to the requested distance along
// their connecting line (midpoint preserved), so ground-truth class
// similarity is known by construction.
struct BlobSpec {
  std::size_t num_classes = 0;       // >= 3
  std::size_t samples_per_class = 0; // > 0
  std::size_t dim = 0;               // > 0
  std::vector<std::vector<double>> class_centers;  // num_classes x dim
  double spread = 1.0;               // > 0, per-class isotropic stddev
  std::vector<ConfusablePair> confusable_pairs;
};

// IDX3 (magic 0x00000803): big-endian magic, count, rows, cols, then
// count*rows*cols unsigned bytes. Intensities come out divided by 255.
ImageSet parse_idx_images(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> serialize_idx_images(const ImageSet& images);

// IDX1 (magic 0x00000801): big-endian magic, count, then count label bytes.
LabelSet parse_idx_labels(std::span<const std::uint8_t> bytes,
                          std::size_t num_classes);
std::vector<std::uint8_t> serialize_idx_labels(const LabelSet& labels);

Dataset make_blobs(const BlobSpec& spec, std::uint64_t seed);

// Standard centers for CLI-configured blobs: classes on a circle of the
// given radius in dimensions 0 and 1 (evenly spaced on a line when dim == 1).
std::vector<std::vector<double>> blob_circle_centers(std::size_t num_classes,
                                                     std::size_t dim,
                                                     double radius);

struct SplitFractions {
  double train = 0.0;
  double val = 0.0;
  double test = 0.0;
};

// Deterministic stratified split. Per class, indices are shuffled by the
// seeded generator and partitioned train/val/test; val and test sizes are
// rounded down and the remainder goes to train.
std::array<Dataset, 3> split_dataset(const Dataset& ds, SplitFractions fractions,
                                     std::uint64_t seed);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes);

Dataset load_idx_dataset(const std::filesystem::path& images_path,
                         const std::filesystem::path& labels_path,
                         std::size_t num_classes,
                         std::vector<std::string> class_names = {});

}  // namespace domino
