#include "domino/data.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include "domino/errors.hpp"
#include "domino/rng.hpp"

namespace domino {
namespace {

constexpr std::uint32_t kIdx3Magic = 0x00000803;
constexpr std::uint32_t kIdx1Magic = 0x00000801;

std::uint32_t read_be_u32(const std::uint8_t* p) {
  return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
         (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

void append_be_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

// count*rows*cols with overflow guard; a product that cannot fit can never
// match the actual byte length.
bool checked_payload_size(std::uint64_t count, std::uint64_t rows,
                          std::uint64_t cols, std::uint64_t& out) {
  if (rows != 0 && count > UINT64_MAX / rows) return false;
  const std::uint64_t cr = count * rows;
  if (cols != 0 && cr > UINT64_MAX / cols) return false;
  out = cr * cols;
  return true;
}

void validate_blob_spec(const BlobSpec& spec) {
  if (spec.num_classes < 3)
    fail(Errc::invalid_spec, "blobs need at least 3 classes, got " +
                                 std::to_string(spec.num_classes));
  if (spec.samples_per_class == 0)
    fail(Errc::invalid_spec, "samples_per_class must be positive");
  if (spec.dim == 0) fail(Errc::invalid_spec, "dim must be positive");
  if (!(spec.spread > 0.0))
    fail(Errc::invalid_spec, "spread must be positive");
  if (spec.class_centers.size() != spec.num_classes)
    fail(Errc::invalid_spec,
         "class_centers must have exactly num_classes entries");
  for (const auto& c : spec.class_centers)
    if (c.size() != spec.dim)
      fail(Errc::invalid_spec, "every class center must have length dim");
  for (const auto& p : spec.confusable_pairs) {
    if (p.class_a >= spec.num_classes || p.class_b >= spec.num_classes)
      fail(Errc::invalid_spec, "confusable pair class out of range");
    if (p.class_a == p.class_b)
      fail(Errc::invalid_spec, "confusable pair must name two distinct classes");
    if (p.center_distance < 0.0)
      fail(Errc::invalid_spec, "confusable pair distance must be >= 0");
  }
}

}  // namespace

ImageSet parse_idx_images(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4)
    fail(Errc::truncated_payload, "IDX3 file shorter than its magic number");
  const std::uint32_t magic = read_be_u32(bytes.data());
  if (magic != kIdx3Magic) {
    std::ostringstream os;
    os << "expected IDX3 magic 0x00000803, got 0x" << std::hex << magic;
    fail(Errc::wrong_magic, os.str());
  }
  if (bytes.size() < 16)
    fail(Errc::truncated_payload, "IDX3 header needs 16 bytes, file has " +
                                      std::to_string(bytes.size()));
  const std::uint32_t count = read_be_u32(bytes.data() + 4);
  const std::uint32_t rows = read_be_u32(bytes.data() + 8);
  const std::uint32_t cols = read_be_u32(bytes.data() + 12);
  std::uint64_t payload = 0;
  if (!checked_payload_size(count, rows, cols, payload) ||
      bytes.size() != 16 + payload) {
    std::ostringstream os;
    os << "IDX3 payload mismatch: header implies " << count << "x" << rows
       << "x" << cols << " bytes, file carries " << (bytes.size() - 16);
    fail(Errc::truncated_payload, os.str());
  }

  ImageSet out;
  out.count = count;
  out.height = rows;
  out.width = cols;
  out.pixels.resize(payload);
  for (std::uint64_t i = 0; i < payload; ++i)
    out.pixels[i] = static_cast<double>(bytes[16 + i]) / 255.0;
  return out;
}

std::vector<std::uint8_t> serialize_idx_images(const ImageSet& images) {
  if (images.pixels.size() != images.count * images.feature_dim())
    fail(Errc::shape_mismatch, "pixel buffer does not match count*height*width");
  if (images.count > UINT32_MAX || images.height > UINT32_MAX ||
      images.width > UINT32_MAX)
    fail(Errc::invalid_spec, "IDX3 dimensions exceed 32-bit header fields");
  std::vector<std::uint8_t> out;
  out.reserve(16 + images.pixels.size());
  append_be_u32(out, kIdx3Magic);
  append_be_u32(out, static_cast<std::uint32_t>(images.count));
  append_be_u32(out, static_cast<std::uint32_t>(images.height));
  append_be_u32(out, static_cast<std::uint32_t>(images.width));
  for (double p : images.pixels) {
    if (!(p >= 0.0 && p <= 1.0))
      fail(Errc::invalid_spec,
           "IDX3 serialization requires intensities in [0, 1]; got " +
               std::to_string(p));
    out.push_back(static_cast<std::uint8_t>(std::llround(p * 255.0)));
  }
  return out;
}

LabelSet parse_idx_labels(std::span<const std::uint8_t> bytes,
                          std::size_t num_classes) {
  if (num_classes < 3)
    fail(Errc::invalid_spec, "num_classes must be >= 3 (multiclass only)");
  if (bytes.size() < 4)
    fail(Errc::truncated_payload, "IDX1 file shorter than its magic number");
  const std::uint32_t magic = read_be_u32(bytes.data());
  if (magic != kIdx1Magic) {
    std::ostringstream os;
    os << "expected IDX1 magic 0x00000801, got 0x" << std::hex << magic;
    fail(Errc::wrong_magic, os.str());
  }
  if (bytes.size() < 8)
    fail(Errc::truncated_payload, "IDX1 header needs 8 bytes, file has " +
                                      std::to_string(bytes.size()));
  const std::uint32_t count = read_be_u32(bytes.data() + 4);
  if (bytes.size() != 8ull + count) {
    std::ostringstream os;
    os << "IDX1 payload mismatch: header says " << count
       << " labels, file carries " << (bytes.size() - 8);
    fail(Errc::truncated_payload, os.str());
  }

  LabelSet out;
  out.count = count;
  out.num_classes = num_classes;
  out.labels.resize(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint8_t l = bytes[8 + i];
    if (l >= num_classes)
      fail(Errc::label_out_of_range,
           "label " + std::to_string(l) + " at index " + std::to_string(i) +
               " >= num_classes " + std::to_string(num_classes));
    out.labels[i] = l;
  }
  return out;
}

std::vector<std::uint8_t> serialize_idx_labels(const LabelSet& labels) {
  if (labels.labels.size() != labels.count)
    fail(Errc::shape_mismatch, "label buffer does not match count");
  if (labels.count > UINT32_MAX)
    fail(Errc::invalid_spec, "IDX1 count exceeds 32-bit header field");
  std::vector<std::uint8_t> out;
  out.reserve(8 + labels.count);
  append_be_u32(out, kIdx1Magic);
  append_be_u32(out, static_cast<std::uint32_t>(labels.count));
  for (std::size_t l : labels.labels) {
    if (l > 255)
      fail(Errc::label_out_of_range, "IDX1 labels must fit in one byte");
    out.push_back(static_cast<std::uint8_t>(l));
  }
  return out;
}

Dataset make_blobs(const BlobSpec& spec, std::uint64_t seed) {
  validate_blob_spec(spec);

  // Apply pair overrides in list order: move both centers onto their
  // connecting line, midpoint preserved, at the requested distance.
  auto centers = spec.class_centers;
  for (const auto& p : spec.confusable_pairs) {
    auto& ca = centers[p.class_a];
    auto& cb = centers[p.class_b];
    std::vector<double> dir(spec.dim, 0.0);
    double norm = 0.0;
    for (std::size_t k = 0; k < spec.dim; ++k) {
      dir[k] = cb[k] - ca[k];
      norm += dir[k] * dir[k];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      dir.assign(spec.dim, 0.0);
      dir[0] = 1.0;  // coincident centers: separate along the first axis
    } else {
      for (auto& d : dir) d /= norm;
    }
    for (std::size_t k = 0; k < spec.dim; ++k) {
      const double mid = 0.5 * (ca[k] + cb[k]);
      ca[k] = mid - 0.5 * p.center_distance * dir[k];
      cb[k] = mid + 0.5 * p.center_distance * dir[k];
    }
  }

  Rng rng(seed);
  Dataset ds;
  ds.images.count = spec.num_classes * spec.samples_per_class;
  ds.images.height = 1;
  ds.images.width = spec.dim;
  ds.images.pixels.resize(ds.images.count * spec.dim);
  ds.labels.count = ds.images.count;
  ds.labels.num_classes = spec.num_classes;
  ds.labels.labels.resize(ds.labels.count);

  std::size_t idx = 0;
  for (std::size_t c = 0; c < spec.num_classes; ++c) {
    for (std::size_t s = 0; s < spec.samples_per_class; ++s, ++idx) {
      double* x = ds.images.pixels.data() + idx * spec.dim;
      for (std::size_t k = 0; k < spec.dim; ++k)
        x[k] = centers[c][k] + spec.spread * rng.normal();
      ds.labels.labels[idx] = c;
    }
  }
  return ds;
}

std::vector<std::vector<double>> blob_circle_centers(std::size_t num_classes,
                                                     std::size_t dim,
                                                     double radius) {
  std::vector<std::vector<double>> centers(num_classes,
                                           std::vector<double>(dim, 0.0));
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (dim == 1) {
      centers[c][0] = radius * static_cast<double>(c);
    } else {
      const double angle =
          2.0 * M_PI * static_cast<double>(c) / static_cast<double>(num_classes);
      centers[c][0] = radius * std::cos(angle);
      centers[c][1] = radius * std::sin(angle);
    }
  }
  return centers;
}

std::array<Dataset, 3> split_dataset(const Dataset& ds,
                                     SplitFractions fractions,
                                     std::uint64_t seed) {
  if (ds.size() == 0) fail(Errc::empty_dataset, "cannot split an empty dataset");
  if (ds.images.count != ds.labels.count)
    fail(Errc::shape_mismatch, "image/label counts differ");
  const double sum = fractions.train + fractions.val + fractions.test;
  if (!(fractions.train > 0.0) || !(fractions.val > 0.0) ||
      !(fractions.test > 0.0) || std::abs(sum - 1.0) > 1e-9)
    fail(Errc::bad_fractions,
         "fractions must be positive and sum to 1, got " +
             std::to_string(fractions.train) + "/" +
             std::to_string(fractions.val) + "/" + std::to_string(fractions.test));

  const std::size_t n_classes = ds.num_classes();
  std::vector<std::vector<std::size_t>> per_class(n_classes);
  for (std::size_t i = 0; i < ds.size(); ++i)
    per_class[ds.labels.labels[i]].push_back(i);

  Rng rng(seed);
  std::array<std::vector<std::size_t>, 3> indices;
  for (std::size_t c = 0; c < n_classes; ++c) {
    auto& ids = per_class[c];
    rng.shuffle(ids);
    const std::size_t n = ids.size();
    const std::size_t n_val =
        static_cast<std::size_t>(fractions.val * static_cast<double>(n));
    const std::size_t n_test =
        static_cast<std::size_t>(fractions.test * static_cast<double>(n));
    const std::size_t n_train = n - n_val - n_test;  // remainder goes to train
    for (std::size_t i = 0; i < n; ++i) {
      const int part = i < n_train ? 0 : (i < n_train + n_val ? 1 : 2);
      indices[part].push_back(ids[i]);
    }
  }

  std::array<Dataset, 3> out;
  const std::size_t d = ds.images.feature_dim();
  for (int part = 0; part < 3; ++part) {
    Dataset& split = out[part];
    split.images.count = indices[part].size();
    split.images.height = ds.images.height;
    split.images.width = ds.images.width;
    split.images.pixels.resize(split.images.count * d);
    split.labels.count = split.images.count;
    split.labels.num_classes = n_classes;
    split.labels.labels.resize(split.labels.count);
    split.class_names = ds.class_names;
    for (std::size_t i = 0; i < indices[part].size(); ++i) {
      const std::size_t src = indices[part][i];
      std::memcpy(split.images.pixels.data() + i * d, ds.images.sample(src),
                  d * sizeof(double));
      split.labels.labels[i] = ds.labels.labels[src];
    }
  }
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) fail(Errc::io_error, "read failed for " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_error, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(Errc::io_error, "write failed for " + path.string());
}

Dataset load_idx_dataset(const std::filesystem::path& images_path,
                         const std::filesystem::path& labels_path,
                         std::size_t num_classes,
                         std::vector<std::string> class_names) {
  Dataset ds;
  ds.images = parse_idx_images(read_file_bytes(images_path));
  ds.labels = parse_idx_labels(read_file_bytes(labels_path), num_classes);
  if (ds.images.count != ds.labels.count)
    fail(Errc::shape_mismatch,
         "image count " + std::to_string(ds.images.count) +
             " != label count " + std::to_string(ds.labels.count));
  if (!class_names.empty() && class_names.size() != num_classes)
    fail(Errc::invalid_spec, "class_names must have num_classes entries");
  ds.class_names = std::move(class_names);
  return ds;
}

}  // namespace domino
