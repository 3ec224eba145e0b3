#include "domino/errors.hpp"

namespace domino {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::wrong_magic: return "WrongMagic";
    case Errc::truncated_payload: return "TruncatedPayload";
    case Errc::label_out_of_range: return "LabelOutOfRange";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::bad_fractions: return "BadFractions";
    case Errc::empty_dataset: return "EmptyDataset";
    case Errc::bad_architecture: return "BadArchitecture";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::non_finite_input: return "NonFiniteInput";
    case Errc::stale_cache: return "StaleCache";
    case Errc::bad_distribution: return "BadDistribution";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invalid_hierarchy: return "InvalidHierarchy";
    case Errc::empty_row: return "EmptyRow";
    case Errc::io_error: return "IoError";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_matrix: return "InvalidMatrix";
    case Errc::config_dataset_mismatch: return "ConfigDatasetMismatch";
    case Errc::degenerate_confusion: return "DegenerateConfusion";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_matrix: return "EmptyMatrix";
    case Errc::config_error: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace domino
