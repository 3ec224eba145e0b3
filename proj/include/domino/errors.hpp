#pragma once

#include <stdexcept>
#include <string>

namespace domino {

// Every failure the library can signal carries one of these codes so callers
// and tests can dispatch on the condition instead of matching message text.
enum class Errc {
  wrong_magic,
  truncated_payload,
  label_out_of_range,
  invalid_spec,
  bad_fractions,
  empty_dataset,
  bad_architecture,
  shape_mismatch,
  non_finite_input,
  stale_cache,
  bad_distribution,
  dimension_mismatch,
  invalid_hierarchy,
  empty_row,
  io_error,
  parse_error,
  invalid_matrix,
  config_dataset_mismatch,
  degenerate_confusion,
  length_mismatch,
  empty_matrix,
  config_error,
};

const char* errc_name(Errc c);

class DominoError : public std::runtime_error {
 public:
  DominoError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw DominoError(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace domino
