#pragma once

#include <stdexcept>
#include <string>

namespace morrey {

enum class errc {
  invalid_params,
  input_too_large,
  empty_sequence,
  dimension_mismatch,
  divergent,
  unbounded,
  zero_vector,
  equal_vectors,
  both_zero,
  bad_range,
  threshold_violated,
  degenerate_params,
  incompatible_pieces,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_params: return "InvalidParams";
    case errc::input_too_large: return "InputTooLarge";
    case errc::empty_sequence: return "EmptySequence";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::divergent: return "Divergent";
    case errc::unbounded: return "Unbounded";
    case errc::zero_vector: return "ZeroVector";
    case errc::equal_vectors: return "EqualVectors";
    case errc::both_zero: return "BothZero";
    case errc::bad_range: return "BadRange";
    case errc::threshold_violated: return "ThresholdViolated";
    case errc::degenerate_params: return "DegenerateParams";
    case errc::incompatible_pieces: return "IncompatiblePieces";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace morrey
