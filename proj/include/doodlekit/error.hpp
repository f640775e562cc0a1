#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace doodlekit {

enum class ErrorKind {
  unknown_token,
  index_out_of_range,
  invalid_strand_count,
  rank_mismatch,
  slot_misuse,
  matching_violation,
  negative_count,
  invalid_gauss_data,
  empty_diagram,
  pattern_mismatch,
  parse_error,
  replay_failure,
  search_exhausted,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace doodlekit
