#include "doodlekit/error.hpp"

namespace doodlekit {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unknown_token: return "UnknownToken";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::invalid_strand_count: return "InvalidStrandCount";
    case ErrorKind::rank_mismatch: return "RankMismatch";
    case ErrorKind::slot_misuse: return "SlotMisuse";
    case ErrorKind::matching_violation: return "MatchingViolation";
    case ErrorKind::negative_count: return "NegativeCount";
    case ErrorKind::invalid_gauss_data: return "InvalidGaussData";
    case ErrorKind::empty_diagram: return "EmptyDiagram";
    case ErrorKind::pattern_mismatch: return "PatternMismatch";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::replay_failure: return "ReplayFailure";
    case ErrorKind::search_exhausted: return "SearchExhausted";
  }
  return "Error";
}

}  // namespace doodlekit
