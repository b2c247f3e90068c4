#include "syzlab/error.hpp"

namespace syzlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::semantic_error: return "SEMANTIC_ERROR";
    case Errc::empty_quiver: return "EMPTY_QUIVER";
    case Errc::not_admissible: return "NOT_ADMISSIBLE";
    case Errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case Errc::algebra_mismatch: return "ALGEBRA_MISMATCH";
    case Errc::no_solution: return "NO_SOLUTION";
    case Errc::decompose_inconclusive: return "DECOMPOSE_INCONCLUSIVE";
    case Errc::usage_error: return "USAGE_ERROR";
    case Errc::internal_error: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(Errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

void check(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::internal_error, msg);
}

}  // namespace syzlab
