#pragma once

#include <stdexcept>
#include <string>

namespace syzlab {

enum class Errc {
  parse_error,
  semantic_error,
  empty_quiver,
  not_admissible,
  dimension_mismatch,
  algebra_mismatch,
  no_solution,
  decompose_inconclusive,
  usage_error,
  internal_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc c, const std::string& msg);

// Internal consistency assertion; failures indicate a bug, not bad input.
void check(bool cond, const std::string& msg);

}  // namespace syzlab
