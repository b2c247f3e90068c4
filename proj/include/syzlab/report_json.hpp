#pragma once

#include <json.hpp>

#include <string>

#include "syzlab/invariants.hpp"

namespace syzlab {

inline constexpr const char* kSchemaVersion = "syzygy-lab/1";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr unsigned long kDefaultSeed = 0xC0609;

// Stable key order throughout; rerunning with identical inputs is
// byte-identical. The field is needed to print scalar witnesses.
nlohmann::ordered_json report_to_json(const InvariantReport& r, const Field& f,
                                      unsigned long seed);

// Two-space indented document plus trailing newline.
std::string report_file_text(const InvariantReport& r, const Field& f, unsigned long seed);

}  // namespace syzlab
