#pragma once

#include <string>
#include <vector>

#include "syzlab/parse.hpp"

namespace syzlab {

// Built-in example presentations, all over GF(2) by default.
std::vector<std::string> corpus_names();

// Throws USAGE_ERROR listing the valid names.
AlgebraFile corpus_algebra(const std::string& name);

}  // namespace syzlab
