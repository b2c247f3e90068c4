#pragma once

#include <string>

#include "syzlab/algebra.hpp"

namespace syzlab {

// In-memory form of an algebra description file.
struct AlgebraFile {
  Field field = Field::gf(2);
  QuiverPresentation presentation;
};

// Line-oriented grammar, one directive per line, '#' starts a comment:
//   field gf <p> | field q
//   vertex <id>
//   arrow <name> <src-vertex> <tgt-vertex>
//   relation <term [+|- term ...]>   with term = [<int>*]a1*a2*...
//   nilpotency <N>
// Arrow and vertex names may be declared in any order relative to their uses.
// Throws PARSE_ERROR (always with a line number) or SEMANTIC_ERROR.
AlgebraFile parse_algebra_text(const std::string& text);

// Reads the file at `path`; throws PARSE_ERROR if it cannot be read.
AlgebraFile load_algebra_file(const std::string& path);

// Canonical text form; parse_algebra_text(serialize_algebra(a)) reproduces
// `a` exactly, and serializing again is byte-identical.
std::string serialize_algebra(const AlgebraFile& a);

// "gf<p>" or "q", matching Field::name(). Throws USAGE_ERROR otherwise.
Field field_from_name(const std::string& name);

}  // namespace syzlab
