#pragma once

#include <string>
#include <vector>

#include "syzlab/field.hpp"

namespace syzlab {

struct Arrow {
  std::string name;
  int src = 0;  // vertex indices
  int tgt = 0;
};

// One summand of a relation: coefficient * (arrow index sequence, composed
// first-to-last). Paths in a relation must be parallel and have length >= 1.
struct RelationTerm {
  std::int64_t coefficient = 1;
  std::vector<int> arrows;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int nilpotency_bound = 2;  // paths of length >= bound are zero in the algebra

  // Throws SEMANTIC_ERROR / EMPTY_QUIVER on malformed data.
  void validate() const;

  int arrow_src(const RelationTerm& t) const { return arrows[t.arrows.front()].src; }
  int arrow_tgt(const RelationTerm& t) const { return arrows[t.arrows.back()].tgt; }
};

QuiverPresentation reversed(const QuiverPresentation& p);

}  // namespace syzlab
