#include "syzlab/quiver.hpp"

#include <set>

#include "syzlab/error.hpp"

namespace syzlab {

void QuiverPresentation::validate() const {
  if (vertices.empty()) fail(Errc::empty_quiver, "presentation has no vertices");
  std::set<std::string> names;
  for (const auto& v : vertices) {
    if (v.empty()) fail(Errc::semantic_error, "empty vertex name");
    if (!names.insert(v).second) fail(Errc::semantic_error, "duplicate vertex name " + v);
  }
  std::set<std::string> arrow_names;
  int n = static_cast<int>(vertices.size());
  for (const auto& a : arrows) {
    if (a.name.empty()) fail(Errc::semantic_error, "empty arrow name");
    if (names.count(a.name)) fail(Errc::semantic_error, "arrow name collides with vertex " + a.name);
    if (!arrow_names.insert(a.name).second)
      fail(Errc::semantic_error, "duplicate arrow name " + a.name);
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n)
      fail(Errc::semantic_error, "arrow " + a.name + " references unknown vertex");
  }
  if (nilpotency_bound < 1) fail(Errc::semantic_error, "nilpotency bound must be positive");
  for (const auto& r : relations) {
    if (r.terms.empty()) fail(Errc::semantic_error, "empty relation");
    int rs = -1, rt = -1;
    for (const auto& t : r.terms) {
      if (t.arrows.empty()) fail(Errc::semantic_error, "relation term with empty path");
      for (std::size_t i = 0; i < t.arrows.size(); ++i) {
        int ai = t.arrows[i];
        if (ai < 0 || ai >= static_cast<int>(arrows.size()))
          fail(Errc::semantic_error, "relation references unknown arrow");
        if (i > 0 && arrows[t.arrows[i - 1]].tgt != arrows[ai].src)
          fail(Errc::semantic_error, "non-composable path in relation");
      }
      int s = arrow_src(t), e = arrow_tgt(t);
      if (rs == -1) {
        rs = s;
        rt = e;
      } else if (s != rs || e != rt) {
        fail(Errc::semantic_error, "relation mixes non-parallel paths");
      }
    }
  }
}

QuiverPresentation reversed(const QuiverPresentation& p) {
  QuiverPresentation r;
  r.vertices = p.vertices;
  r.nilpotency_bound = p.nilpotency_bound;
  r.arrows.reserve(p.arrows.size());
  for (const auto& a : p.arrows) r.arrows.push_back({a.name, a.tgt, a.src});
  for (const auto& rel : p.relations) {
    Relation rr;
    for (const auto& t : rel.terms) {
      RelationTerm tt;
      tt.coefficient = t.coefficient;
      tt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
      rr.terms.push_back(std::move(tt));
    }
    r.relations.push_back(std::move(rr));
  }
  return r;
}

}  // namespace syzlab
