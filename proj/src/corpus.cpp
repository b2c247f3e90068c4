#include "syzlab/corpus.hpp"

#include "syzlab/error.hpp"

namespace syzlab {
namespace {

QuiverPresentation loc3_presentation() {
  QuiverPresentation p;
  p.vertices = {"v"};
  p.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  p.relations = {
      {{{1, {0, 0}}}},
      {{{1, {0, 1}}}},
      {{{1, {1, 0}}}},
      {{{1, {1, 1}}}},
  };
  p.nilpotency_bound = 2;
  return p;
}

QuiverPresentation ss1_presentation() {
  QuiverPresentation p;
  p.vertices = {"v"};
  p.nilpotency_bound = 1;
  return p;
}

QuiverPresentation dual2_presentation() {
  QuiverPresentation p;
  p.vertices = {"v"};
  p.arrows = {{"x", 0, 0}};
  p.relations = {{{{1, {0, 0}}}}};
  p.nilpotency_bound = 2;
  return p;
}

QuiverPresentation a2_presentation() {
  QuiverPresentation p;
  p.vertices = {"v1", "v2"};
  p.arrows = {{"a", 0, 1}};
  p.nilpotency_bound = 2;
  return p;
}

QuiverPresentation a3_presentation() {
  QuiverPresentation p;
  p.vertices = {"v1", "v2", "v3"};
  p.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  p.nilpotency_bound = 3;
  return p;
}

QuiverPresentation nakayama32_presentation() {
  QuiverPresentation p;
  p.vertices = {"v1", "v2", "v3"};
  p.arrows = {{"a0", 0, 1}, {"a1", 1, 2}, {"a2", 2, 0}};
  p.relations = {
      {{{1, {0, 1}}}},
      {{{1, {1, 2}}}},
      {{{1, {2, 0}}}},
  };
  p.nilpotency_bound = 2;
  return p;
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"loc3", "ss1", "dual2", "a2", "a3", "nakayama-3-2"};
}

AlgebraFile corpus_algebra(const std::string& name) {
  AlgebraFile out;
  out.field = Field::gf(2);
  if (name == "loc3") {
    out.presentation = loc3_presentation();
  } else if (name == "ss1") {
    out.presentation = ss1_presentation();
  } else if (name == "dual2") {
    out.presentation = dual2_presentation();
  } else if (name == "a2") {
    out.presentation = a2_presentation();
  } else if (name == "a3") {
    out.presentation = a3_presentation();
  } else if (name == "nakayama-3-2") {
    out.presentation = nakayama32_presentation();
  } else {
    std::string names;
    for (const std::string& n : corpus_names()) {
      if (!names.empty()) names += ", ";
      names += n;
    }
    fail(Errc::usage_error, "unknown example '" + name + "'; available: " + names);
  }
  return out;
}

}  // namespace syzlab
