#pragma once

#include "syzlab/algebra.hpp"

// Shared presentations used across the test suite, built directly so the
// tests do not depend on the text parser.
namespace fixtures {

using namespace syzlab;

// Two loops x, y with all length-2 products zero: local, radical square zero.
inline AlgebraPtr loc3(const Field& f) {
  QuiverPresentation p;
  p.vertices = {"v"};
  p.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  p.relations = {
      {{{1, {0, 0}}}},  // x*x
      {{{1, {0, 1}}}},  // x*y
      {{{1, {1, 0}}}},  // y*x
      {{{1, {1, 1}}}},  // y*y
  };
  p.nilpotency_bound = 2;
  return build_algebra(p, f);
}

// One vertex, no arrows: the base field.
inline AlgebraPtr ss1(const Field& f) {
  QuiverPresentation p;
  p.vertices = {"v"};
  p.nilpotency_bound = 1;
  return build_algebra(p, f);
}

// Single arrow v1 -> v2.
inline AlgebraPtr a2(const Field& f) {
  QuiverPresentation p;
  p.vertices = {"v1", "v2"};
  p.arrows = {{"a", 0, 1}};
  p.nilpotency_bound = 2;
  return build_algebra(p, f);
}

// Linear quiver v1 -> v2 -> v3 with the full path algebra.
inline AlgebraPtr a3(const Field& f) {
  QuiverPresentation p;
  p.vertices = {"v1", "v2", "v3"};
  p.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  p.nilpotency_bound = 3;
  return build_algebra(p, f);
}

// k[x]/(x^2): selfinjective local.
inline AlgebraPtr dual2(const Field& f) {
  QuiverPresentation p;
  p.vertices = {"v"};
  p.arrows = {{"x", 0, 0}};
  p.relations = {{{{1, {0, 0}}}}};
  p.nilpotency_bound = 2;
  return build_algebra(p, f);
}

// Cyclic quiver on three vertices with radical square zero: selfinjective
// Nakayama.
inline AlgebraPtr nakayama32(const Field& f) {
  QuiverPresentation p;
  p.vertices = {"v1", "v2", "v3"};
  p.arrows = {{"a0", 0, 1}, {"a1", 1, 2}, {"a2", 2, 0}};
  p.relations = {
      {{{1, {0, 1}}}},  // a0*a1
      {{{1, {1, 2}}}},  // a1*a2
      {{{1, {2, 0}}}},  // a2*a0
  };
  p.nilpotency_bound = 2;
  return build_algebra(p, f);
}

// Commutative square-zero-free example: k<x,y>/(xy - yx, x^2, y^2) at
// nilpotency three; xy survives, so the dimension is four.
inline AlgebraPtr comm4(const Field& f) {
  QuiverPresentation p;
  p.vertices = {"v"};
  p.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  p.relations = {
      {{{1, {0, 1}}, {-1, {1, 0}}}},  // xy - yx
      {{{1, {0, 0}}}},                // x*x
      {{{1, {1, 1}}}},                // y*y
  };
  p.nilpotency_bound = 3;
  return build_algebra(p, f);
}

}  // namespace fixtures
