#pragma once

#include <vector>

#include "syzlab/module.hpp"

namespace syzlab {

struct SyzygyData {
  Module syzygy;
  Morphism inclusion;  // syzygy -> cover source
  Morphism cover;      // minimal projective cover -> m
};
SyzygyData syzygy_of(const Module& m);

struct ProjResolution {
  Module target;
  std::vector<Module> terms;
  std::vector<Morphism> covers;      // covers[0] is the augmentation terms[0] -> target
  std::vector<Module> syzygies;      // syzygies[i] is the kernel after terms[i]
  std::vector<Morphism> inclusions;  // syzygies[i] -> terms[i]
  std::vector<Morphism> maps;        // maps[i] : terms[i+1] -> terms[i]
  bool terminated = false;           // a syzygy vanished within the requested depth
};
// Minimal resolution out to `depth` terms (or fewer if it terminates).
ProjResolution min_proj_resolution(const Module& m, int depth);

struct InjResolution {
  Module source;
  Morphism coaugmentation;  // source -> terms[0]
  std::vector<Module> terms;
  std::vector<Module> cosyzygies;
  std::vector<Morphism> maps;  // maps[i] : terms[i] -> terms[i+1]
  bool terminated = false;
};
// Computed by dualizing a minimal projective resolution over the opposite
// algebra; the leading terms are cross-checked against the direct
// injective-envelope construction.
InjResolution min_inj_resolution(const Module& m, int depth);

int ext_dim(const Module& m, const Module& n, int i);
// Ext^i(target of r, n) read off a stored resolution; r must reach depth i
// unless it terminated earlier (in which case higher ext vanishes).
int ext_dim_from(const ProjResolution& r, const Module& n, int i);
int stable_hom_dim(const Module& m, const Module& n);

// Omega(f) anchored at the given syzygy data of source and target.
Morphism syzygy_induced_map(const Morphism& f, const SyzygyData& sm, const SyzygyData& sn);
Morphism syzygy_induced_map(const Morphism& f);

// Transpose via a minimal projective presentation P1 -> P0 -> m -> 0: the
// cokernel of the starred presentation map, a module over the opposite
// algebra with no projective summands.
struct TransposeData {
  Module tr;
  Morphism star_map;  // P0* -> P1* over the opposite algebra
};
TransposeData transpose(const Module& m);

// Hom(m, regular module) as a module over the opposite algebra; the component
// at vertex v is Hom(m, P_v).
Module star_dual(const Module& m);
// Contravariant: star_dual_map(f : m -> n) : star_dual(n) -> star_dual(m).
Morphism star_dual_map(const Morphism& f);
// Natural map m -> star_dual(star_dual(m)); mono iff m is torsionless.
Morphism evaluation_map(const Module& m);

// Representatives of Ext^1(m, n): cocycles are Hom(Omega m, n), coboundaries
// the restrictions of Hom(P0, n) along the syzygy inclusion.
struct Ext1Presentation {
  SyzygyData syz;
  std::vector<Morphism> cocycles;
  Matrix coboundaries;  // flat rows inside the Hom(Omega m, n) coordinate space
  int dim = 0;
};
Ext1Presentation ext1_presentation(const Module& m, const Module& n);

struct Extension {
  Module middle;
  Morphism left;   // n -> middle
  Morphism right;  // middle -> m
};
// Pushout of the syzygy inclusion along the cocycle: realizes the class of
// the cocycle as 0 -> n -> E -> m -> 0.
Extension extension_middle_term(const Module& m, const Module& n, const Morphism& cocycle);

}  // namespace syzlab
