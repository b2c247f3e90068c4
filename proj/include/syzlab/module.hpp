#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "syzlab/algebra.hpp"

namespace syzlab {

// Budgets for the seeded searches inside is_isomorphic / decompose.
struct SearchOptions {
  std::uint64_t seed = 0xC0609;
  std::uint32_t exhaustive_limit = 1u << 16;
  int random_trials = 256;
  int pair_sum_cap = 256;
};

// Right module as a representation: a space per vertex, row vectors acted on
// from the right, one dims(src) x dims(tgt) matrix per arrow.
class Module {
 public:
  Module() = default;
  // Validates relation compliance and vanishing of length-N paths.
  Module(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> arrow_actions);

  const AlgebraPtr& algebra() const { return r_->alg; }
  const std::vector<int>& dims() const { return r_->dims; }
  int dim(int v) const { return r_->dims[v]; }
  int total_dim() const { return r_->total; }
  int offset(int v) const { return r_->offsets[v]; }
  const Matrix& action(int arrow) const { return r_->act[arrow]; }
  int num_vertices() const { return static_cast<int>(r_->dims.size()); }
  bool is_zero_module() const { return r_->total == 0; }
  const void* key() const { return r_.get(); }

  // Product of arrow actions along a path that starts at src.
  Matrix path_action(int src, const std::vector<int>& arrows) const;

 private:
  struct Rep {
    AlgebraPtr alg;
    std::vector<int> dims;
    std::vector<Matrix> act;
    std::vector<int> offsets;
    int total = 0;
  };
  std::shared_ptr<const Rep> r_;
};

bool same_space(const Module& a, const Module& b);

class Morphism {
 public:
  Morphism() = default;
  // Validates the intertwining relations.
  Morphism(Module src, Module tgt, std::vector<Matrix> components);

  static Morphism zero(const Module& src, const Module& tgt);
  static Morphism identity(const Module& m);

  const Module& src() const { return d_->src; }
  const Module& tgt() const { return d_->tgt; }
  const Matrix& comp(int v) const { return d_->comp[v]; }

  Morphism add(const Morphism& o) const;
  Morphism sub(const Morphism& o) const;
  Morphism scaled(const Scalar& c) const;
  bool is_zero() const;
  int rank() const;
  bool is_mono() const { return rank() == src().total_dim(); }
  bool is_epi() const { return rank() == tgt().total_dim(); }
  bool is_iso() const;

  // Coefficient vector in the shared hom-space layout (vertices ascending,
  // each component row-major).
  std::vector<Scalar> flatten() const;
  static Morphism from_flat(const Module& src, const Module& tgt, const std::vector<Scalar>& c);

 private:
  struct Data {
    Module src, tgt;
    std::vector<Matrix> comp;
  };
  std::shared_ptr<const Data> d_;
};

// g after f; components multiply left-to-right.
Morphism compose(const Morphism& f, const Morphism& g);

// --- standard modules -------------------------------------------------------

Module projective_module(const AlgebraPtr& a, int v);
Module simple_module(const AlgebraPtr& a, int v);
Module injective_module(const AlgebraPtr& a, int v);
Module regular_module(const AlgebraPtr& a);

// Left multiplication by basis element b (a path i -> j) as a morphism of
// right modules P_j -> P_i.
Morphism left_mult_morphism(const AlgebraPtr& a, int basis_idx);

// --- duality ----------------------------------------------------------------

// Standard k-dual, a module over the opposite algebra; involutive on the nose.
Module dual_module(const Module& m);
// Contravariant: dual_morphism(f : m -> n) : D(n) -> D(m).
Morphism dual_morphism(const Morphism& f);

// --- hom and exactness ------------------------------------------------------

std::vector<Morphism> hom_space(const Module& m, const Module& n);

struct SubQuotient {
  Module module;
  Morphism map;  // inclusion for submodules, projection for quotients
};

// Submodule spanned by the given rows (one matrix of spanning rows per
// vertex); rows must be closed under the actions.
SubQuotient submodule(const Module& m, const std::vector<Matrix>& rows);
SubQuotient quotient(const Module& m, const std::vector<Matrix>& rows);

SubQuotient kernel(const Morphism& f);
SubQuotient cokernel(const Morphism& f);

struct ImageData {
  Module module;
  Morphism into_target;
  Morphism from_source;
};
ImageData image(const Morphism& f);

struct DirectSum {
  Module module;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);
Module power_module(const Module& m, int k);

SubQuotient radical_submodule(const Module& m);
SubQuotient top_quotient(const Module& m);
SubQuotient socle_submodule(const Module& m);

// Epi from a minimal projective cover; kernel lies in the radical.
Morphism projective_cover(const Module& m);
// Same cover with the summand layout: part i of the source is the
// indecomposable projective at part_vertices[i], in block order.
struct CoverData {
  Morphism cover;
  std::vector<int> part_vertices;
};
CoverData projective_cover_data(const Module& m);
// Mono into a minimal injective envelope.
Morphism injective_envelope(const Module& m);

// Multiplicity of the simple at each vertex in the top; a projective module
// is determined by this vector.
std::vector<int> top_multiplicities(const Module& m);

// --- isomorphism and decomposition ------------------------------------------

std::optional<Morphism> find_isomorphism(const Module& m, const Module& n,
                                         const SearchOptions& opts = {});
bool is_isomorphic(const Module& m, const Module& n, const SearchOptions& opts = {});

struct Summand {
  Module module;
  int multiplicity = 1;
};
// Indecomposable summands with multiplicities, deterministic order. Throws
// DECOMPOSE_INCONCLUSIVE when neither a split nor an indecomposability
// certificate is found within budget.
std::vector<Summand> decompose(const Module& m, const SearchOptions& opts = {});

// Section s with compose(s, epi) = identity, if the epi splits.
std::optional<Morphism> find_section(const Morphism& epi);
// Retraction r with compose(mono, r) = identity, if the mono splits.
std::optional<Morphism> find_retraction(const Morphism& mono);

}  // namespace syzlab
