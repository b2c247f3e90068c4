#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "syzlab/matrix.hpp"
#include "syzlab/quiver.hpp"

namespace syzlab {

// Basis element of the algebra: a reduced path, kept with its endpoints.
struct BasisPath {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;  // empty for the trivial path at src == tgt
  int length() const { return static_cast<int>(arrows.size()); }
};

// Sparse vector over basis indices.
using SparseVec = std::vector<std::pair<int, Scalar>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional quotient of a path algebra. Basis paths are reduced
// representatives; products are closed over the basis. Paths compose
// first-to-last: (p * q) means p, then q.
class Algebra {
 public:
  Algebra() = default;
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const Field& field() const { return field_; }
  const QuiverPresentation& presentation() const { return pres_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return static_cast<int>(pres_.vertices.size()); }
  int num_arrows() const { return static_cast<int>(pres_.arrows.size()); }
  const std::vector<BasisPath>& basis() const { return basis_; }
  int idempotent(int v) const { return idempotent_[v]; }

  // radical_layers()[k] lists the basis indices of J^{k+1}; the trailing
  // layer is the last nonzero power.
  const std::vector<std::vector<int>>& radical_layers() const { return radical_layers_; }

  const SparseVec& mult(int i, int j) const { return mult_[i][j]; }
  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  // Expresses the path given by an arrow sequence (starting at src) over the
  // basis. Empty sequence yields the idempotent at src.
  SparseVec reduce_path(int src, const std::vector<int>& arrows) const;

  // Basis index of a nontrivial path, or -1 when it is not itself a basis
  // element.
  int basis_index_of(const std::vector<int>& arrows) const;

  const Algebra* opposite_ptr() const { return op_; }
  bool is_opposite() const { return derived_opposite_; }

  bool verify_identity() const;
  bool verify_associativity() const;

 private:
  friend struct AlgebraBuilder;

  struct ComponentSpan {
    std::vector<std::vector<int>> coord_arrows;  // per coordinate, ordered length desc then lex
    std::map<std::vector<int>, int> coord_of;
    RowReduceResult rr;
  };

  Field field_;
  QuiverPresentation pres_;
  std::vector<BasisPath> basis_;
  std::vector<int> idempotent_;
  std::vector<std::vector<SparseVec>> mult_;
  std::vector<std::vector<int>> radical_layers_;
  std::map<std::pair<int, int>, ComponentSpan> spans_;
  std::map<std::vector<int>, int> basis_of_arrows_;
  const Algebra* op_ = nullptr;
  bool derived_opposite_ = false;
};

// Builds the algebra and its opposite in one shared allocation. Throws
// EMPTY_QUIVER / SEMANTIC_ERROR / NOT_ADMISSIBLE.
AlgebraPtr build_algebra(const QuiverPresentation& p, const Field& f);

// The opposite algebra, sharing ownership with its partner; involutive.
AlgebraPtr opposite(const AlgebraPtr& a);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace syzlab
