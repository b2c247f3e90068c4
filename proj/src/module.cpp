#include "syzlab/module.hpp"

#include "syzlab/error.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace syzlab {
namespace {

int nr(const Matrix& m) { return static_cast<int>(m.rows()); }
int nc(const Matrix& m) { return static_cast<int>(m.cols()); }

std::string vname(const Module& m, int v) {
  return m.algebra()->presentation().vertices[v];
}

// Basis indices of the algebra grouped as paths v -> w; row order inside a
// component is ascending basis index.
std::vector<std::vector<int>> projective_basis_by_vertex(const AlgebraPtr& a, int v) {
  std::vector<std::vector<int>> out(a->num_vertices());
  for (int i = 0; i < a->dimension(); ++i) {
    const BasisPath& b = a->basis()[i];
    if (b.src == v) out[b.tgt].push_back(i);
  }
  return out;
}

std::optional<Morphism> try_make(const Module& src, const Module& tgt,
                                 std::vector<Matrix> comps) {
  const auto& pres = src.algebra()->presentation();
  for (std::size_t ar = 0; ar < pres.arrows.size(); ++ar) {
    int i = pres.arrows[ar].src, j = pres.arrows[ar].tgt;
    int a = static_cast<int>(ar);
    if (!comps[i].mul(tgt.action(a)).equals(src.action(a).mul(comps[j]))) return std::nullopt;
  }
  return Morphism(src, tgt, std::move(comps));
}

std::vector<Scalar> combo_flat(const Field& f, const std::vector<std::vector<Scalar>>& flats,
                               const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> acc(flats.empty() ? 0 : flats[0].size(), f.zero());
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    for (std::size_t k = 0; k < acc.size(); ++k)
      acc[k] = f.add(acc[k], f.mul(coeffs[i], flats[i][k]));
  }
  return acc;
}

Matrix stack_rows(const Field& f, int cols, const std::vector<Matrix>& parts) {
  int total = 0;
  for (const auto& p : parts) total += nr(p);
  Matrix out(f, total, cols);
  int r = 0;
  for (const auto& p : parts)
    for (int i = 0; i < nr(p); ++i, ++r)
      for (int c = 0; c < cols; ++c) out.set(r, c, p.at(i, c));
  return out;
}

}  // namespace

Module::Module(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> act) {
  check(static_cast<bool>(alg), "module over null algebra");
  const auto& pres = alg->presentation();
  if (static_cast<int>(dims.size()) != alg->num_vertices())
    fail(Errc::dimension_mismatch, "dimension vector has wrong length");
  for (int d : dims)
    if (d < 0) fail(Errc::dimension_mismatch, "negative vertex dimension");
  if (act.size() != pres.arrows.size())
    fail(Errc::dimension_mismatch, "one action matrix per arrow required");
  for (std::size_t a = 0; a < act.size(); ++a) {
    if (nr(act[a]) != dims[pres.arrows[a].src] || nc(act[a]) != dims[pres.arrows[a].tgt])
      fail(Errc::dimension_mismatch,
           "action matrix for arrow '" + pres.arrows[a].name + "' has wrong shape");
    if (!(act[a].field() == alg->field()))
      fail(Errc::algebra_mismatch, "action matrix over wrong field");
  }

  auto r = std::make_shared<Rep>();
  r->alg = std::move(alg);
  r->dims = std::move(dims);
  r->act = std::move(act);
  r->offsets.resize(r->dims.size());
  for (std::size_t v = 0; v < r->dims.size(); ++v) {
    r->offsets[v] = r->total;
    r->total += r->dims[v];
  }
  r_ = std::move(r);

  const Field& f = r_->alg->field();
  for (const Relation& rel : pres.relations) {
    int s = pres.arrow_src(rel.terms[0]);
    int t = pres.arrow_tgt(rel.terms[0]);
    Matrix acc(f, r_->dims[s], r_->dims[t]);
    for (const RelationTerm& term : rel.terms)
      acc = acc.add(path_action(s, term.arrows).scaled(f.from_int(term.coefficient)));
    if (!acc.is_zero())
      fail(Errc::semantic_error, "relation does not act as zero on the representation");
  }

  // J^N must act as zero; walk length-N paths, pruning zero partial products.
  int n = pres.nilpotency_bound;
  for (int v = 0; v < num_vertices(); ++v) {
    if (r_->dims[v] == 0) continue;
    struct Frame {
      Matrix prod;
      int at;
      int len;
    };
    std::vector<Frame> st;
    st.push_back({Matrix::identity(f, r_->dims[v]), v, 0});
    while (!st.empty()) {
      Frame fr = std::move(st.back());
      st.pop_back();
      if (fr.len == n) {
        if (!fr.prod.is_zero())
          fail(Errc::semantic_error,
               "a path of length " + std::to_string(n) + " acts nonzero starting at vertex '" +
                   pres.vertices[v] + "'");
        continue;
      }
      for (int a = static_cast<int>(pres.arrows.size()) - 1; a >= 0; --a) {
        if (pres.arrows[a].src != fr.at) continue;
        Matrix next = fr.prod.mul(r_->act[a]);
        if (next.is_zero()) continue;
        st.push_back({std::move(next), pres.arrows[a].tgt, fr.len + 1});
      }
    }
  }
}

Matrix Module::path_action(int src, const std::vector<int>& arrows) const {
  const auto& pres = r_->alg->presentation();
  Matrix prod = Matrix::identity(r_->alg->field(), r_->dims[src]);
  int at = src;
  for (int a : arrows) {
    check(pres.arrows[a].src == at, "path action: arrows do not compose");
    prod = prod.mul(r_->act[a]);
    at = pres.arrows[a].tgt;
  }
  return prod;
}

bool same_space(const Module& a, const Module& b) {
  if (a.key() == b.key()) return true;
  if (!same_algebra(a.algebra(), b.algebra())) return false;
  if (a.dims() != b.dims()) return false;
  for (std::size_t ar = 0; ar < a.algebra()->presentation().arrows.size(); ++ar)
    if (!a.action(static_cast<int>(ar)).equals(b.action(static_cast<int>(ar)))) return false;
  return true;
}

Morphism::Morphism(Module src, Module tgt, std::vector<Matrix> components) {
  if (!same_algebra(src.algebra(), tgt.algebra()))
    fail(Errc::algebra_mismatch, "morphism between modules over different algebras");
  if (static_cast<int>(components.size()) != src.num_vertices())
    fail(Errc::dimension_mismatch, "one component per vertex required");
  for (int v = 0; v < src.num_vertices(); ++v)
    if (nr(components[v]) != src.dim(v) || nc(components[v]) != tgt.dim(v))
      fail(Errc::dimension_mismatch,
           "morphism component at vertex '" + vname(src, v) + "' has wrong shape");
  const auto& pres = src.algebra()->presentation();
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    int i = pres.arrows[a].src, j = pres.arrows[a].tgt;
    int ai = static_cast<int>(a);
    if (!components[i].mul(tgt.action(ai)).equals(src.action(ai).mul(components[j])))
      fail(Errc::semantic_error, "intertwining fails at arrow '" + pres.arrows[a].name + "'");
  }
  auto d = std::make_shared<Data>();
  d->src = std::move(src);
  d->tgt = std::move(tgt);
  d->comp = std::move(components);
  d_ = std::move(d);
}

Morphism Morphism::zero(const Module& src, const Module& tgt) {
  std::vector<Matrix> comps;
  for (int v = 0; v < src.num_vertices(); ++v)
    comps.emplace_back(src.algebra()->field(), src.dim(v), tgt.dim(v));
  return Morphism(src, tgt, std::move(comps));
}

Morphism Morphism::identity(const Module& m) {
  std::vector<Matrix> comps;
  for (int v = 0; v < m.num_vertices(); ++v)
    comps.push_back(Matrix::identity(m.algebra()->field(), m.dim(v)));
  return Morphism(m, m, std::move(comps));
}

Morphism Morphism::add(const Morphism& o) const {
  check(same_space(src(), o.src()) && same_space(tgt(), o.tgt()), "morphism sum shape mismatch");
  std::vector<Matrix> comps;
  for (int v = 0; v < src().num_vertices(); ++v) comps.push_back(comp(v).add(o.comp(v)));
  return Morphism(src(), tgt(), std::move(comps));
}

Morphism Morphism::sub(const Morphism& o) const {
  check(same_space(src(), o.src()) && same_space(tgt(), o.tgt()), "morphism diff shape mismatch");
  std::vector<Matrix> comps;
  for (int v = 0; v < src().num_vertices(); ++v) comps.push_back(comp(v).sub(o.comp(v)));
  return Morphism(src(), tgt(), std::move(comps));
}

Morphism Morphism::scaled(const Scalar& c) const {
  std::vector<Matrix> comps;
  for (int v = 0; v < src().num_vertices(); ++v) comps.push_back(comp(v).scaled(c));
  return Morphism(src(), tgt(), std::move(comps));
}

bool Morphism::is_zero() const {
  for (int v = 0; v < src().num_vertices(); ++v)
    if (!comp(v).is_zero()) return false;
  return true;
}

int Morphism::rank() const {
  int r = 0;
  for (int v = 0; v < src().num_vertices(); ++v) r += static_cast<int>(syzlab::rank(comp(v)));
  return r;
}

bool Morphism::is_iso() const {
  return src().total_dim() == tgt().total_dim() && rank() == src().total_dim();
}

std::vector<Scalar> Morphism::flatten() const {
  std::vector<Scalar> out;
  for (int v = 0; v < src().num_vertices(); ++v)
    for (int r = 0; r < nr(comp(v)); ++r)
      for (int c = 0; c < nc(comp(v)); ++c) out.push_back(comp(v).at(r, c));
  return out;
}

Morphism Morphism::from_flat(const Module& src, const Module& tgt,
                             const std::vector<Scalar>& c) {
  std::vector<Matrix> comps;
  std::size_t k = 0;
  for (int v = 0; v < src.num_vertices(); ++v) {
    Matrix mv(src.algebra()->field(), src.dim(v), tgt.dim(v));
    for (int r = 0; r < nr(mv); ++r)
      for (int col = 0; col < nc(mv); ++col) mv.set(r, col, c.at(k++));
    comps.push_back(std::move(mv));
  }
  check(k == c.size(), "flat coefficient vector has wrong length");
  return Morphism(src, tgt, std::move(comps));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!same_space(f.tgt(), g.src()))
    fail(Errc::dimension_mismatch, "composition: target and source do not match");
  std::vector<Matrix> comps;
  for (int v = 0; v < f.src().num_vertices(); ++v) comps.push_back(f.comp(v).mul(g.comp(v)));
  return Morphism(f.src(), g.tgt(), std::move(comps));
}

Module projective_module(const AlgebraPtr& a, int v) {
  check(v >= 0 && v < a->num_vertices(), "projective: vertex out of range");
  const Field& f = a->field();
  auto by_vertex = projective_basis_by_vertex(a, v);
  std::vector<int> pos(a->dimension(), -1);
  std::vector<int> dims(a->num_vertices());
  for (int w = 0; w < a->num_vertices(); ++w) {
    dims[w] = static_cast<int>(by_vertex[w].size());
    for (int i = 0; i < dims[w]; ++i) pos[by_vertex[w][i]] = i;
  }
  const auto& pres = a->presentation();
  std::vector<Matrix> act;
  for (std::size_t ar = 0; ar < pres.arrows.size(); ++ar) {
    int j = pres.arrows[ar].src, t = pres.arrows[ar].tgt;
    Matrix m(f, dims[j], dims[t]);
    SparseVec av = a->reduce_path(j, {static_cast<int>(ar)});
    for (int r = 0; r < dims[j]; ++r) {
      int b = by_vertex[j][r];
      std::vector<Scalar> dense(a->dimension(), f.zero());
      for (const auto& [ai, ac] : av)
        for (const auto& [pi, pc] : a->mult(b, ai)) dense[pi] = f.add(dense[pi], f.mul(ac, pc));
      for (int i = 0; i < a->dimension(); ++i)
        if (!f.is_zero(dense[i])) m.set(r, pos[i], dense[i]);
    }
    act.push_back(std::move(m));
  }
  return Module(a, std::move(dims), std::move(act));
}

Module simple_module(const AlgebraPtr& a, int v) {
  check(v >= 0 && v < a->num_vertices(), "simple: vertex out of range");
  std::vector<int> dims(a->num_vertices(), 0);
  dims[v] = 1;
  const auto& pres = a->presentation();
  std::vector<Matrix> act;
  for (const Arrow& ar : pres.arrows) act.emplace_back(a->field(), dims[ar.src], dims[ar.tgt]);
  return Module(a, std::move(dims), std::move(act));
}

Module injective_module(const AlgebraPtr& a, int v) {
  return dual_module(projective_module(opposite(a), v));
}

Module regular_module(const AlgebraPtr& a) {
  std::vector<Module> parts;
  for (int v = 0; v < a->num_vertices(); ++v) parts.push_back(projective_module(a, v));
  return direct_sum(a, parts).module;
}

Morphism left_mult_morphism(const AlgebraPtr& a, int basis_idx) {
  check(basis_idx >= 0 && basis_idx < a->dimension(), "left mult: basis index out of range");
  const BasisPath& b = a->basis()[basis_idx];
  Module pj = projective_module(a, b.tgt);
  Module pi = projective_module(a, b.src);
  auto from = projective_basis_by_vertex(a, b.tgt);
  auto to = projective_basis_by_vertex(a, b.src);
  const Field& f = a->field();
  std::vector<Matrix> comps;
  for (int w = 0; w < a->num_vertices(); ++w) {
    std::vector<int> pos(a->dimension(), -1);
    for (std::size_t i = 0; i < to[w].size(); ++i) pos[to[w][i]] = static_cast<int>(i);
    Matrix m(f, pj.dim(w), pi.dim(w));
    for (int r = 0; r < pj.dim(w); ++r)
      for (const auto& [pidx, pc] : a->mult(basis_idx, from[w][r])) m.set(r, pos[pidx], pc);
    comps.push_back(std::move(m));
  }
  return Morphism(pj, pi, std::move(comps));
}

Module dual_module(const Module& m) {
  AlgebraPtr op = opposite(m.algebra());
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < op->presentation().arrows.size(); ++a)
    act.push_back(m.action(static_cast<int>(a)).transpose());
  return Module(op, m.dims(), std::move(act));
}

Morphism dual_morphism(const Morphism& f) {
  Module dn = dual_module(f.tgt());
  Module dm = dual_module(f.src());
  std::vector<Matrix> comps;
  for (int v = 0; v < f.src().num_vertices(); ++v) comps.push_back(f.comp(v).transpose());
  return Morphism(std::move(dn), std::move(dm), std::move(comps));
}

std::vector<Morphism> hom_space(const Module& m, const Module& n) {
  if (!same_algebra(m.algebra(), n.algebra()))
    fail(Errc::algebra_mismatch, "hom between modules over different algebras");
  const Field& f = m.algebra()->field();
  int nv = m.num_vertices();
  std::vector<int> uoff(nv, 0);
  int unknowns = 0;
  for (int v = 0; v < nv; ++v) {
    uoff[v] = unknowns;
    unknowns += m.dim(v) * n.dim(v);
  }
  if (unknowns == 0) return {};

  const auto& pres = m.algebra()->presentation();
  int rows = 0;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a)
    rows += m.dim(pres.arrows[a].src) * n.dim(pres.arrows[a].tgt);
  Matrix sys(f, rows, unknowns);
  int eq = 0;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    int i = pres.arrows[a].src, j = pres.arrows[a].tgt;
    const Matrix& ma = m.action(static_cast<int>(a));
    const Matrix& na = n.action(static_cast<int>(a));
    for (int r = 0; r < m.dim(i); ++r)
      for (int c = 0; c < n.dim(j); ++c, ++eq) {
        for (int k = 0; k < n.dim(i); ++k) {
          int u = uoff[i] + r * n.dim(i) + k;
          sys.set(eq, u, f.add(sys.at(eq, u), na.at(k, c)));
        }
        for (int l = 0; l < m.dim(j); ++l) {
          int u = uoff[j] + l * n.dim(j) + c;
          sys.set(eq, u, f.sub(sys.at(eq, u), ma.at(r, l)));
        }
      }
  }
  Matrix basis = kernel_basis(sys);
  std::vector<Morphism> out;
  for (int r = 0; r < nr(basis); ++r) out.push_back(Morphism::from_flat(m, n, basis.row_vec(r)));
  return out;
}

SubQuotient submodule(const Module& m, const std::vector<Matrix>& rows) {
  check(static_cast<int>(rows.size()) == m.num_vertices(), "submodule: one row block per vertex");
  std::vector<Matrix> basis;
  std::vector<int> dims;
  for (int v = 0; v < m.num_vertices(); ++v) {
    basis.push_back(row_space_basis(rows[v]));
    dims.push_back(nr(basis[v]));
  }
  const auto& pres = m.algebra()->presentation();
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    int i = pres.arrows[a].src, j = pres.arrows[a].tgt;
    auto coords = solve_left_matrix(basis[j], basis[i].mul(m.action(static_cast<int>(a))));
    if (!coords)
      fail(Errc::semantic_error, "submodule rows are not closed under the arrow actions");
    act.push_back(std::move(*coords));
  }
  Module sub(m.algebra(), std::move(dims), std::move(act));
  Morphism incl(sub, m, std::move(basis));
  return {std::move(sub), std::move(incl)};
}

SubQuotient quotient(const Module& m, const std::vector<Matrix>& rows) {
  check(static_cast<int>(rows.size()) == m.num_vertices(), "quotient: one row block per vertex");
  const Field& f = m.algebra()->field();
  std::vector<Matrix> sub_basis, proj, sect;
  for (int v = 0; v < m.num_vertices(); ++v) {
    sub_basis.push_back(row_space_basis(rows[v]));
    auto qs = quotient_with_section(f, m.dim(v), sub_basis[v]);
    proj.push_back(std::move(qs.projection));
    sect.push_back(std::move(qs.section));
  }
  const auto& pres = m.algebra()->presentation();
  std::vector<int> dims;
  for (int v = 0; v < m.num_vertices(); ++v) dims.push_back(nc(proj[v]));
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    int i = pres.arrows[a].src, j = pres.arrows[a].tgt;
    Matrix moved = sub_basis[i].mul(m.action(static_cast<int>(a)));
    for (int r = 0; r < nr(moved); ++r)
      if (!in_row_space(sub_basis[j], moved.row_vec(r)))
        fail(Errc::semantic_error, "quotient rows are not closed under the arrow actions");
    act.push_back(sect[i].mul(m.action(static_cast<int>(a))).mul(proj[j]));
  }
  Module q(m.algebra(), std::move(dims), std::move(act));
  Morphism pr(m, q, std::move(proj));
  return {std::move(q), std::move(pr)};
}

SubQuotient kernel(const Morphism& f) {
  std::vector<Matrix> rows;
  for (int v = 0; v < f.src().num_vertices(); ++v) rows.push_back(left_kernel(f.comp(v)));
  return submodule(f.src(), rows);
}

SubQuotient cokernel(const Morphism& f) {
  std::vector<Matrix> rows;
  for (int v = 0; v < f.src().num_vertices(); ++v) rows.push_back(row_space_basis(f.comp(v)));
  return quotient(f.tgt(), rows);
}

ImageData image(const Morphism& f) {
  std::vector<Matrix> rows;
  for (int v = 0; v < f.src().num_vertices(); ++v) rows.push_back(row_space_basis(f.comp(v)));
  SubQuotient sub = submodule(f.tgt(), rows);
  std::vector<Matrix> into;
  for (int v = 0; v < f.src().num_vertices(); ++v) {
    auto coords = solve_left_matrix(sub.map.comp(v), f.comp(v));
    check(coords.has_value(), "image rows must lie in their own span");
    into.push_back(std::move(*coords));
  }
  Morphism from_src(f.src(), sub.module, std::move(into));
  return {sub.module, sub.map, std::move(from_src)};
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
  const Field& f = a->field();
  for (const Module& p : parts)
    if (!same_algebra(p.algebra(), a))
      fail(Errc::algebra_mismatch, "direct sum of modules over different algebras");
  std::vector<int> dims(a->num_vertices(), 0);
  std::vector<std::vector<int>> part_off(parts.size(), std::vector<int>(a->num_vertices()));
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v = 0; v < a->num_vertices(); ++v) {
      part_off[p][v] = dims[v];
      dims[v] += parts[p].dim(v);
    }
  const auto& pres = a->presentation();
  std::vector<Matrix> act;
  for (std::size_t ar = 0; ar < pres.arrows.size(); ++ar) {
    int i = pres.arrows[ar].src, j = pres.arrows[ar].tgt;
    Matrix m(f, dims[i], dims[j]);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const Matrix& block = parts[p].action(static_cast<int>(ar));
      for (int r = 0; r < nr(block); ++r)
        for (int c = 0; c < nc(block); ++c)
          m.set(part_off[p][i] + r, part_off[p][j] + c, block.at(r, c));
    }
    act.push_back(std::move(m));
  }
  Module sum(a, dims, std::move(act));
  DirectSum out;
  out.module = sum;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<Matrix> inc, prj;
    for (int v = 0; v < a->num_vertices(); ++v) {
      Matrix iv(f, parts[p].dim(v), dims[v]);
      Matrix pv(f, dims[v], parts[p].dim(v));
      for (int r = 0; r < parts[p].dim(v); ++r) {
        iv.set(r, part_off[p][v] + r, f.one());
        pv.set(part_off[p][v] + r, r, f.one());
      }
      inc.push_back(std::move(iv));
      prj.push_back(std::move(pv));
    }
    out.inclusions.emplace_back(parts[p], sum, std::move(inc));
    out.projections.emplace_back(sum, parts[p], std::move(prj));
  }
  return out;
}

Module power_module(const Module& m, int k) {
  check(k >= 0, "negative power of a module");
  std::vector<Module> parts(static_cast<std::size_t>(k), m);
  return direct_sum(m.algebra(), parts).module;
}

namespace {

// Rows spanning mJ, one block per vertex.
std::vector<Matrix> radical_rows(const Module& m) {
  const Field& f = m.algebra()->field();
  const auto& pres = m.algebra()->presentation();
  std::vector<Matrix> rows;
  for (int j = 0; j < m.num_vertices(); ++j) {
    std::vector<Matrix> pieces;
    for (std::size_t a = 0; a < pres.arrows.size(); ++a)
      if (pres.arrows[a].tgt == j) pieces.push_back(m.action(static_cast<int>(a)));
    rows.push_back(stack_rows(f, m.dim(j), pieces));
  }
  return rows;
}

}  // namespace

SubQuotient radical_submodule(const Module& m) { return submodule(m, radical_rows(m)); }

SubQuotient top_quotient(const Module& m) { return quotient(m, radical_rows(m)); }

SubQuotient socle_submodule(const Module& m) {
  const Field& f = m.algebra()->field();
  const auto& pres = m.algebra()->presentation();
  std::vector<Matrix> rows;
  for (int i = 0; i < m.num_vertices(); ++i) {
    // x is in the socle component iff x kills every outgoing arrow.
    std::vector<Matrix> pieces;
    for (std::size_t a = 0; a < pres.arrows.size(); ++a)
      if (pres.arrows[a].src == i) pieces.push_back(m.action(static_cast<int>(a)));
    int cols = 0;
    for (const auto& p : pieces) cols += nc(p);
    Matrix wide(f, m.dim(i), cols);
    int c0 = 0;
    for (const auto& p : pieces) {
      for (int r = 0; r < nr(p); ++r)
        for (int c = 0; c < nc(p); ++c) wide.set(r, c0 + c, p.at(r, c));
      c0 += nc(p);
    }
    rows.push_back(left_kernel(wide));
  }
  return submodule(m, rows);
}

std::vector<int> top_multiplicities(const Module& m) { return top_quotient(m).module.dims(); }

Morphism projective_cover(const Module& m) { return projective_cover_data(m).cover; }

CoverData projective_cover_data(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  const Field& f = a->field();
  std::vector<Matrix> rad = radical_rows(m);
  std::vector<Module> parts;
  std::vector<int> part_vertex;
  std::vector<std::vector<Scalar>> part_lift;
  for (int v = 0; v < m.num_vertices(); ++v) {
    // Section rows lift a basis of the top; one projective summand each.
    auto qs = quotient_with_section(f, m.dim(v), row_space_basis(rad[v]));
    for (int c = 0; c < nr(qs.section); ++c) {
      parts.push_back(projective_module(a, v));
      part_vertex.push_back(v);
      part_lift.push_back(qs.section.row_vec(c));
    }
  }
  DirectSum ds = direct_sum(a, parts);
  std::vector<Matrix> comps;
  for (int w = 0; w < m.num_vertices(); ++w) comps.emplace_back(f, ds.module.dim(w), m.dim(w));
  std::vector<int> row_at(m.num_vertices(), 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    int v = part_vertex[p];
    auto by_vertex = projective_basis_by_vertex(a, v);
    Matrix lift(f, 1, m.dim(v));
    lift.set_row(0, part_lift[p]);
    for (int w = 0; w < m.num_vertices(); ++w)
      for (int b : by_vertex[w]) {
        Matrix img = lift.mul(m.path_action(v, a->basis()[b].arrows));
        for (int c = 0; c < m.dim(w); ++c) comps[w].set(row_at[w], c, img.at(0, c));
        ++row_at[w];
      }
  }
  Morphism cover(ds.module, m, std::move(comps));
  check(cover.is_epi(), "projective cover must be onto");
  return {std::move(cover), std::move(part_vertex)};
}

Morphism injective_envelope(const Module& m) {
  Morphism c = projective_cover(dual_module(m));
  Morphism e = dual_morphism(c);
  std::vector<Matrix> comps;
  for (int v = 0; v < m.num_vertices(); ++v) comps.push_back(e.comp(v));
  return Morphism(m, e.tgt(), std::move(comps));
}

namespace {

// Deterministic: candidate order is fixed and the random stage draws from a
// seeded engine.
struct IsoSearch {
  const Field& f;
  const Module& m;
  const Module& n;
  const SearchOptions& opts;

  std::optional<Morphism> run(const std::vector<Morphism>& basis) const {
    if (basis.empty()) return std::nullopt;
    std::vector<std::vector<Scalar>> flats;
    for (const auto& b : basis) flats.push_back(b.flatten());

    if (m.dims() == n.dims()) {
      std::vector<Matrix> comps;
      for (int v = 0; v < m.num_vertices(); ++v) comps.push_back(Matrix::identity(f, m.dim(v)));
      if (auto id = try_make(m, n, std::move(comps)); id && id->is_iso()) return id;
    }
    for (const auto& b : basis)
      if (b.is_iso()) return b;

    Morphism acc = Morphism::zero(m, n);
    int best = 0;
    for (const auto& b : basis) {
      Morphism t = acc.add(b);
      if (t.rank() > best) {
        best = t.rank();
        acc = t;
        if (acc.is_iso()) return acc;
      }
    }

    std::size_t d = basis.size();
    if (f.is_prime_field()) {
      std::int64_t p = f.characteristic();
      double count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= static_cast<double>(p);
      if (count <= static_cast<double>(opts.exhaustive_limit)) {
        std::vector<std::int64_t> digits(d, 0);
        while (true) {
          std::size_t i = 0;
          while (i < d && digits[i] == p - 1) digits[i++] = 0;
          if (i == d) break;
          ++digits[i];
          std::vector<Scalar> coeffs;
          for (std::int64_t dg : digits) coeffs.push_back(f.from_int(dg));
          Morphism cand = Morphism::from_flat(m, n, combo_flat(f, flats, coeffs));
          if (cand.is_iso()) return cand;
        }
        return std::nullopt;
      }
    }

    std::mt19937_64 eng(opts.seed);
    for (int t = 0; t < opts.random_trials; ++t) {
      std::vector<Scalar> coeffs;
      for (std::size_t i = 0; i < d; ++i) {
        if (f.is_prime_field())
          coeffs.push_back(f.from_int(static_cast<std::int64_t>(
              eng() % static_cast<std::uint64_t>(f.characteristic()))));
        else
          coeffs.push_back(f.from_int(static_cast<std::int64_t>(eng() % 9) - 4));
      }
      Morphism cand = Morphism::from_flat(m, n, combo_flat(f, flats, coeffs));
      if (cand.is_iso()) return cand;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Morphism> find_isomorphism(const Module& m, const Module& n,
                                         const SearchOptions& opts) {
  if (!same_algebra(m.algebra(), n.algebra()))
    fail(Errc::algebra_mismatch, "isomorphism test between modules over different algebras");
  if (m.total_dim() == 0 && n.total_dim() == 0) return Morphism::zero(m, n);
  if (m.dims() != n.dims()) return std::nullopt;
  if (same_space(m, n)) return Morphism::identity(m);
  std::vector<Morphism> fwd = hom_space(m, n);
  if (hom_space(n, m).size() != fwd.size()) return std::nullopt;
  return IsoSearch{m.algebra()->field(), m, n, opts}.run(fwd);
}

bool is_isomorphic(const Module& m, const Module& n, const SearchOptions& opts) {
  return find_isomorphism(m, n, opts).has_value();
}

namespace {

Matrix component_power(const Field& f, const Matrix& base_in, int e) {
  Matrix pw = Matrix::identity(f, base_in.rows());
  Matrix base = base_in;
  while (e > 0) {
    if (e & 1) pw = pw.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return pw;
}

// Fitting split along phi^e with e >= total dimension: the generalized kernel
// and image are complementary submodules.
std::optional<std::pair<Module, Module>> fitting_split(const Module& x, const Morphism& phi) {
  const Field& f = x.algebra()->field();
  int e = std::max(x.total_dim(), 1);
  std::vector<Matrix> kernels, images;
  int krank = 0;
  for (int v = 0; v < x.num_vertices(); ++v) {
    Matrix pw = component_power(f, phi.comp(v), e);
    kernels.push_back(left_kernel(pw));
    images.push_back(row_space_basis(pw));
    krank += nr(kernels.back());
  }
  if (krank == 0 || krank == x.total_dim()) return std::nullopt;
  Module k = submodule(x, kernels).module;
  Module i = submodule(x, images).module;
  return std::make_pair(std::move(k), std::move(i));
}

struct EndoAlgebra {
  std::vector<Morphism> basis;
  std::vector<std::vector<Scalar>> flats;
  Matrix flat_matrix;  // rows are the flats

  static EndoAlgebra of(const Module& x) {
    EndoAlgebra e;
    e.basis = hom_space(x, x);
    const Field& f = x.algebra()->field();
    for (const auto& b : e.basis) e.flats.push_back(b.flatten());
    int cols = e.flats.empty() ? 0 : static_cast<int>(e.flats[0].size());
    Matrix fm(f, e.flats.size(), cols);
    for (int r = 0; r < nr(fm); ++r)
      for (int c = 0; c < cols; ++c) fm.set(r, c, e.flats[r][c]);
    e.flat_matrix = std::move(fm);
    return e;
  }

  std::vector<Scalar> coords(const Morphism& g) const {
    auto sol = solve_left(flat_matrix, g.flatten());
    check(sol.has_value(), "endomorphism outside its own hom space");
    return *sol;
  }
};

bool power_is_zero(const Morphism& g) {
  const Field& f = g.src().algebra()->field();
  int e = std::max(g.src().total_dim(), 1);
  for (int v = 0; v < g.src().num_vertices(); ++v)
    if (!component_power(f, g.comp(v), e).is_zero()) return false;
  return true;
}

// Nil certificate for a span of endomorphisms given by flat row vectors:
// iterate the span of pairwise products until it stabilizes or vanishes.
bool span_is_nil(const Module& x, const Matrix& w_rows) {
  const Field& f = x.algebra()->field();
  std::vector<Morphism> cur;
  for (int r = 0; r < nr(w_rows); ++r)
    cur.push_back(Morphism::from_flat(x, x, w_rows.row_vec(r)));
  for (const auto& g : cur)
    if (!power_is_zero(g)) return false;
  for (int step = 0; step < x.total_dim() + 1; ++step) {
    Matrix rows(f, cur.size() * cur.size(), w_rows.cols());
    int rr = 0;
    for (const auto& g : cur)
      for (const auto& h : cur) {
        auto fl = compose(g, h).flatten();
        for (int c = 0; c < nc(rows); ++c) rows.set(rr, c, fl[c]);
        ++rr;
      }
    Matrix basis = row_space_basis(rows);
    if (nr(basis) == 0) return true;
    cur.clear();
    for (int r = 0; r < nr(basis); ++r)
      cur.push_back(Morphism::from_flat(x, x, basis.row_vec(r)));
  }
  return false;
}

struct SplitSearch {
  const Module& x;
  const SearchOptions& opts;
  const EndoAlgebra& endo;

  std::optional<std::pair<Module, Module>> try_candidate(const Morphism& phi) const {
    if (phi.is_iso()) return std::nullopt;
    return fitting_split(x, phi);
  }

  std::optional<std::pair<Module, Module>> run() const {
    const Field& f = x.algebra()->field();
    for (const auto& b : endo.basis)
      if (auto s = try_candidate(b)) return s;
    int budget = opts.pair_sum_cap;
    for (std::size_t i = 0; i < endo.basis.size() && budget > 0; ++i)
      for (std::size_t j = i + 1; j < endo.basis.size() && budget > 0; ++j, --budget)
        if (auto s = try_candidate(endo.basis[i].add(endo.basis[j]))) return s;

    std::size_t d = endo.basis.size();
    if (f.is_prime_field()) {
      std::int64_t p = f.characteristic();
      double count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= static_cast<double>(p);
      if (count <= static_cast<double>(opts.exhaustive_limit)) {
        std::vector<std::int64_t> digits(d, 0);
        while (true) {
          std::size_t i = 0;
          while (i < d && digits[i] == p - 1) digits[i++] = 0;
          if (i == d) break;
          ++digits[i];
          std::vector<Scalar> coeffs;
          for (std::int64_t dg : digits) coeffs.push_back(f.from_int(dg));
          Morphism cand = Morphism::from_flat(x, x, combo_flat(f, endo.flats, coeffs));
          if (auto s = try_candidate(cand)) return s;
        }
        return std::nullopt;
      }
    } else {
      Morphism id = Morphism::identity(x);
      for (const auto& b : endo.basis)
        for (std::int64_t lam : {1, -1, 2, -2})
          if (auto s = try_candidate(b.sub(id.scaled(f.from_int(lam))))) return s;
    }

    std::mt19937_64 eng(opts.seed ^ 0x5eedULL);
    for (int t = 0; t < opts.random_trials; ++t) {
      std::vector<Scalar> coeffs;
      for (std::size_t i = 0; i < d; ++i) {
        if (f.is_prime_field())
          coeffs.push_back(f.from_int(static_cast<std::int64_t>(
              eng() % static_cast<std::uint64_t>(f.characteristic()))));
        else
          coeffs.push_back(f.from_int(static_cast<std::int64_t>(eng() % 9) - 4));
      }
      Morphism cand = Morphism::from_flat(x, x, combo_flat(f, endo.flats, coeffs));
      if (auto s = try_candidate(cand)) return s;
    }
    return std::nullopt;
  }
};

bool rational_is_square(const Rational& r, Rational& root) {
  using boost::multiprecision::cpp_int;
  if (r < 0) return false;
  cpp_int num = numerator(r), den = denominator(r);
  cpp_int sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  root = Rational(sn, sd);
  return true;
}

// Sound indecomposability certificates; false means "could not certify" (and
// late_split may carry a genuine splitting discovered along the way).
bool certified_indecomposable(const Module& x, const EndoAlgebra& endo,
                              const SearchOptions& opts,
                              std::optional<std::pair<Module, Module>>& late_split) {
  const Field& f = x.algebra()->field();
  std::size_t d = endo.basis.size();
  if (d == 1) return true;

  if (f.is_prime_field()) {
    std::int64_t p = f.characteristic();
    double count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= static_cast<double>(p);
    // Exhaustive search already covered every endomorphism without finding a
    // split, so each one is invertible or nilpotent and End is local.
    if (count <= static_cast<double>(opts.exhaustive_limit)) return true;
    // Otherwise shift each basis endomorphism into the non-units and check
    // that the span is a nil ideal of codimension one.
    Morphism id = Morphism::identity(x);
    Matrix shifted(f, d, endo.flat_matrix.cols());
    for (std::size_t i = 0; i < d; ++i) {
      std::int64_t found = -1;
      for (std::int64_t lam = 0; lam < p; ++lam) {
        if (!endo.basis[i].sub(id.scaled(f.from_int(lam))).is_iso()) {
          if (found >= 0) return false;
          found = lam;
        }
      }
      if (found < 0) return false;
      auto fl = endo.basis[i].sub(id.scaled(f.from_int(found))).flatten();
      for (int c = 0; c < nc(shifted); ++c) shifted.set(static_cast<int>(i), c, fl[c]);
    }
    Matrix w = row_space_basis(shifted);
    if (nr(w) != static_cast<int>(d) - 1) return false;
    if (in_row_space(w, id.flatten())) return false;
    for (int r = 0; r < nr(w); ++r) {
      Morphism g = Morphism::from_flat(x, x, w.row_vec(r));
      for (const auto& b : endo.basis) {
        if (!in_row_space(w, compose(g, b).flatten())) return false;
        if (!in_row_space(w, compose(b, g).flatten())) return false;
      }
    }
    return span_is_nil(x, w);
  }

  // Characteristic zero: the radical of End is the kernel of the trace form
  // of its regular representation.
  std::vector<std::vector<std::vector<Scalar>>> sc(d);
  for (std::size_t i = 0; i < d; ++i) {
    sc[i].resize(d);
    for (std::size_t j = 0; j < d; ++j)
      sc[i][j] = endo.coords(compose(endo.basis[i], endo.basis[j]));
  }
  std::vector<Scalar> tr(d, f.zero());
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) tr[k] = f.add(tr[k], sc[k][j][j]);
  Matrix gram(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar g = f.zero();
      for (std::size_t k = 0; k < d; ++k) g = f.add(g, f.mul(sc[i][j][k], tr[k]));
      gram.set(i, j, g);
    }
  Matrix rad = left_kernel(gram);
  std::size_t semisimple_dim = d - static_cast<std::size_t>(rad.rows());
  if (semisimple_dim == 1) return true;
  if (semisimple_dim != 2) return false;

  // Two-dimensional semisimple quotient: either a quadratic field (still
  // local) or a split pair of idempotents. The minimal polynomial of any
  // non-scalar element decides, and a rational root yields a splitting.
  std::vector<Scalar> id_coords = endo.coords(Morphism::identity(x));
  for (std::size_t i = 0; i < d; ++i) {
    Matrix span(f, nr(rad) + 1, d);
    for (int r = 0; r < nr(rad); ++r)
      for (int c = 0; c < static_cast<int>(d); ++c) span.set(r, c, rad.at(r, c));
    for (std::size_t c = 0; c < d; ++c) span.set(nr(rad), c, id_coords[c]);
    std::vector<Scalar> ui(d, f.zero());
    ui[i] = f.one();
    if (in_row_space(row_space_basis(span), ui)) continue;  // scalar mod radical
    const Morphism& u = endo.basis[i];
    std::vector<Scalar> u2 = endo.coords(compose(u, u));
    // u^2 = beta*u + gamma*1 modulo the radical.
    Matrix lhs(f, 2 + nr(rad), d);
    for (std::size_t c = 0; c < d; ++c) {
      lhs.set(0, c, ui[c]);
      lhs.set(1, c, id_coords[c]);
    }
    for (int r = 0; r < nr(rad); ++r)
      for (int c = 0; c < static_cast<int>(d); ++c) lhs.set(2 + r, c, rad.at(r, c));
    auto sol = solve_left(lhs, u2);
    if (!sol) return false;
    Rational beta = (*sol)[0].rat(), gamma = (*sol)[1].rat();
    Rational disc = beta * beta + Rational(4) * gamma;
    Rational root;
    if (!rational_is_square(disc, root)) return true;  // quadratic field, local
    Rational r1 = (beta + root) / 2;
    Rational r2 = (beta - root) / 2;
    if (r1 == r2) return false;
    Morphism id = Morphism::identity(x);
    Morphism e = u.sub(id.scaled(Scalar::rational(r1)))
                     .scaled(Scalar::rational(Rational(1) / (r2 - r1)));
    // Newton iteration lifts the idempotent along the nil radical.
    for (int it = 0; it < 64; ++it) {
      Morphism e2 = compose(e, e);
      if (e2.sub(e).is_zero()) break;
      e = e2.scaled(f.from_int(3)).sub(compose(e2, e).scaled(f.from_int(2)));
    }
    if (!compose(e, e).sub(e).is_zero()) return false;
    late_split = fitting_split(x, e);
    return false;
  }
  return false;
}

}  // namespace

std::vector<Summand> decompose(const Module& m, const SearchOptions& opts) {
  std::vector<Summand> out;
  std::vector<Module> queue{m};
  while (!queue.empty()) {
    Module x = queue.front();
    queue.erase(queue.begin());
    if (x.total_dim() == 0) continue;
    EndoAlgebra endo = EndoAlgebra::of(x);
    auto split = SplitSearch{x, opts, endo}.run();
    if (!split) {
      std::optional<std::pair<Module, Module>> late;
      if (certified_indecomposable(x, endo, opts, late)) {
        bool merged = false;
        for (Summand& s : out)
          if (is_isomorphic(s.module, x, opts)) {
            ++s.multiplicity;
            merged = true;
            break;
          }
        if (!merged) out.push_back({x, 1});
        continue;
      }
      if (late)
        split = late;
      else
        fail(Errc::decompose_inconclusive,
             "no splitting endomorphism found and indecomposability not certified");
    }
    queue.insert(queue.begin(), {split->first, split->second});
  }
  return out;
}

std::optional<Morphism> find_section(const Morphism& epi) {
  std::vector<Morphism> basis = hom_space(epi.tgt(), epi.src());
  const Field& f = epi.src().algebra()->field();
  std::vector<Scalar> target = Morphism::identity(epi.tgt()).flatten();
  if (target.empty()) return Morphism::zero(epi.tgt(), epi.src());
  Matrix sys(f, basis.size(), target.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto fl = compose(basis[i], epi).flatten();
    for (std::size_t c = 0; c < fl.size(); ++c) sys.set(i, c, fl[c]);
  }
  auto sol = solve_left(sys, target);
  if (!sol) return std::nullopt;
  Morphism s = Morphism::zero(epi.tgt(), epi.src());
  for (std::size_t i = 0; i < basis.size(); ++i) s = s.add(basis[i].scaled((*sol)[i]));
  return s;
}

std::optional<Morphism> find_retraction(const Morphism& mono) {
  std::vector<Morphism> basis = hom_space(mono.tgt(), mono.src());
  const Field& f = mono.src().algebra()->field();
  std::vector<Scalar> target = Morphism::identity(mono.src()).flatten();
  if (target.empty()) return Morphism::zero(mono.tgt(), mono.src());
  Matrix sys(f, basis.size(), target.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto fl = compose(mono, basis[i]).flatten();
    for (std::size_t c = 0; c < fl.size(); ++c) sys.set(i, c, fl[c]);
  }
  auto sol = solve_left(sys, target);
  if (!sol) return std::nullopt;
  Morphism r = Morphism::zero(mono.tgt(), mono.src());
  for (std::size_t i = 0; i < basis.size(); ++i) r = r.add(basis[i].scaled((*sol)[i]));
  return r;
}

}  // namespace syzlab
