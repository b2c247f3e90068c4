#include "syzlab/homology.hpp"

#include "syzlab/error.hpp"

#include <string>
#include <utility>

namespace syzlab {
namespace {

int nr(const Matrix& m) { return static_cast<int>(m.rows()); }
int nc(const Matrix& m) { return static_cast<int>(m.cols()); }

Matrix flats_matrix(const Field& f, const std::vector<std::vector<Scalar>>& flats, int cols) {
  Matrix out(f, flats.size(), cols);
  for (std::size_t r = 0; r < flats.size(); ++r)
    for (int c = 0; c < cols; ++c) out.set(static_cast<int>(r), c, flats[r][c]);
  return out;
}

int hom_flat_dim(const Module& m, const Module& n) {
  int d = 0;
  for (int v = 0; v < m.num_vertices(); ++v) d += m.dim(v) * n.dim(v);
  return d;
}

// Morphism with the same matrices but re-anchored source and target; the
// replacements must be structurally identical modules.
Morphism rewrap(const Morphism& f, const Module& src, const Module& tgt) {
  check(same_space(f.src(), src) && same_space(f.tgt(), tgt), "rewrap between unequal spaces");
  std::vector<Matrix> comps;
  for (int v = 0; v < src.num_vertices(); ++v) comps.push_back(f.comp(v));
  return Morphism(src, tgt, std::move(comps));
}

}  // namespace

SyzygyData syzygy_of(const Module& m) {
  Morphism cover = projective_cover(m);
  SubQuotient k = kernel(cover);
  return {std::move(k.module), std::move(k.map), std::move(cover)};
}

ProjResolution min_proj_resolution(const Module& m, int depth) {
  check(depth >= 0, "resolution depth must be nonnegative");
  ProjResolution r;
  r.target = m;
  Module cur = m;
  for (int i = 0; i <= depth; ++i) {
    SyzygyData s = syzygy_of(cur);
    r.terms.push_back(s.cover.src());
    r.covers.push_back(s.cover);
    r.syzygies.push_back(s.syzygy);
    r.inclusions.push_back(s.inclusion);
    if (i > 0) r.maps.push_back(compose(r.covers[i], r.inclusions[i - 1]));
    cur = s.syzygy;
    if (cur.total_dim() == 0) {
      r.terminated = true;
      break;
    }
  }
  return r;
}

InjResolution min_inj_resolution(const Module& m, int depth) {
  check(depth >= 0, "resolution depth must be nonnegative");
  Module dm = dual_module(m);
  ProjResolution pr = min_proj_resolution(dm, depth);
  InjResolution r;
  r.source = m;
  for (const Module& t : pr.terms) r.terms.push_back(dual_module(t));
  for (const Module& s : pr.syzygies) r.cosyzygies.push_back(dual_module(s));
  r.coaugmentation = rewrap(dual_morphism(pr.covers[0]), m, r.terms[0]);
  for (std::size_t i = 0; i + 1 < r.terms.size(); ++i)
    r.maps.push_back(rewrap(dual_morphism(pr.maps[i]), r.terms[i], r.terms[i + 1]));
  r.terminated = pr.terminated;

  // Independent route for the leading terms: iterated injective envelopes.
  Morphism e0 = injective_envelope(m);
  if (!is_isomorphic(r.terms[0], e0.tgt()))
    fail(Errc::internal_error, "injective resolution routes disagree at term 0");
  if (r.terms.size() >= 2) {
    Morphism e1 = injective_envelope(cokernel(e0).module);
    if (!is_isomorphic(r.terms[1], e1.tgt()))
      fail(Errc::internal_error, "injective resolution routes disagree at term 1");
  }
  return r;
}

int ext_dim(const Module& m, const Module& n, int i) {
  check(i >= 0, "ext index must be nonnegative");
  if (!same_algebra(m.algebra(), n.algebra()))
    fail(Errc::algebra_mismatch, "ext between modules over different algebras");
  if (i == 0) return static_cast<int>(hom_space(m, n).size());
  return ext_dim_from(min_proj_resolution(m, i - 1), n, i);
}

int ext_dim_from(const ProjResolution& r, const Module& n, int i) {
  check(i >= 0, "ext index must be nonnegative");
  if (!same_algebra(r.target.algebra(), n.algebra()))
    fail(Errc::algebra_mismatch, "ext between modules over different algebras");
  if (i == 0) return static_cast<int>(hom_space(r.target, n).size());
  if (static_cast<std::size_t>(i) > r.syzygies.size()) {
    check(r.terminated, "resolution too shallow for the requested ext degree");
    return 0;
  }
  const Module& cur = r.syzygies[i - 1];
  if (cur.total_dim() == 0) return 0;
  const Morphism& incl = r.inclusions[i - 1];
  std::vector<Morphism> cocycles = hom_space(cur, n);
  if (cocycles.empty()) return 0;
  std::vector<Morphism> from_term = hom_space(incl.tgt(), n);
  std::vector<std::vector<Scalar>> flats;
  for (const Morphism& psi : from_term) flats.push_back(compose(incl, psi).flatten());
  Matrix rows = flats_matrix(n.algebra()->field(), flats, hom_flat_dim(cur, n));
  return static_cast<int>(cocycles.size()) - static_cast<int>(rank(rows));
}

int stable_hom_dim(const Module& m, const Module& n) {
  std::vector<Morphism> homs = hom_space(m, n);
  if (homs.empty()) return 0;
  Morphism cover = projective_cover(n);
  std::vector<Morphism> through = hom_space(m, cover.src());
  std::vector<std::vector<Scalar>> flats;
  for (const Morphism& psi : through) flats.push_back(compose(psi, cover).flatten());
  Matrix rows = flats_matrix(m.algebra()->field(), flats, hom_flat_dim(m, n));
  return static_cast<int>(homs.size()) - static_cast<int>(rank(rows));
}

Morphism syzygy_induced_map(const Morphism& f, const SyzygyData& sm, const SyzygyData& sn) {
  const Field& fld = f.src().algebra()->field();
  const Module& pm = sm.cover.src();
  const Module& pn = sn.cover.src();
  // Lift f through the covers: g with g . cover_n = cover_m . f.
  std::vector<Morphism> basis = hom_space(pm, pn);
  std::vector<Scalar> target = compose(sm.cover, f).flatten();
  Matrix sys(fld, basis.size(), target.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto fl = compose(basis[i], sn.cover).flatten();
    for (std::size_t c = 0; c < fl.size(); ++c) sys.set(i, c, fl[c]);
  }
  auto sol = solve_left(sys, target);
  check(sol.has_value(), "lift through projective covers must exist");
  Morphism g = Morphism::zero(pm, pn);
  for (std::size_t i = 0; i < basis.size(); ++i) g = g.add(basis[i].scaled((*sol)[i]));
  // Restrict to the syzygies.
  Morphism restricted = compose(sm.inclusion, g);
  std::vector<Matrix> comps;
  for (int v = 0; v < f.src().num_vertices(); ++v) {
    auto c = solve_left_matrix(sn.inclusion.comp(v), restricted.comp(v));
    check(c.has_value(), "restricted lift must land in the target syzygy");
    comps.push_back(std::move(*c));
  }
  return Morphism(sm.syzygy, sn.syzygy, std::move(comps));
}

Morphism syzygy_induced_map(const Morphism& f) {
  return syzygy_induced_map(f, syzygy_of(f.src()), syzygy_of(f.tgt()));
}

namespace {

// The idempotent generator of the indecomposable projective at v sits in the
// first row of its vertex-v block.
int generator_row(const AlgebraPtr& a, const std::vector<int>& part_vertices, int part, int v) {
  int off = 0;
  for (int q = 0; q < part; ++q) {
    int w = part_vertices[q];
    for (int b = 0; b < a->dimension(); ++b)
      if (a->basis()[b].src == w && a->basis()[b].tgt == v) ++off;
  }
  return off;
}

}  // namespace

TransposeData transpose(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  AlgebraPtr op = opposite(a);
  const Field& f = a->field();

  CoverData c0 = projective_cover_data(m);
  SubQuotient k = kernel(c0.cover);
  CoverData c1 = projective_cover_data(k.module);
  Morphism d1 = compose(c1.cover, k.map);

  // Element matrix of d1: entry (q, p) lies in e_{w_q} A e_{v_p}, read off
  // from the image of the p-th generator.
  int np = static_cast<int>(c1.part_vertices.size());
  int nq = static_cast<int>(c0.part_vertices.size());
  std::vector<std::vector<SparseVec>> lambda(nq, std::vector<SparseVec>(np));
  for (int p = 0; p < np; ++p) {
    int vp = c1.part_vertices[p];
    int grow = generator_row(a, c1.part_vertices, p, vp);
    std::vector<Scalar> img = d1.comp(vp).row_vec(grow);
    int col = 0;
    for (int q = 0; q < nq; ++q) {
      int wq = c0.part_vertices[q];
      for (int b = 0; b < a->dimension(); ++b) {
        if (a->basis()[b].src != wq || a->basis()[b].tgt != vp) continue;
        if (!f.is_zero(img[col])) lambda[q][p].emplace_back(b, img[col]);
        ++col;
      }
    }
    check(col == static_cast<int>(img.size()), "generator image decomposition mismatch");
  }

  // Star: opposite projectives with the transposed element matrix acting by
  // left multiplication.
  std::vector<Module> src_parts, tgt_parts;
  for (int q = 0; q < nq; ++q) src_parts.push_back(projective_module(op, c0.part_vertices[q]));
  for (int p = 0; p < np; ++p) tgt_parts.push_back(projective_module(op, c1.part_vertices[p]));
  DirectSum src_sum = direct_sum(op, src_parts);
  DirectSum tgt_sum = direct_sum(op, tgt_parts);
  Morphism star = Morphism::zero(src_sum.module, tgt_sum.module);
  for (int q = 0; q < nq; ++q)
    for (int p = 0; p < np; ++p) {
      Morphism block = Morphism::zero(src_parts[q], tgt_parts[p]);
      for (const auto& [bidx, coeff] : lambda[q][p])
        block = block.add(left_mult_morphism(op, bidx).scaled(coeff));
      star = star.add(compose(compose(src_sum.projections[q], block), tgt_sum.inclusions[p]));
    }
  Module tr = cokernel(star).module;
  return {std::move(tr), std::move(star)};
}

Module star_dual(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  AlgebraPtr op = opposite(a);
  const Field& f = a->field();
  const auto& pres = a->presentation();

  std::vector<std::vector<Morphism>> bases(a->num_vertices());
  std::vector<Module> projs;
  for (int v = 0; v < a->num_vertices(); ++v) {
    projs.push_back(projective_module(a, v));
    bases[v] = hom_space(m, projs[v]);
  }
  std::vector<int> dims;
  for (int v = 0; v < a->num_vertices(); ++v) dims.push_back(static_cast<int>(bases[v].size()));

  std::vector<Matrix> act;
  for (std::size_t ar = 0; ar < pres.arrows.size(); ++ar) {
    int so = pres.arrows[ar].tgt;  // opposite orientation
    int to = pres.arrows[ar].src;
    // Postcomposition with left multiplication by the arrow.
    Morphism lsum = Morphism::zero(projs[so], projs[to]);
    for (const auto& [bidx, coeff] : a->reduce_path(to, {static_cast<int>(ar)}))
      lsum = lsum.add(left_mult_morphism(a, bidx).scaled(coeff));
    Matrix mat(f, dims[so], dims[to]);
    if (dims[to] > 0) {
      std::vector<std::vector<Scalar>> tflats;
      for (const Morphism& psi : bases[to]) tflats.push_back(psi.flatten());
      Matrix tmat = flats_matrix(f, tflats, hom_flat_dim(m, projs[to]));
      for (int r = 0; r < dims[so]; ++r) {
        auto coords = solve_left(tmat, compose(bases[so][r], lsum).flatten());
        check(coords.has_value(), "postcomposition must stay in the hom space");
        mat.set_row(r, *coords);
      }
    }
    act.push_back(std::move(mat));
  }
  return Module(op, std::move(dims), std::move(act));
}

Morphism star_dual_map(const Morphism& f) {
  const AlgebraPtr& a = f.src().algebra();
  const Field& fld = a->field();
  Module sn = star_dual(f.tgt());
  Module sm = star_dual(f.src());
  std::vector<Matrix> comps;
  for (int v = 0; v < a->num_vertices(); ++v) {
    Module pv = projective_module(a, v);
    std::vector<Morphism> nb = hom_space(f.tgt(), pv);
    std::vector<Morphism> mb = hom_space(f.src(), pv);
    Matrix mat(fld, nb.size(), mb.size());
    if (!mb.empty()) {
      std::vector<std::vector<Scalar>> mflats;
      for (const Morphism& psi : mb) mflats.push_back(psi.flatten());
      Matrix mmat = flats_matrix(fld, mflats, hom_flat_dim(f.src(), pv));
      for (std::size_t r = 0; r < nb.size(); ++r) {
        auto coords = solve_left(mmat, compose(f, nb[r]).flatten());
        check(coords.has_value(), "precomposition must stay in the hom space");
        mat.set_row(static_cast<int>(r), *coords);
      }
    }
    comps.push_back(std::move(mat));
  }
  return Morphism(std::move(sn), std::move(sm), std::move(comps));
}

Morphism evaluation_map(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  AlgebraPtr op = opposite(a);
  const Field& f = a->field();
  Module ms = star_dual(m);
  Module mss = star_dual(ms);

  std::vector<std::vector<Morphism>> bases(a->num_vertices());
  for (int v = 0; v < a->num_vertices(); ++v) bases[v] = hom_space(m, projective_module(a, v));

  std::vector<Matrix> comps;
  for (int v = 0; v < a->num_vertices(); ++v) {
    Module pop = projective_module(op, v);
    std::vector<Morphism> b2 = hom_space(ms, pop);
    check(static_cast<int>(b2.size()) == mss.dim(v), "double dual basis mismatch");
    Matrix mat(f, m.dim(v), mss.dim(v));
    if (m.dim(v) > 0 && mss.dim(v) > 0) {
      std::vector<std::vector<Scalar>> b2flats;
      for (const Morphism& phi : b2) b2flats.push_back(phi.flatten());
      Matrix b2mat = flats_matrix(f, b2flats, hom_flat_dim(ms, pop));
      for (int r = 0; r < m.dim(v); ++r) {
        // Evaluation at the r-th basis vector of the vertex-v component, as a
        // morphism ms -> pop.
        std::vector<Matrix> phi_comps;
        for (int w = 0; w < a->num_vertices(); ++w) {
          Matrix pw(f, ms.dim(w), pop.dim(w));
          for (int s = 0; s < ms.dim(w); ++s) {
            std::vector<Scalar> img = bases[w][s].comp(v).row_vec(r);
            check(static_cast<int>(img.size()) == pop.dim(w), "evaluation row mismatch");
            pw.set_row(s, img);
          }
          phi_comps.push_back(std::move(pw));
        }
        Morphism phi(ms, pop, std::move(phi_comps));
        auto coords = solve_left(b2mat, phi.flatten());
        check(coords.has_value(), "evaluation image must lie in the double dual");
        mat.set_row(r, *coords);
      }
    }
    comps.push_back(std::move(mat));
  }
  return Morphism(m, mss, std::move(comps));
}

Ext1Presentation ext1_presentation(const Module& m, const Module& n) {
  Ext1Presentation out{syzygy_of(m), {}, Matrix(m.algebra()->field(), 0, 0), 0};
  out.cocycles = hom_space(out.syz.syzygy, n);
  std::vector<Morphism> from_term = hom_space(out.syz.inclusion.tgt(), n);
  std::vector<std::vector<Scalar>> flats;
  for (const Morphism& psi : from_term) flats.push_back(compose(out.syz.inclusion, psi).flatten());
  out.coboundaries =
      flats_matrix(m.algebra()->field(), flats, hom_flat_dim(out.syz.syzygy, n));
  out.dim = static_cast<int>(out.cocycles.size()) - static_cast<int>(rank(out.coboundaries));
  return out;
}

Extension extension_middle_term(const Module& m, const Module& n, const Morphism& cocycle) {
  const AlgebraPtr& a = m.algebra();
  const Field& f = a->field();
  SyzygyData syz = syzygy_of(m);
  if (!same_space(cocycle.src(), syz.syzygy) || !same_space(cocycle.tgt(), n))
    fail(Errc::dimension_mismatch, "cocycle must map the syzygy of m to n");

  const Module& p0 = syz.cover.src();
  DirectSum ds = direct_sum(a, {n, p0});
  // Pushout: divide n + P0 by the antidiagonal image of the syzygy.
  std::vector<Matrix> rows;
  for (int v = 0; v < m.num_vertices(); ++v)
    rows.push_back(cocycle.comp(v).hstack(syz.inclusion.comp(v).scaled(f.from_int(-1))));
  SubQuotient q = quotient(ds.module, rows);
  Morphism left = compose(ds.inclusions[0], q.map);

  std::vector<Matrix> right_comps;
  for (int v = 0; v < m.num_vertices(); ++v) {
    // (y, p) -> cover(p) vanishes on the divided subspace, so conjugating
    // with the canonical section is well defined.
    Matrix g(f, ds.module.dim(v), m.dim(v));
    const Matrix& cov = syz.cover.comp(v);
    for (int r = 0; r < nr(cov); ++r)
      for (int c = 0; c < nc(cov); ++c) g.set(n.dim(v) + r, c, cov.at(r, c));
    auto qs = quotient_with_section(f, ds.module.dim(v), row_space_basis(rows[v]));
    right_comps.push_back(qs.section.mul(g));
  }
  Morphism right(q.module, m, std::move(right_comps));
  check(left.is_mono() && right.is_epi(), "extension must be short exact");
  check(compose(left, right).is_zero(), "extension composite must vanish");
  check(q.module.total_dim() == n.total_dim() + m.total_dim(), "extension dimension mismatch");
  return {q.module, std::move(left), std::move(right)};
}

}  // namespace syzlab
