#include "syzlab/invariants.hpp"

#include "syzlab/error.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace syzlab {
namespace {

Module zero_module(const AlgebraPtr& a) {
  std::vector<int> dims(a->num_vertices(), 0);
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->presentation().arrows.size(); ++i)
    act.emplace_back(a->field(), 0, 0);
  return Module(a, std::move(dims), std::move(act));
}

// D of the regular module over the opposite algebra: a module over `a` whose
// projective resolution governs the right-module homology of `a`.
Module dual_regular(const AlgebraPtr& a) {
  return dual_module(regular_module(opposite(a)));
}

int hom_flat_dim(const Module& m, const Module& n) {
  int d = 0;
  for (int v = 0; v < m.num_vertices(); ++v) d += m.dim(v) * n.dim(v);
  return d;
}

Matrix flats_matrix(const Field& f, const std::vector<std::vector<Scalar>>& flats, int cols) {
  Matrix out(f, flats.size(), cols);
  for (std::size_t r = 0; r < flats.size(); ++r)
    for (int c = 0; c < cols; ++c) out.set(static_cast<int>(r), c, flats[r][c]);
  return out;
}

// Ext at one syzygy stage: Hom(syzygy, n) modulo restrictions from the cover.
int ext_step_dim(const SyzygyData& s, const Module& n) {
  if (s.syzygy.total_dim() == 0) return 0;
  std::vector<Morphism> cocycles = hom_space(s.syzygy, n);
  if (cocycles.empty()) return 0;
  std::vector<Morphism> from_term = hom_space(s.inclusion.tgt(), n);
  std::vector<std::vector<Scalar>> flats;
  for (const Morphism& psi : from_term) flats.push_back(compose(s.inclusion, psi).flatten());
  Matrix rows = flats_matrix(n.algebra()->field(), flats, hom_flat_dim(s.syzygy, n));
  return static_cast<int>(cocycles.size()) - static_cast<int>(rank(rows));
}

// Ext^i(m, n) for i = 1..depth along a budgeted minimal syzygy walk.
struct ExtWalk {
  std::vector<int> dims;
  bool complete = true;  // false: a syzygy outgrew the budget, table truncated
};
ExtWalk ext_walk(const Module& m, const Module& n, int depth, int dim_budget) {
  ExtWalk w;
  Module cur = m;
  for (int i = 1; i <= depth; ++i) {
    if (cur.total_dim() == 0) {
      w.dims.push_back(0);
      continue;
    }
    if (cur.total_dim() > dim_budget) {
      w.complete = false;
      break;
    }
    SyzygyData s = syzygy_of(cur);
    w.dims.push_back(ext_step_dim(s, n));
    cur = s.syzygy;
  }
  return w;
}

}  // namespace

const char* truth_label(Truth t) {
  switch (t) {
    case Truth::yes:
      return "TRUE";
    case Truth::no:
      return "FALSE";
    default:
      return "UNKNOWN_AT_DEPTH";
  }
}

bool is_projective(const Module& m) {
  if (m.total_dim() == 0) return true;
  return projective_cover(m).is_iso();
}

bool is_injective(const Module& m) { return is_projective(dual_module(m)); }

Truth dim_at_most(const DimResult& r, int bound) {
  if (r.decided) return r.value <= bound ? Truth::yes : Truth::no;
  return r.value > bound ? Truth::no : Truth::unknown;
}

DimResult proj_dim(const Module& m, int cap, int dim_budget) {
  check(cap >= 0, "dimension cap must be nonnegative");
  DimResult r;
  r.cap = cap;
  Module cur = m;
  for (int k = 0;; ++k) {
    if (cur.total_dim() == 0) {
      r.decided = true;
      r.value = k == 0 ? 0 : k - 1;
      return r;
    }
    if (cur.total_dim() > dim_budget) {
      r.budget_hit = true;
      return r;
    }
    Morphism cover = projective_cover(cur);
    if (cover.is_iso()) {
      r.decided = true;
      r.value = k;
      return r;
    }
    // cur is a nonzero non-projective k-th syzygy, so the dimension exceeds k.
    r.value = k + 1;
    if (k >= cap) return r;
    cur = kernel(cover).module;
  }
}

DimResult inj_dim(const Module& m, int cap, int dim_budget) {
  // Injective resolutions of m are dual to projective resolutions of D(m).
  return proj_dim(dual_module(m), cap, dim_budget);
}

DomDimResult dominant_dimension(const AlgebraPtr& a, int cap) {
  check(cap >= 0, "dominant dimension cap must be nonnegative");
  DomDimResult r;
  r.cap = cap;
  Module cur = regular_module(a);
  for (int k = 0; k <= cap; ++k) {
    if (cur.total_dim() == 0) {
      r.resolution_terminated = true;
      break;
    }
    Morphism env = injective_envelope(cur);
    r.term_dims.push_back(env.tgt().total_dim());
    if (!is_projective(env.tgt())) {
      r.decided = true;
      r.value = k;
      return r;
    }
    cur = cokernel(env).module;
  }
  r.value = cap + 1;
  return r;
}

bool is_selfinjective(const AlgebraPtr& a) {
  for (int v = 0; v < a->num_vertices(); ++v)
    if (!is_injective(projective_module(a, v))) return false;
  return true;
}

TorsionfreeResult n_torsionfree(const Module& m, int n, int dim_budget) {
  check(n >= 0, "torsionfree degree must be nonnegative");
  TorsionfreeResult r;
  if (n == 0) {
    r.torsionfree = true;
    return r;
  }
  TransposeData t = transpose(m);
  Module reg_op = regular_module(t.tr.algebra());
  ExtWalk w = ext_walk(t.tr, reg_op, n, dim_budget);
  r.ext_dims = w.dims;
  r.complete = w.complete;
  r.torsionfree = w.complete && std::all_of(w.dims.begin(), w.dims.end(),
                                            [](int d) { return d == 0; });
  return r;
}

bool recheck_omega_chain(const OmegaChain& c) {
  if (c.maps.size() != c.terms.size()) return false;
  if (c.terms.empty()) return true;
  if (!same_space(c.maps[0].src(), c.m) || !same_space(c.maps[0].tgt(), c.terms[0])) return false;
  for (std::size_t k = 1; k < c.maps.size(); ++k)
    if (!same_space(c.maps[k].src(), c.terms[k - 1]) ||
        !same_space(c.maps[k].tgt(), c.terms[k]))
      return false;
  if (!c.maps[0].is_mono()) return false;
  for (std::size_t k = 0; k + 1 < c.terms.size(); ++k) {
    if (!compose(c.maps[k], c.maps[k + 1]).is_zero()) return false;
    if (c.maps[k].rank() + c.maps[k + 1].rank() != c.terms[k].total_dim()) return false;
  }
  for (const Module& t : c.terms)
    if (!is_projective(t)) return false;
  return true;
}

OmegaResult omega_membership(const Module& m, int n, int dim_budget) {
  check(n >= 0, "syzygy level must be nonnegative");
  const AlgebraPtr& a = m.algebra();
  OmegaResult r;
  r.depth = n;
  if (n == 0) {
    r.value = Truth::yes;
    r.chain = OmegaChain{m, {}, {}};
    return r;
  }

  OmegaChain chain{m, {}, {}};
  Module cur = m;
  Morphism from_prev;  // terms.back() -> cur, once a term exists
  bool greedy_ok = true;
  for (int k = 0; k < n; ++k) {
    if (cur.total_dim() == 0) {
      Module z = zero_module(a);
      Morphism zm = chain.terms.empty() ? Morphism::zero(m, z)
                                        : Morphism::zero(chain.terms.back(), z);
      chain.terms.push_back(std::move(z));
      chain.maps.push_back(std::move(zm));
      cur = chain.terms.back();
      continue;
    }
    if (cur.total_dim() > dim_budget) {
      greedy_ok = false;
      break;
    }
    Morphism ev = evaluation_map(cur);
    if (!ev.is_mono()) {
      if (k == 0) {
        r.value = Truth::no;
        SubQuotient ker = kernel(ev);
        for (int v = 0; v < a->num_vertices(); ++v)
          if (ker.module.dim(v) > 0) {
            r.eval_kernel = ker.map.comp(v).row_vec(0);
            break;
          }
        return r;
      }
      greedy_ok = false;
      break;
    }
    // Canonical embedding into a projective: cur -> cur** -> (cover of cur*)*.
    Morphism emb = compose(ev, star_dual_map(projective_cover(star_dual(cur))));
    if (!emb.is_mono()) {
      greedy_ok = false;
      break;
    }
    chain.terms.push_back(emb.tgt());
    chain.maps.push_back(chain.terms.size() == 1 ? emb : compose(from_prev, emb));
    SubQuotient ck = cokernel(emb);
    from_prev = ck.map;
    cur = ck.module;
  }

  if (greedy_ok) {
    if (!recheck_omega_chain(chain))
      fail(Errc::internal_error, "constructed syzygy chain fails its own recheck");
    r.value = Truth::yes;
    r.chain = std::move(chain);
    return r;
  }

  TorsionfreeResult tf = n_torsionfree(m, n, dim_budget);
  r.torsion_ext_dims = tf.ext_dims;
  r.value = tf.torsionfree ? Truth::yes : Truth::unknown;
  return r;
}

OmegaResult omega_infty_certificate(const Module& m, int depth, int dim_budget) {
  OmegaResult r = omega_membership(m, depth, dim_budget);
  if (r.value == Truth::yes && !r.chain.has_value()) r.value = Truth::unknown;
  return r;
}

std::vector<PoolEntry> default_pool(const AlgebraPtr& a, int depth, int cap,
                                    const SearchOptions& opts) {
  check(depth >= 0 && cap >= 0, "pool depth and cap must be nonnegative");
  constexpr int kDimGuard = 24;  // children larger than this are not chased
  std::vector<PoolEntry> pool;
  std::vector<int> gen;

  auto try_add = [&](const Module& cand, const std::string& origin, int g) {
    if (static_cast<int>(pool.size()) >= cap) return;
    if (cand.total_dim() == 0 || cand.total_dim() > kDimGuard) return;
    for (const PoolEntry& e : pool)
      if (e.module.total_dim() == cand.total_dim() && is_isomorphic(e.module, cand, opts))
        return;
    pool.push_back({cand, origin});
    gen.push_back(g);
  };
  auto add_summands = [&](const Module& seed, const std::string& origin, int g) {
    if (seed.total_dim() == 0 || seed.total_dim() > kDimGuard) return;
    for (const Summand& s : decompose(seed, opts)) try_add(s.module, origin, g);
  };

  for (int v = 0; v < a->num_vertices(); ++v)
    try_add(simple_module(a, v), "simple v" + std::to_string(v), 0);
  for (int v = 0; v < a->num_vertices(); ++v)
    try_add(projective_module(a, v), "projective v" + std::to_string(v), 0);
  for (int v = 0; v < a->num_vertices(); ++v)
    add_summands(injective_module(a, v), "injective v" + std::to_string(v), 0);
  Module reg = regular_module(a);
  add_summands(radical_submodule(reg).module, "radical", 0);
  add_summands(cokernel(injective_envelope(reg)).module, "cosocle-cokernel", 0);

  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (gen[i] >= depth) continue;
    if (static_cast<int>(pool.size()) >= cap) break;
    Module parent = pool[i].module;  // copy: pool may reallocate
    std::string origin = pool[i].origin;
    int g = gen[i] + 1;
    add_summands(syzygy_of(parent).syzygy, "omega(" + origin + ")", g);
    add_summands(cokernel(injective_envelope(parent)).module, "cosyzygy(" + origin + ")", g);
  }
  return pool;
}

CoGorensteinResult co_gorenstein_check(const AlgebraPtr& a, int depth,
                                       const std::vector<PoolEntry>& pool, int dim_budget) {
  check(depth >= 1, "co-Gorenstein depth must be positive");
  CoGorensteinResult r;
  r.depth = depth;
  r.value = Truth::yes;
  Module reg = regular_module(a);
  for (std::size_t idx = 0; idx < pool.size(); ++idx) {
    OmegaResult o = omega_infty_certificate(pool[idx].module, depth, dim_budget);
    bool certified = o.value == Truth::yes;
    if (certified)
      r.certified.push_back(static_cast<int>(idx));
    else if (o.value == Truth::no)
      r.refuted.push_back(static_cast<int>(idx));
    else
      r.inconclusive.push_back(static_cast<int>(idx));
    r.member_results.push_back(std::move(o));
    if (!certified || r.value == Truth::no) continue;
    ExtWalk w = ext_walk(pool[idx].module, reg, depth, dim_budget);
    for (std::size_t i = 0; i < w.dims.size(); ++i) {
      if (w.dims[i] == 0) continue;
      r.value = Truth::no;
      r.violator = static_cast<int>(idx);
      r.violating_i = static_cast<int>(i) + 1;
      r.violating_dim = w.dims[i];
      break;
    }
  }
  return r;
}

std::vector<PerKVerdict> syzygy_ext_closed_test(const AlgebraPtr& a, int n, int dim_budget) {
  check(n >= 1, "extension-closure level must be positive");
  ProjResolution res = min_proj_resolution(dual_regular(a), n - 1);
  std::vector<PerKVerdict> out;
  for (int k = 0; k < n; ++k) {
    Module pk = static_cast<std::size_t>(k) < res.terms.size() ? res.terms[k] : zero_module(a);
    PerKVerdict v;
    v.k = k;
    v.dim = inj_dim(pk, k + 1, dim_budget);
    v.value = dim_at_most(v.dim, k + 1);
    out.push_back(std::move(v));
  }
  return out;
}

SymmetryReport left_right_symmetry_report(const AlgebraPtr& a, int n, int dim_budget) {
  check(n >= 1, "symmetry level must be positive");
  SymmetryReport r;
  r.n = n;
  ProjResolution pres = min_proj_resolution(dual_regular(a), n - 1);
  InjResolution ires = min_inj_resolution(regular_module(a), n - 1);
  bool inj_unknown = false, proj_unknown = false;
  r.side_inj = Truth::yes;
  r.side_proj = Truth::yes;
  for (int k = 0; k < n; ++k) {
    Module pk = static_cast<std::size_t>(k) < pres.terms.size() ? pres.terms[k] : zero_module(a);
    Module ik = static_cast<std::size_t>(k) < ires.terms.size() ? ires.terms[k] : zero_module(a);
    DimResult di = inj_dim(pk, k, dim_budget);
    DimResult dp = proj_dim(ik, k, dim_budget);
    Truth ti = dim_at_most(di, k);
    Truth tp = dim_at_most(dp, k);
    if (ti == Truth::no) r.side_inj = Truth::no;
    if (ti == Truth::unknown) inj_unknown = true;
    if (tp == Truth::no) r.side_proj = Truth::no;
    if (tp == Truth::unknown) proj_unknown = true;
    r.inj_dims.push_back(std::move(di));
    r.proj_dims.push_back(std::move(dp));
  }
  if (r.side_inj == Truth::yes && inj_unknown) r.side_inj = Truth::unknown;
  if (r.side_proj == Truth::yes && proj_unknown) r.side_proj = Truth::unknown;
  r.agree = r.side_inj == Truth::unknown || r.side_proj == Truth::unknown ||
            r.side_inj == r.side_proj;
  return r;
}

HoshinoCheck hoshino_consistency(const AlgebraPtr& a, int d) {
  check(d >= 0, "dominant dimension bound must be nonnegative");
  HoshinoCheck h;
  h.d = d;
  if (d == 0) {
    h.dom_ge_d = h.p_terms_injective = h.agree = true;
    return h;
  }
  DomDimResult dom = dominant_dimension(a, d);
  h.dom_ge_d = !dom.decided || dom.value >= d;
  ProjResolution res = min_proj_resolution(dual_regular(a), d - 1);
  h.p_terms_injective = true;
  for (int k = 0; k < d; ++k) {
    if (static_cast<std::size_t>(k) >= res.terms.size()) break;  // later terms vanish
    if (!is_injective(res.terms[k])) {
      h.p_terms_injective = false;
      break;
    }
  }
  h.agree = h.dom_ge_d == h.p_terms_injective;
  return h;
}

std::vector<GncWitness> gnc_witness_scan(const AlgebraPtr& a, int depth) {
  check(depth >= 0, "witness scan depth must be nonnegative");
  ProjResolution res = min_proj_resolution(dual_regular(a), depth);
  std::vector<GncWitness> out(a->num_vertices());
  for (int v = 0; v < a->num_vertices(); ++v) out[v].vertex = v;
  for (std::size_t n = 0; n < res.terms.size(); ++n) {
    std::vector<int> tops = top_multiplicities(res.terms[n]);
    for (int v = 0; v < a->num_vertices(); ++v) {
      if (out[v].found || tops[v] == 0) continue;
      out[v].found = true;
      out[v].n = static_cast<int>(n);
      out[v].multiplicity = tops[v];
    }
  }
  for (int v = 0; v < a->num_vertices(); ++v)
    if (!out[v].found) out[v].definitive_none = res.terminated;
  return out;
}

NakayamaProbe nakayama_probe(const AlgebraPtr& a, int depth) {
  check(depth >= 1, "probe depth must be positive");
  constexpr int kBudget = 128;
  NakayamaProbe p;
  p.dom = dominant_dimension(a, depth);
  p.selfinjective = is_selfinjective(a);
  Module reg = regular_module(a);
  Morphism env = injective_envelope(reg);
  p.sequence_splits = find_retraction(env).has_value();
  SubQuotient ck = cokernel(env);
  p.coker_dim = ck.module.total_dim();
  p.applicable = !p.dom.decided || p.dom.value >= depth;
  if (!p.applicable) return p;

  p.coker_infty = omega_infty_certificate(ck.module, depth - 1, kBudget);
  p.coker_ext_dims = ext_walk(ck.module, reg, depth, kBudget).dims;
  ProjResolution dres = min_proj_resolution(dual_regular(a), depth - 1);
  bool all_inj = true;
  for (int k = 0; k < depth; ++k) {
    bool inj = static_cast<std::size_t>(k) >= dres.terms.size() || is_injective(dres.terms[k]);
    p.p_dreg_injective.push_back(inj);
    all_inj = all_inj && inj;
  }
  // Dominant dimension >= depth forces the leading resolution terms of the
  // dual regular module to be injective.
  p.hoshino_agree = all_inj;
  return p;
}

InjdimConsequences finite_injdim_consequences(const AlgebraPtr& a, int depth,
                                              const std::vector<PoolEntry>& pool) {
  check(depth >= 1, "consequence depth must be positive");
  constexpr int kBudget = 128;
  InjdimConsequences r;
  Module reg = regular_module(a);
  DimResult id = inj_dim(reg, depth, kBudget);
  if (!id.decided) return r;
  r.applicable = true;
  r.s = id.value;
  if (depth - r.s < 1) return r;
  for (std::size_t idx = 0; idx < pool.size(); ++idx) {
    OmegaResult o = omega_infty_certificate(pool[idx].module, depth, kBudget);
    if (o.value != Truth::yes) continue;
    r.checked.push_back(static_cast<int>(idx));
    ExtWalk w = ext_walk(pool[idx].module, reg, depth - r.s, kBudget);
    for (std::size_t i = 0; i < w.dims.size(); ++i) {
      if (w.dims[i] == 0) continue;
      r.all_vanish = false;
      if (r.violator < 0) {
        r.violator = static_cast<int>(idx);
        r.violating_i = static_cast<int>(i) + 1;
      }
    }
  }
  return r;
}

ClosureSample extension_closure_sample(const AlgebraPtr& a, int k,
                                       const std::vector<PoolEntry>& pool, int budget) {
  check(k >= 1 && budget >= 0, "closure sampling needs a positive level");
  ClosureSample r;
  std::vector<int> members;  // pool indices certified at level k
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!same_algebra(pool[i].module.algebra(), a))
      fail(Errc::algebra_mismatch, "pool member over a different algebra");
    if (omega_membership(pool[i].module, k).value == Truth::yes)
      members.push_back(static_cast<int>(i));
  }

  int tested = 0;
  for (int zi : members) {
    for (int xi : members) {
      if (tested >= budget) return r;
      const Module& z = pool[zi].module;
      const Module& x = pool[xi].module;
      ++r.pairs_tested;
      Ext1Presentation e = ext1_presentation(z, x);
      // Subset sums of the cocycle basis; over GF(2) this covers every class.
      std::size_t ncoc = e.cocycles.size();
      std::size_t combos = std::size_t{1} << std::min<std::size_t>(ncoc, 10);
      for (std::size_t mask = 0; mask < combos && tested < budget; ++mask) {
        Morphism c = Morphism::zero(e.syz.syzygy, x);
        for (std::size_t b = 0; b < ncoc; ++b)
          if (mask & (std::size_t{1} << b)) c = c.add(e.cocycles[b]);
        Extension ext = extension_middle_term(z, x, c);
        ++tested;
        ++r.classes_tested;
        OmegaResult om = omega_membership(ext.middle, k);
        if (om.value == Truth::no) {
          r.pass = false;
          r.pair_sub = xi;
          r.pair_quot = zi;
          r.counterexample = ext.middle;
          return r;
        }
        if (om.value == Truth::unknown) ++r.unknown_middles;
      }
    }
  }
  return r;
}

StableSyzygyMap stable_syzygy_map(const Module& a, const Module& b) {
  if (!same_algebra(a.algebra(), b.algebra()))
    fail(Errc::algebra_mismatch, "stable map between modules over different algebras");
  const Field& f = a.algebra()->field();
  SyzygyData sa = syzygy_of(a);
  SyzygyData sb = syzygy_of(b);

  // Coordinates of the hom space together with the stable quotient by the
  // subspace of maps factoring through a projective.
  auto stable_coords = [&](const Module& m, const Module& n) {
    std::vector<Morphism> basis = hom_space(m, n);
    std::vector<std::vector<Scalar>> flats;
    for (const Morphism& h : basis) flats.push_back(h.flatten());
    Matrix bmat = flats_matrix(f, flats, hom_flat_dim(m, n));
    Morphism cover = projective_cover(n);
    std::vector<std::vector<Scalar>> factor_rows;
    for (const Morphism& psi : hom_space(m, cover.src())) {
      auto coords = solve_left(bmat, compose(psi, cover).flatten());
      check(coords.has_value(), "factoring map must lie in the hom space");
      factor_rows.push_back(std::move(*coords));
    }
    Matrix fmat = flats_matrix(f, factor_rows, static_cast<int>(basis.size()));
    auto qs = quotient_with_section(f, basis.size(), row_space_basis(fmat));
    return std::tuple{std::move(basis), std::move(bmat), std::move(qs)};
  };

  auto [dom_basis, dom_mat, dom_qs] = stable_coords(a, b);
  auto [cod_basis, cod_mat, cod_qs] = stable_coords(sa.syzygy, sb.syzygy);

  StableSyzygyMap out;
  out.dom_dim = static_cast<int>(dom_qs.quotient_dim);
  out.cod_dim = static_cast<int>(cod_qs.quotient_dim);

  Matrix mat(f, out.dom_dim, out.cod_dim);
  for (int j = 0; j < out.dom_dim; ++j) {
    std::vector<Scalar> rep = dom_qs.section.row_vec(j);
    Morphism g = Morphism::zero(a, b);
    for (std::size_t i = 0; i < dom_basis.size(); ++i) g = g.add(dom_basis[i].scaled(rep[i]));
    Morphism w = syzygy_induced_map(g, sa, sb);
    if (out.cod_dim > 0) {
      auto coords = solve_left(cod_mat, w.flatten());
      check(coords.has_value(), "induced map must lie in the syzygy hom space");
      Matrix crow(f, 1, coords->size());
      crow.set_row(0, *coords);
      mat.set_row(j, crow.mul(cod_qs.projection).row_vec(0));
    }
  }
  out.rank = static_cast<int>(rank(mat));
  out.bijective = out.dom_dim == out.cod_dim && out.rank == out.dom_dim;
  return out;
}

// --- aggregate report -------------------------------------------------------

InvariantLab::InvariantLab(AlgebraPtr a, int depth, int pool_cap, SearchOptions opts)
    : a_(std::move(a)), depth_(depth), pool_cap_(pool_cap), opts_(opts) {
  check(depth_ >= 1, "lab depth must be positive");
  check(pool_cap_ >= 1, "pool cap must be positive");
}

const std::vector<PoolEntry>& InvariantLab::pool() {
  if (!pool_) {
    pool_ = default_pool(a_, depth_, pool_cap_, opts_);
    pool_omega_.assign(pool_->size(), std::nullopt);
  }
  return *pool_;
}

const OmegaResult& InvariantLab::pool_omega_infty(int idx) {
  pool();
  check(idx >= 0 && static_cast<std::size_t>(idx) < pool_omega_.size(), "pool index out of range");
  if (!pool_omega_[idx])
    pool_omega_[idx] = omega_infty_certificate((*pool_)[idx].module, depth_);
  return *pool_omega_[idx];
}

const ProjResolution& InvariantLab::dreg_resolution() {
  if (!dreg_res_) dreg_res_ = min_proj_resolution(dual_regular(a_), depth_);
  return *dreg_res_;
}

const InjResolution& InvariantLab::reg_inj_resolution() {
  if (!reg_inj_res_) reg_inj_res_ = min_inj_resolution(regular_module(a_), depth_);
  return *reg_inj_res_;
}

InvariantReport InvariantLab::report(const std::string& algebra_id) {
  constexpr int kTableBudget = 128;
  InvariantReport rep;
  rep.algebra_id = algebra_id;
  rep.field_name = a_->field().name();
  rep.depth = depth_;
  rep.pool_cap = pool_cap_;
  rep.algebra_dim = a_->dimension();
  rep.num_vertices = a_->num_vertices();

  Module reg = regular_module(a_);
  rep.dominant = dominant_dimension(a_, depth_);
  rep.inj_dim_reg = inj_dim(reg, depth_, kTableBudget);
  rep.selfinjective = is_selfinjective(a_);
  rep.gnc = gnc_witness_scan(a_, depth_);
  rep.co_gorenstein = co_gorenstein_check(a_, depth_, pool(), kTableBudget);
  for (std::size_t i = 0; i < pool_->size(); ++i)
    if (!pool_omega_[i] && i < rep.co_gorenstein.member_results.size())
      pool_omega_[i] = rep.co_gorenstein.member_results[i];

  for (const Module& t : dreg_resolution().terms) rep.p_dreg_dims.push_back(t.total_dim());
  for (const Module& t : reg_inj_resolution().terms) rep.i_reg_dims.push_back(t.total_dim());
  for (int k = 0; k < depth_; ++k) {
    Module pk = static_cast<std::size_t>(k) < dreg_resolution().terms.size()
                    ? dreg_resolution().terms[k]
                    : zero_module(a_);
    Module ik = static_cast<std::size_t>(k) < reg_inj_resolution().terms.size()
                    ? reg_inj_resolution().terms[k]
                    : zero_module(a_);
    rep.inj_dim_p_dreg.push_back(inj_dim(pk, k + 1, kTableBudget));
    rep.proj_dim_i_reg.push_back(proj_dim(ik, k + 1, kTableBudget));
  }
  rep.ext_closed = syzygy_ext_closed_test(a_, depth_, kTableBudget);
  rep.symmetry = left_right_symmetry_report(a_, depth_, kTableBudget);
  for (int d = 1; d <= depth_; ++d) rep.hoshino.push_back(hoshino_consistency(a_, d));
  rep.nakayama = nakayama_probe(a_, depth_);
  rep.injdim_consequences = finite_injdim_consequences(a_, depth_, pool());
  rep.closure_level1 = extension_closure_sample(a_, 1, pool(), 48);

  for (std::size_t i = 0; i < pool_->size(); ++i) {
    rep.pool_origins.push_back((*pool_)[i].origin);
    rep.pool_dims.push_back((*pool_)[i].module.total_dim());
    rep.pool_omega_infty.push_back(pool_omega_infty(static_cast<int>(i)).value);
  }

  // Theorem cross-checks: anything recorded here is an internal inconsistency.
  auto flag = [&](const std::string& msg) { rep.inconsistencies.push_back(msg); };
  if (rep.symmetry.side_inj != Truth::unknown && rep.symmetry.side_proj != Truth::unknown &&
      rep.symmetry.side_inj != rep.symmetry.side_proj)
    flag("left-right symmetry sides disagree at n=" + std::to_string(rep.symmetry.n));
  for (const HoshinoCheck& h : rep.hoshino)
    if (!h.agree)
      flag("dominant dimension and injectivity of dual-regular resolution terms disagree at d=" +
           std::to_string(h.d));
  if (!rep.nakayama.hoshino_agree)
    flag("deep dominant dimension without injective dual-regular resolution terms");
  if (rep.injdim_consequences.applicable && !rep.injdim_consequences.all_vanish)
    flag("certified deep syzygy has nonvanishing ext against the regular module despite "
         "finite injective dimension");
  if (rep.co_gorenstein.value == Truth::no && rep.inj_dim_reg.decided)
    flag("co-Gorenstein refuted while the regular module has finite injective dimension");
  if (!rep.closure_level1.pass && !rep.ext_closed.empty() &&
      rep.ext_closed[0].value == Truth::yes)
    flag("extension closure counterexample at level 1 despite the positive resolution-term test");
  if (rep.selfinjective && rep.dominant.decided)
    flag("selfinjective algebra with finite dominant dimension");
  if (rep.selfinjective != rep.nakayama.sequence_splits)
    flag("selfinjectivity disagrees with splitting of the envelope sequence");
  if (dreg_resolution().terminated) {
    bool all_closed = true;
    for (const PerKVerdict& v : rep.ext_closed)
      if (v.value != Truth::yes) all_closed = false;
    bool gnc_all = true;
    int s_max = 0;
    for (const GncWitness& w : rep.gnc) {
      if (!w.found) gnc_all = false;
      s_max = std::max(s_max, w.n);
    }
    if (all_closed && gnc_all && dim_at_most(rep.inj_dim_reg, s_max + 1) == Truth::no)
      flag("witness indices and closure force a finite injective dimension bound that fails");
  }
  return rep;
}

}  // namespace syzlab
