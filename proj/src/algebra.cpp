#include "syzlab/algebra.hpp"

#include <algorithm>

#include "syzlab/error.hpp"

namespace syzlab {

namespace {

constexpr std::size_t kMaxPathSpace = 200000;

struct PathInfo {
  int src, tgt;
  std::vector<int> arrows;
};

int walk(const QuiverPresentation& p, int src, const std::vector<int>& arrows) {
  int at = src;
  for (int ai : arrows) {
    check(p.arrows[ai].src == at, "non-composable arrow sequence");
    at = p.arrows[ai].tgt;
  }
  return at;
}

std::string path_name(const QuiverPresentation& p, const std::vector<int>& arrows) {
  std::string s;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += "*";
    s += p.arrows[arrows[i]].name;
  }
  return s;
}

// Longer paths first so that reduction rewrites long paths into shorter ones;
// arrow-sequence order breaks ties deterministically.
bool coord_before(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

}  // namespace

AlgebraPtr opposite(const AlgebraPtr& a) { return AlgebraPtr(a, a->opposite_ptr()); }

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a.get() == b.get(); }

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& x,
                                      const std::vector<Scalar>& y) const {
  check(x.size() == basis_.size() && y.size() == basis_.size(), "element length mismatch");
  std::vector<Scalar> r(basis_.size(), field_.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (field_.is_zero(y[j])) continue;
      Scalar c = field_.mul(x[i], y[j]);
      for (const auto& [k, s] : mult_[i][j]) r[k] = field_.add(r[k], field_.mul(c, s));
    }
  }
  return r;
}

SparseVec Algebra::reduce_path(int src, const std::vector<int>& arrows) const {
  if (derived_opposite_) {
    int tgt = walk(pres_, src, arrows);
    std::vector<int> rev(arrows.rbegin(), arrows.rend());
    return op_->reduce_path(tgt, rev);
  }
  if (arrows.empty()) return {{idempotent_[src], field_.one()}};
  if (static_cast<int>(arrows.size()) >= pres_.nilpotency_bound) return {};
  int tgt = walk(pres_, src, arrows);
  auto it = spans_.find({src, tgt});
  check(it != spans_.end(), "path component missing");
  const ComponentSpan& sp = it->second;
  auto cit = sp.coord_of.find(arrows);
  check(cit != sp.coord_of.end(), "path coordinate missing");
  std::vector<Scalar> e(sp.coord_arrows.size(), field_.zero());
  e[cit->second] = field_.one();
  std::vector<Scalar> res = reduce_mod_rows(sp.rr, std::move(e));
  SparseVec out;
  for (std::size_t c = 0; c < res.size(); ++c) {
    if (field_.is_zero(res[c])) continue;
    auto bit = basis_of_arrows_.find(sp.coord_arrows[c]);
    check(bit != basis_of_arrows_.end(), "residue not supported on basis paths");
    out.push_back({bit->second, res[c]});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int Algebra::basis_index_of(const std::vector<int>& arrows) const {
  auto it = basis_of_arrows_.find(arrows);
  return it == basis_of_arrows_.end() ? -1 : it->second;
}

bool Algebra::verify_identity() const {
  for (int b = 0; b < dimension(); ++b) {
    const SparseVec& l = mult_[idempotent_[basis_[b].src]][b];
    const SparseVec& r = mult_[b][idempotent_[basis_[b].tgt]];
    auto is_unit = [&](const SparseVec& v) {
      return v.size() == 1 && v[0].first == b && field_.is_one(v[0].second);
    };
    if (!is_unit(l) || !is_unit(r)) return false;
  }
  return true;
}

bool Algebra::verify_associativity() const {
  int n = dimension();
  const Field& f = field_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Scalar> lhs(n, f.zero()), rhs(n, f.zero());
        for (const auto& [m, c] : mult_[i][j])
          for (const auto& [t, d] : mult_[m][k]) lhs[t] = f.add(lhs[t], f.mul(c, d));
        for (const auto& [m, c] : mult_[j][k])
          for (const auto& [t, d] : mult_[i][m]) rhs[t] = f.add(rhs[t], f.mul(c, d));
        for (int t = 0; t < n; ++t)
          if (!f.eq(lhs[t], rhs[t])) return false;
      }
  return true;
}

struct AlgebraBuilder {
  static void build_primal(Algebra& alg, const QuiverPresentation& pres, const Field& f);
  static void derive_opposite(Algebra& op, const Algebra& primal);
  static void link(Algebra& a, Algebra& b) {
    a.op_ = &b;
    b.op_ = &a;
  }
};

void AlgebraBuilder::build_primal(Algebra& alg, const QuiverPresentation& pres, const Field& f) {
  pres.validate();
  alg.field_ = f;
  alg.pres_ = pres;
  const int nv = static_cast<int>(pres.vertices.size());
  const int N = pres.nilpotency_bound;

  // All paths of length 1..N, generated by length then lexicographically.
  std::vector<PathInfo> paths;
  std::map<std::vector<int>, int> path_id;
  std::vector<int> prev_level;
  for (int ai = 0; ai < static_cast<int>(pres.arrows.size()); ++ai) {
    paths.push_back({pres.arrows[ai].src, pres.arrows[ai].tgt, {ai}});
    path_id[paths.back().arrows] = static_cast<int>(paths.size()) - 1;
    prev_level.push_back(static_cast<int>(paths.size()) - 1);
  }
  for (int len = 2; len <= N && !prev_level.empty(); ++len) {
    std::vector<int> level;
    for (int pid : prev_level) {
      for (int ai = 0; ai < static_cast<int>(pres.arrows.size()); ++ai) {
        if (pres.arrows[ai].src != paths[pid].tgt) continue;
        PathInfo np{paths[pid].src, pres.arrows[ai].tgt, paths[pid].arrows};
        np.arrows.push_back(ai);
        paths.push_back(std::move(np));
        path_id[paths.back().arrows] = static_cast<int>(paths.size()) - 1;
        level.push_back(static_cast<int>(paths.size()) - 1);
        if (paths.size() > kMaxPathSpace)
          fail(Errc::semantic_error, "truncated path space too large");
      }
    }
    prev_level = std::move(level);
  }

  // Component spans, coordinates ordered so pivots land on longest paths.
  for (int pid = 0; pid < static_cast<int>(paths.size()); ++pid) {
    auto key = std::make_pair(paths[pid].src, paths[pid].tgt);
    alg.spans_[key].coord_arrows.push_back(paths[pid].arrows);
  }
  for (auto& [key, sp] : alg.spans_) {
    std::sort(sp.coord_arrows.begin(), sp.coord_arrows.end(), coord_before);
    for (int c = 0; c < static_cast<int>(sp.coord_arrows.size()); ++c)
      sp.coord_of[sp.coord_arrows[c]] = c;
  }

  // Span of p * r * q for every relation r, inside paths of length <= N;
  // terms that would exceed length N vanish there.
  std::map<std::pair<int, int>, std::vector<std::vector<Scalar>>> gen_rows;
  std::vector<std::vector<int>> by_tgt(nv), by_src(nv);
  for (int pid = 0; pid < static_cast<int>(paths.size()); ++pid) {
    by_tgt[paths[pid].tgt].push_back(pid);
    by_src[paths[pid].src].push_back(pid);
  }
  for (const Relation& rel : pres.relations) {
    int rs = pres.arrow_src(rel.terms.front());
    int rt = pres.arrow_tgt(rel.terms.front());
    int min_term = N + 1;
    for (const auto& t : rel.terms)
      min_term = std::min(min_term, static_cast<int>(t.arrows.size()));
    std::vector<int> lefts = {-1};
    for (int pid : by_tgt[rs]) lefts.push_back(pid);
    std::vector<int> rights = {-1};
    for (int pid : by_src[rt]) rights.push_back(pid);
    for (int lp : lefts) {
      int llen = lp < 0 ? 0 : static_cast<int>(paths[lp].arrows.size());
      for (int rp : rights) {
        int rlen = rp < 0 ? 0 : static_cast<int>(paths[rp].arrows.size());
        if (llen + min_term + rlen > N) continue;
        int gs = lp < 0 ? rs : paths[lp].src;
        int gt = rp < 0 ? rt : paths[rp].tgt;
        const Algebra::ComponentSpan& sp = alg.spans_.at({gs, gt});
        std::vector<Scalar> row(sp.coord_arrows.size(), f.zero());
        bool nonzero = false;
        for (const auto& term : rel.terms) {
          int tlen = llen + static_cast<int>(term.arrows.size()) + rlen;
          if (tlen > N) continue;
          std::vector<int> full;
          if (lp >= 0) full = paths[lp].arrows;
          full.insert(full.end(), term.arrows.begin(), term.arrows.end());
          if (rp >= 0) full.insert(full.end(), paths[rp].arrows.begin(), paths[rp].arrows.end());
          int c = sp.coord_of.at(full);
          row[c] = f.add(row[c], f.from_int(term.coefficient));
          nonzero = true;
        }
        if (nonzero) gen_rows[{gs, gt}].push_back(std::move(row));
      }
    }
  }

  for (auto& [key, sp] : alg.spans_) {
    auto git = gen_rows.find(key);
    std::size_t nrows = git == gen_rows.end() ? 0 : git->second.size();
    Matrix gens(f, nrows, sp.coord_arrows.size());
    for (std::size_t i = 0; i < nrows; ++i) gens.set_row(i, git->second[i]);
    sp.rr = row_reduce(gens);
  }

  // J^N must land in the span: every length-N path reduces to zero.
  for (const auto& [key, sp] : alg.spans_) {
    for (std::size_t c = 0; c < sp.coord_arrows.size(); ++c) {
      if (static_cast<int>(sp.coord_arrows[c].size()) != N) continue;
      std::vector<Scalar> e(sp.coord_arrows.size(), f.zero());
      e[c] = f.one();
      if (!in_row_space(sp.rr, e))
        fail(Errc::not_admissible,
             "path " + path_name(pres, sp.coord_arrows[c]) + " of length " + std::to_string(N) +
                 " does not reduce to zero");
    }
  }

  // Basis: idempotents, then surviving paths of length < N.
  alg.idempotent_.resize(nv);
  for (int v = 0; v < nv; ++v) {
    alg.basis_.push_back({v, v, {}});
    alg.idempotent_[v] = v;
  }
  std::vector<std::vector<int>> survivors;  // arrow sequences
  for (const auto& [key, sp] : alg.spans_) {
    std::vector<bool> is_pivot(sp.coord_arrows.size(), false);
    for (std::size_t pc : sp.rr.pivot_columns) is_pivot[pc] = true;
    for (std::size_t c = 0; c < sp.coord_arrows.size(); ++c)
      if (!is_pivot[c] && static_cast<int>(sp.coord_arrows[c].size()) < N)
        survivors.push_back(sp.coord_arrows[c]);
  }
  std::sort(survivors.begin(), survivors.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& arrows : survivors) {
    int pid = path_id.at(arrows);
    alg.basis_.push_back({paths[pid].src, paths[pid].tgt, arrows});
    alg.basis_of_arrows_[arrows] = static_cast<int>(alg.basis_.size()) - 1;
  }

  // Multiplication table.
  int dim = alg.dimension();
  alg.mult_.assign(dim, std::vector<SparseVec>(dim));
  for (int i = 0; i < dim; ++i) {
    const BasisPath& bi = alg.basis_[i];
    for (int j = 0; j < dim; ++j) {
      const BasisPath& bj = alg.basis_[j];
      if (bi.tgt != bj.src) continue;
      if (bi.length() == 0) {
        alg.mult_[i][j] = {{j, f.one()}};
      } else if (bj.length() == 0) {
        alg.mult_[i][j] = {{i, f.one()}};
      } else if (bi.length() + bj.length() < N) {
        std::vector<int> cat = bi.arrows;
        cat.insert(cat.end(), bj.arrows.begin(), bj.arrows.end());
        alg.mult_[i][j] = alg.reduce_path(bi.src, cat);
      }
    }
  }

  int max_len = 0;
  for (const auto& b : alg.basis_) max_len = std::max(max_len, b.length());
  for (int k = 1; k <= max_len; ++k) {
    std::vector<int> layer;
    for (int i = 0; i < dim; ++i)
      if (alg.basis_[i].length() >= k) layer.push_back(i);
    alg.radical_layers_.push_back(std::move(layer));
  }
}

void AlgebraBuilder::derive_opposite(Algebra& op, const Algebra& primal) {
  op.field_ = primal.field_;
  op.pres_ = reversed(primal.pres_);
  op.idempotent_ = primal.idempotent_;
  op.radical_layers_ = primal.radical_layers_;
  op.derived_opposite_ = true;
  for (const BasisPath& b : primal.basis_) {
    BasisPath r{b.tgt, b.src, {b.arrows.rbegin(), b.arrows.rend()}};
    op.basis_.push_back(r);
    if (!r.arrows.empty())
      op.basis_of_arrows_[op.basis_.back().arrows] = static_cast<int>(op.basis_.size()) - 1;
  }
  int dim = primal.dimension();
  op.mult_.assign(dim, std::vector<SparseVec>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) op.mult_[i][j] = primal.mult_[j][i];
}

namespace {
struct AlgebraPair {
  Algebra primal;
  Algebra opp;
};
}  // namespace

AlgebraPtr build_algebra(const QuiverPresentation& p, const Field& f) {
  auto pair = std::make_shared<AlgebraPair>();
  AlgebraBuilder::build_primal(pair->primal, p, f);
  AlgebraBuilder::derive_opposite(pair->opp, pair->primal);
  AlgebraBuilder::link(pair->primal, pair->opp);
  return AlgebraPtr(pair, &pair->primal);
}

}  // namespace syzlab
