#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzlab/homology.hpp"

namespace syzlab {

enum class Truth { yes, no, unknown };
const char* truth_label(Truth t);  // "TRUE" / "FALSE" / "UNKNOWN_AT_DEPTH"

bool is_projective(const Module& m);
bool is_injective(const Module& m);

// Homological dimension truncated at `cap`. When the resolution does not
// terminate within the cap (or a term exceeds the total-dimension budget),
// `decided` is false and `value` is the best lower bound established.
struct DimResult {
  bool decided = false;
  int value = 0;  // exact when decided, else a certified lower bound
  int cap = 0;
  bool budget_hit = false;
};
DimResult proj_dim(const Module& m, int cap, int dim_budget = 128);
DimResult inj_dim(const Module& m, int cap, int dim_budget = 128);

// Three-valued comparison against a bound; `no` needs only the lower bound.
Truth dim_at_most(const DimResult& r, int bound);

struct DomDimResult {
  bool decided = false;  // false: >= cap
  int value = 0;
  int cap = 0;
  bool resolution_terminated = false;  // injective resolution stopped, all terms projective
  std::vector<int> term_dims;          // total dims of the injective terms examined
};
DomDimResult dominant_dimension(const AlgebraPtr& a, int cap);

bool is_selfinjective(const AlgebraPtr& a);

struct TorsionfreeResult {
  bool torsionfree = false;
  bool complete = true;       // false: a syzygy outgrew the budget, table truncated
  std::vector<int> ext_dims;  // Ext^i over the opposite algebra of (transpose, regular), i = 1..n
};
TorsionfreeResult n_torsionfree(const Module& m, int n, int dim_budget = 128);

// Exact chain 0 -> m -> terms[0] -> terms[1] -> ... with projective terms.
struct OmegaChain {
  Module m;
  std::vector<Module> terms;
  std::vector<Morphism> maps;  // maps[0]: m -> terms[0]; maps[k]: terms[k-1] -> terms[k]
};
// Validates the stored witness: monomorphism at the start, exactness at each
// interior term, projectivity of every term. No resolutions are recomputed.
bool recheck_omega_chain(const OmegaChain& c);

struct OmegaResult {
  Truth value = Truth::unknown;  // yes = IN, no = OUT
  int depth = 0;
  std::optional<OmegaChain> chain;       // IN witness
  std::vector<int> torsion_ext_dims;     // IN via n-torsionfreeness (no chain found)
  std::vector<Scalar> eval_kernel;       // OUT witness: kernel row of the evaluation map
};
OmegaResult omega_membership(const Module& m, int n, int dim_budget = 128);
// Bounded stand-in for membership in the infinite-syzygy class: IN only with
// an explicit chain of the full length.
OmegaResult omega_infty_certificate(const Module& m, int depth, int dim_budget = 128);

struct PoolEntry {
  Module module;
  std::string origin;  // e.g. "simple v0", "omega(rad)"
};
// Indecomposable summands of the simples, projectives, injectives, the
// radical of the regular module and the cokernel of its injective envelope,
// closed under syzygy and cosyzygy up to `depth` applications, deduplicated
// up to isomorphism and capped.
std::vector<PoolEntry> default_pool(const AlgebraPtr& a, int depth, int cap,
                                    const SearchOptions& opts = {});

struct CoGorensteinResult {
  Truth value = Truth::unknown;
  int depth = 0;
  std::vector<int> certified;     // pool indices whose infinite-syzygy certificate is IN
  std::vector<int> refuted;       // pool indices decided OUT
  std::vector<int> inconclusive;  // pool indices left UNKNOWN
  std::vector<OmegaResult> member_results;
  // populated when value == no:
  int violator = -1;
  int violating_i = 0;
  int violating_dim = 0;
};
CoGorensteinResult co_gorenstein_check(const AlgebraPtr& a, int depth,
                                       const std::vector<PoolEntry>& pool,
                                       int dim_budget = 128);

// Per k < n: does the k-th projective-resolution term of the dual regular
// module have injective dimension <= k+1? Verdicts transfer to closure of
// the syzygy classes under extensions.
struct PerKVerdict {
  int k = 0;
  Truth value = Truth::unknown;
  DimResult dim;
};
std::vector<PerKVerdict> syzygy_ext_closed_test(const AlgebraPtr& a, int n, int dim_budget = 128);

struct SymmetryReport {
  int n = 0;
  Truth side_inj = Truth::unknown;   // inj.dim of the k-th resolution term of D(reg) <= k, all k < n
  Truth side_proj = Truth::unknown;  // proj.dim of the k-th injective term of reg <= k, all k < n
  std::vector<DimResult> inj_dims;
  std::vector<DimResult> proj_dims;
  bool agree = true;  // equality whenever both sides are decided
};
SymmetryReport left_right_symmetry_report(const AlgebraPtr& a, int n, int dim_budget = 128);

struct HoshinoCheck {
  int d = 0;
  bool dom_ge_d = false;
  bool p_terms_injective = false;  // first d projective-resolution terms of D(reg) injective
  bool agree = false;
};
HoshinoCheck hoshino_consistency(const AlgebraPtr& a, int d);

struct GncWitness {
  int vertex = 0;
  bool found = false;
  int n = -1;
  int multiplicity = 0;
  bool definitive_none = false;  // resolution terminated without a witness
};
std::vector<GncWitness> gnc_witness_scan(const AlgebraPtr& a, int depth);

struct NakayamaProbe {
  DomDimResult dom;
  bool selfinjective = false;
  bool sequence_splits = false;  // 0 -> reg -> I_0 -> coker -> 0
  int coker_dim = 0;
  bool applicable = false;  // dominant dimension >= depth: deep branches below are filled
  OmegaResult coker_infty;
  std::vector<int> coker_ext_dims;  // Ext^{1..depth}(coker, reg)
  std::vector<bool> p_dreg_injective;
  bool hoshino_agree = true;
};
NakayamaProbe nakayama_probe(const AlgebraPtr& a, int depth);

struct InjdimConsequences {
  bool applicable = false;  // inj.dim of the regular module decided within depth
  int s = 0;
  std::vector<int> checked;  // pool indices with a full-length chain certificate
  bool all_vanish = true;
  int violator = -1;
  int violating_i = 0;
};
InjdimConsequences finite_injdim_consequences(const AlgebraPtr& a, int depth,
                                              const std::vector<PoolEntry>& pool);

struct ClosureSample {
  bool pass = true;
  int pairs_tested = 0;
  int classes_tested = 0;
  int unknown_middles = 0;
  int pair_sub = -1;   // pool index of the submodule end
  int pair_quot = -1;  // pool index of the quotient end
  std::optional<Module> counterexample;
};
// Samples extensions of level-k members by level-k members and verifies the
// middle terms stay in the class (OUT middles are counterexamples, UNKNOWN
// middles are only counted).
ClosureSample extension_closure_sample(const AlgebraPtr& a, int k,
                                       const std::vector<PoolEntry>& pool, int budget);

// The map on projectively stable hom spaces induced by the syzygy functor,
// stable(a, b) -> stable(syzygy a, syzygy b), as dimension data.
struct StableSyzygyMap {
  int dom_dim = 0;
  int cod_dim = 0;
  int rank = 0;
  bool bijective = false;
};
StableSyzygyMap stable_syzygy_map(const Module& a, const Module& b);

// --- aggregate report -------------------------------------------------------

struct InvariantReport {
  std::string algebra_id;
  std::string field_name;
  int depth = 0;
  int pool_cap = 0;
  int algebra_dim = 0;
  int num_vertices = 0;

  DomDimResult dominant;
  DimResult inj_dim_reg;
  bool selfinjective = false;
  std::vector<GncWitness> gnc;
  CoGorensteinResult co_gorenstein;

  std::vector<int> p_dreg_dims;  // total dims of the projective resolution terms of D(reg)
  std::vector<int> i_reg_dims;   // total dims of the injective resolution terms of reg
  std::vector<DimResult> inj_dim_p_dreg;
  std::vector<DimResult> proj_dim_i_reg;
  std::vector<PerKVerdict> ext_closed;
  SymmetryReport symmetry;
  std::vector<HoshinoCheck> hoshino;
  NakayamaProbe nakayama;
  InjdimConsequences injdim_consequences;
  ClosureSample closure_level1;

  std::vector<std::string> pool_origins;
  std::vector<int> pool_dims;
  std::vector<Truth> pool_omega_infty;

  // FALSE theorem cross-checks; any entry here is an internal inconsistency.
  std::vector<std::string> inconsistencies;
};

// Memoizing driver: one instance per (algebra, depth, pool cap) computes the
// pool and resolutions once and shares them across the checkers.
class InvariantLab {
 public:
  InvariantLab(AlgebraPtr a, int depth, int pool_cap, SearchOptions opts = {});

  const AlgebraPtr& algebra() const { return a_; }
  int depth() const { return depth_; }
  const std::vector<PoolEntry>& pool();
  const OmegaResult& pool_omega_infty(int idx);
  const ProjResolution& dreg_resolution();
  const InjResolution& reg_inj_resolution();

  InvariantReport report(const std::string& algebra_id);

 private:
  AlgebraPtr a_;
  int depth_;
  int pool_cap_;
  SearchOptions opts_;
  std::optional<std::vector<PoolEntry>> pool_;
  std::vector<std::optional<OmegaResult>> pool_omega_;
  std::optional<ProjResolution> dreg_res_;
  std::optional<InjResolution> reg_inj_res_;
};

}  // namespace syzlab
