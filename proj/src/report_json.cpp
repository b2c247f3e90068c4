#include "syzlab/report_json.hpp"

namespace syzlab {
namespace {

using nlohmann::ordered_json;

ordered_json dim_json(const DimResult& d) {
  return {{"decided", d.decided},
          {"value", d.value},
          {"cap", d.cap},
          {"budget_hit", d.budget_hit}};
}

ordered_json domdim_json(const DomDimResult& d) {
  return {{"decided", d.decided},
          {"value", d.value},
          {"cap", d.cap},
          {"resolution_terminated", d.resolution_terminated},
          {"term_dims", d.term_dims}};
}

ordered_json omega_json(const OmegaResult& o, const Field& f) {
  ordered_json j;
  j["value"] = truth_label(o.value);
  j["depth"] = o.depth;
  if (o.chain.has_value()) {
    std::vector<int> dims;
    for (const Module& t : o.chain->terms) dims.push_back(t.total_dim());
    j["chain_term_dims"] = dims;
  }
  if (!o.torsion_ext_dims.empty()) j["torsion_ext_dims"] = o.torsion_ext_dims;
  if (!o.eval_kernel.empty()) {
    std::vector<std::string> ker;
    for (const Scalar& s : o.eval_kernel) ker.push_back(f.to_string(s));
    j["eval_kernel"] = ker;
  }
  return j;
}

}  // namespace

ordered_json report_to_json(const InvariantReport& r, const Field& f, unsigned long seed) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["seed"] = seed;
  j["algebra"] = {{"id", r.algebra_id},
                  {"field", r.field_name},
                  {"dimension", r.algebra_dim},
                  {"vertices", r.num_vertices}};
  j["depth"] = r.depth;
  j["pool_cap"] = r.pool_cap;
  j["dominant_dimension"] = domdim_json(r.dominant);
  j["selfinjective"] = r.selfinjective;
  j["inj_dim_regular"] = dim_json(r.inj_dim_reg);

  ordered_json gnc = ordered_json::array();
  for (const GncWitness& w : r.gnc) {
    gnc.push_back({{"vertex", w.vertex},
                   {"found", w.found},
                   {"n", w.n},
                   {"multiplicity", w.multiplicity},
                   {"definitive_none", w.definitive_none}});
  }
  j["gnc_witnesses"] = gnc;

  {
    const CoGorensteinResult& c = r.co_gorenstein;
    ordered_json cj;
    cj["value"] = truth_label(c.value);
    cj["depth"] = c.depth;
    cj["certified"] = c.certified;
    cj["refuted"] = c.refuted;
    cj["inconclusive"] = c.inconclusive;
    if (c.violator >= 0) {
      cj["violator"] = c.violator;
      cj["violating_i"] = c.violating_i;
      cj["violating_dim"] = c.violating_dim;
    }
    j["co_gorenstein"] = cj;
  }

  ordered_json pool = ordered_json::array();
  for (std::size_t i = 0; i < r.pool_origins.size(); ++i) {
    ordered_json m;
    m["origin"] = r.pool_origins[i];
    m["dim"] = r.pool_dims[i];
    if (i < r.co_gorenstein.member_results.size()) {
      m["omega"] = omega_json(r.co_gorenstein.member_results[i], f);
    } else {
      m["omega"] = {{"value", truth_label(r.pool_omega_infty[i])}};
    }
    pool.push_back(m);
  }
  j["pool"] = pool;

  j["coregular_resolution_dims"] = r.p_dreg_dims;
  j["regular_injective_resolution_dims"] = r.i_reg_dims;
  {
    ordered_json a = ordered_json::array();
    for (const DimResult& d : r.inj_dim_p_dreg) a.push_back(dim_json(d));
    j["inj_dim_coregular_terms"] = a;
    ordered_json b = ordered_json::array();
    for (const DimResult& d : r.proj_dim_i_reg) b.push_back(dim_json(d));
    j["proj_dim_regular_injective_terms"] = b;
  }

  ordered_json closed = ordered_json::array();
  for (const PerKVerdict& v : r.ext_closed) {
    closed.push_back({{"k", v.k}, {"value", truth_label(v.value)}, {"inj_dim", dim_json(v.dim)}});
  }
  j["syzygy_ext_closed"] = closed;

  {
    const SymmetryReport& s = r.symmetry;
    ordered_json sj;
    sj["n"] = s.n;
    sj["side_inj"] = truth_label(s.side_inj);
    sj["side_proj"] = truth_label(s.side_proj);
    sj["agree"] = s.agree;
    ordered_json a = ordered_json::array();
    for (const DimResult& d : s.inj_dims) a.push_back(dim_json(d));
    sj["inj_dims"] = a;
    ordered_json b = ordered_json::array();
    for (const DimResult& d : s.proj_dims) b.push_back(dim_json(d));
    sj["proj_dims"] = b;
    j["left_right_symmetry"] = sj;
  }

  ordered_json hosh = ordered_json::array();
  for (const HoshinoCheck& h : r.hoshino) {
    hosh.push_back({{"d", h.d},
                    {"dom_ge_d", h.dom_ge_d},
                    {"p_terms_injective", h.p_terms_injective},
                    {"agree", h.agree}});
  }
  j["hoshino"] = hosh;

  {
    const NakayamaProbe& n = r.nakayama;
    ordered_json nj;
    nj["dominant"] = domdim_json(n.dom);
    nj["selfinjective"] = n.selfinjective;
    nj["sequence_splits"] = n.sequence_splits;
    nj["coker_dim"] = n.coker_dim;
    nj["applicable"] = n.applicable;
    if (n.applicable) {
      nj["coker_omega"] = omega_json(n.coker_infty, f);
      nj["coker_ext_dims"] = n.coker_ext_dims;
    }
    nj["p_coregular_injective"] = n.p_dreg_injective;
    nj["hoshino_agree"] = n.hoshino_agree;
    j["nakayama_probe"] = nj;
  }

  {
    const InjdimConsequences& c = r.injdim_consequences;
    ordered_json cj;
    cj["applicable"] = c.applicable;
    if (c.applicable) {
      cj["s"] = c.s;
      cj["checked"] = c.checked;
      cj["all_vanish"] = c.all_vanish;
      if (c.violator >= 0) {
        cj["violator"] = c.violator;
        cj["violating_i"] = c.violating_i;
      }
    }
    j["finite_injdim_consequences"] = cj;
  }

  {
    const ClosureSample& c = r.closure_level1;
    ordered_json cj;
    cj["pass"] = c.pass;
    cj["pairs_tested"] = c.pairs_tested;
    cj["classes_tested"] = c.classes_tested;
    cj["unknown_middles"] = c.unknown_middles;
    if (!c.pass) {
      cj["pair_sub"] = c.pair_sub;
      cj["pair_quot"] = c.pair_quot;
      if (c.counterexample.has_value()) cj["counterexample_dim"] = c.counterexample->total_dim();
    }
    j["closure_level1"] = cj;
  }

  j["inconsistencies"] = r.inconsistencies;
  return j;
}

std::string report_file_text(const InvariantReport& r, const Field& f, unsigned long seed) {
  return report_to_json(r, f, seed).dump(2) + "\n";
}

}  // namespace syzlab
