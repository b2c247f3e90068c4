#include "syzlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <thread>
#include <vector>

#include "syzlab/error.hpp"

namespace syzlab {
namespace {

using nlohmann::ordered_json;

struct Candidate {
  int vertices = 1;
  std::vector<std::pair<int, int>> arrows;     // (src, tgt)
  std::vector<std::pair<int, int>> relations;  // composable arrow index pairs
  int nilpotency = 2;
};

// Relabeling-invariant key: minimum over vertex and arrow permutations of a
// flat integer encoding.
std::vector<int> canonical_key(const Candidate& c) {
  int nv = c.vertices;
  int na = static_cast<int>(c.arrows.size());
  std::vector<int> sigma(nv), tau(na);
  for (int i = 0; i < nv; ++i) sigma[i] = i;
  std::vector<int> best;
  do {
    for (int i = 0; i < na; ++i) tau[i] = i;
    do {
      std::vector<int> enc;
      enc.reserve(3 + static_cast<std::size_t>(na) + c.relations.size());
      enc.push_back(nv);
      enc.push_back(na);
      enc.push_back(c.nilpotency);
      std::vector<int> arr(static_cast<std::size_t>(na));
      for (int i = 0; i < na; ++i) {
        arr[static_cast<std::size_t>(tau[i])] =
            sigma[c.arrows[static_cast<std::size_t>(i)].first] * nv +
            sigma[c.arrows[static_cast<std::size_t>(i)].second];
      }
      enc.insert(enc.end(), arr.begin(), arr.end());
      std::vector<int> rel;
      for (const auto& [i, j] : c.relations) rel.push_back(tau[i] * na + tau[j]);
      std::sort(rel.begin(), rel.end());
      enc.insert(enc.end(), rel.begin(), rel.end());
      if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

Candidate decode_key(const std::vector<int>& key) {
  Candidate c;
  c.vertices = key[0];
  int na = key[1];
  c.nilpotency = key[2];
  std::size_t pos = 3;
  for (int i = 0; i < na; ++i, ++pos) {
    c.arrows.push_back({key[pos] / c.vertices, key[pos] % c.vertices});
  }
  for (; pos < key.size(); ++pos) {
    c.relations.push_back({key[pos] / na, key[pos] % na});
  }
  return c;
}

QuiverPresentation to_presentation(const Candidate& c) {
  QuiverPresentation p;
  for (int v = 0; v < c.vertices; ++v) p.vertices.push_back("v" + std::to_string(v));
  for (std::size_t i = 0; i < c.arrows.size(); ++i) {
    p.arrows.push_back({"a" + std::to_string(i), c.arrows[i].first, c.arrows[i].second});
  }
  for (const auto& [i, j] : c.relations) {
    p.relations.push_back({{{1, {i, j}}}});
  }
  p.nilpotency_bound = c.nilpotency;
  return p;
}

// Enumeration order: vertex count, arrow count, endpoint assignment, relation
// mask; only the first presentation of each relabeling class survives.
std::vector<Candidate> enumerate_candidates(const ScanOptions& opts) {
  std::vector<Candidate> out;
  std::set<std::vector<int>> seen;
  for (int nv = 1; nv <= opts.max_vertices; ++nv) {
    for (int na = 0; na <= opts.max_arrows; ++na) {
      std::int64_t assignments = 1;
      for (int i = 0; i < na; ++i) assignments *= nv * nv;
      for (std::int64_t code = 0; code < assignments; ++code) {
        Candidate base;
        base.vertices = nv;
        std::int64_t rest = code;
        for (int i = 0; i < na; ++i) {
          int pair = static_cast<int>(rest % (nv * nv));
          rest /= nv * nv;
          base.arrows.push_back({pair / nv, pair % nv});
        }
        std::vector<std::pair<int, int>> twopaths;
        for (int i = 0; i < na; ++i) {
          for (int j = 0; j < na; ++j) {
            if (base.arrows[static_cast<std::size_t>(i)].second ==
                base.arrows[static_cast<std::size_t>(j)].first) {
              twopaths.push_back({i, j});
            }
          }
        }
        std::size_t masks = opts.rad_cube_zero ? (std::size_t{1} << twopaths.size()) : 1;
        for (std::size_t mask = 0; mask < masks; ++mask) {
          Candidate c = base;
          c.nilpotency = opts.rad_cube_zero ? 3 : 2;
          if (opts.rad_cube_zero) {
            for (std::size_t b = 0; b < twopaths.size(); ++b) {
              if (mask & (std::size_t{1} << b)) c.relations.push_back(twopaths[b]);
            }
          } else {
            // Radical square zero: every length-2 path is a relation.
            c.relations = twopaths;
          }
          std::vector<int> key = canonical_key(c);
          if (!seen.insert(key).second) continue;
          Candidate canon = decode_key(key);
          if (opts.rad_cube_zero) {
            // The chosen relations may fail to bound the radical; drop those
            // presentations instead of reporting on an infinite algebra.
            try {
              build_algebra(to_presentation(canon), opts.field);
            } catch (const Error&) {
              continue;
            }
          }
          out.push_back(std::move(canon));
        }
      }
    }
  }
  return out;
}

struct LineResult {
  std::string text;
  bool violation = false;
  bool tension = false;
  bool gap = false;
};

LineResult scan_one(const Candidate& c, const std::string& id, const ScanOptions& opts) {
  QuiverPresentation pres = to_presentation(c);
  AlgebraPtr a = build_algebra(pres, opts.field);
  SearchOptions so;
  so.seed = opts.seed;
  InvariantLab lab(a, opts.depth, opts.pool_cap, so);
  InvariantReport rep = lab.report(id);

  LineResult res;
  res.violation = !rep.inconsistencies.empty();
  res.tension = !rep.selfinjective && (!rep.dominant.decided || rep.dominant.value >= opts.depth);
  for (const GncWitness& w : rep.gnc) {
    if (!w.found) res.gap = true;
  }

  ordered_json line;
  line["id"] = id;
  ordered_json pj;
  pj["vertices"] = c.vertices;
  ordered_json arrows = ordered_json::array();
  for (const auto& [s, t] : c.arrows) arrows.push_back({s, t});
  pj["arrows"] = arrows;
  ordered_json rels = ordered_json::array();
  for (const auto& [i, j] : c.relations) rels.push_back({i, j});
  pj["relations"] = rels;
  pj["nilpotency"] = c.nilpotency;
  line["presentation"] = pj;
  ordered_json flags = ordered_json::array();
  if (res.violation) flags.push_back("THEOREM_VIOLATION");
  if (res.tension) flags.push_back("NC_TENSION");
  if (res.gap) flags.push_back("GNC_GAP");
  line["flags"] = flags;
  line["report"] = report_to_json(rep, opts.field, opts.seed);
  res.text = line.dump() + "\n";
  return res;
}

std::string scan_id(std::size_t index) {
  std::string num = std::to_string(index);
  while (num.size() < 4) num.insert(num.begin(), '0');
  return "scan-" + num;
}

}  // namespace

ScanOutcome run_scan(const ScanOptions& opts, std::ostream& out) {
  if (opts.max_vertices < 1 || opts.max_vertices > 3) {
    fail(Errc::usage_error, "--vertices must be between 1 and 3");
  }
  if (opts.max_arrows < 0 || opts.max_arrows > 4) {
    fail(Errc::usage_error, "--arrows must be between 0 and 4");
  }
  if (opts.depth < 1) fail(Errc::usage_error, "--depth must be positive");
  if (opts.jobs < 1) fail(Errc::usage_error, "--jobs must be positive");

  std::vector<Candidate> cands = enumerate_candidates(opts);
  ScanOutcome outcome;

  auto account = [&](const LineResult& r) {
    out << r.text;
    ++outcome.algebras;
    if (r.violation) ++outcome.theorem_violations;
    if (r.tension) ++outcome.nc_tension;
    if (r.gap) ++outcome.gnc_gap;
    return !r.violation;
  };

  if (opts.jobs == 1 || cands.size() <= 1) {
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!account(scan_one(cands[i], scan_id(i), opts))) break;
    }
    return outcome;
  }

  std::vector<std::optional<LineResult>> results(cands.size());
  std::vector<std::exception_ptr> errors(cands.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancel{false};
  std::mutex mu;
  std::condition_variable cv;

  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), cands.size());
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= cands.size() || cancel.load()) return;
        LineResult r;
        std::exception_ptr err;
        try {
          r = scan_one(cands[i], scan_id(i), opts);
        } catch (...) {
          err = std::current_exception();
        }
        std::lock_guard<std::mutex> lock(mu);
        if (err) {
          errors[i] = err;
        } else {
          results[i] = std::move(r);
        }
        cv.notify_all();
      }
    });
  }

  std::exception_ptr first_error;
  {
    std::unique_lock<std::mutex> lock(mu);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      cv.wait(lock, [&] { return results[i].has_value() || errors[i] != nullptr; });
      if (errors[i]) {
        first_error = errors[i];
        cancel.store(true);
        break;
      }
      if (!account(*results[i])) {
        cancel.store(true);
        break;
      }
    }
  }
  cancel.store(true);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return outcome;
}

}  // namespace syzlab
