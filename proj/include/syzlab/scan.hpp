#pragma once

#include <iosfwd>

#include "syzlab/parse.hpp"
#include "syzlab/report_json.hpp"

namespace syzlab {

struct ScanOptions {
  int max_vertices = 2;  // hard limit 3
  int max_arrows = 2;    // hard limit 4
  bool rad_cube_zero = false;
  Field field = Field::gf(2);
  int depth = 4;
  int pool_cap = 16;
  int jobs = 1;
  unsigned long seed = kDefaultSeed;
};

struct ScanOutcome {
  int algebras = 0;
  int theorem_violations = 0;
  int nc_tension = 0;
  int gnc_gap = 0;
};

// Enumerates quiver presentations up to the bounds, deduplicates up to
// vertex/arrow relabeling, reports each algebra as one JSON line on `out`.
// Stops at the first line flagged THEOREM_VIOLATION. Emission order is the
// enumeration order regardless of the job count.
ScanOutcome run_scan(const ScanOptions& opts, std::ostream& out);

}  // namespace syzlab
