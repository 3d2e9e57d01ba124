#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circbut/circulant.hpp"
#include "circbut/obstructions.hpp"

namespace circbut {

// Equivalence used to count classes. RotateAndConstant is the relation the
// classification is stated under; the wider groups are available for
// cross-checks (reversal = transpose, Galois = exponent multiplication by
// units of Z/lZ).
enum class EquivalenceGroup {
  RotateAndConstant,
  RotateConstantAndReversal,
  RotateConstantAndGalois,
  RotateConstantGaloisReversal,
};

const char* equivalence_group_name(EquivalenceGroup g);

struct SearchConfig {
  EquivalenceGroup equivalence_group = EquivalenceGroup::RotateAndConstant;
  int worker_count = 1;
  std::uint64_t node_budget = 500'000'000;
};

struct SearchReport {
  int n = 0;
  int l = 0;
  bool hermitian_only = false;
  EquivalenceGroup group = EquivalenceGroup::RotateAndConstant;
  long class_count = 0;
  std::vector<ExponentRow> representatives;  // sorted canonical forms
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned = 0;
  double wall_seconds = 0.0;
};

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical form under the chosen group (lex-min over all transforms).
ExponentRow group_canonical(const ExponentRow& row, EquivalenceGroup g);

// Exhaustive DFS over first rows with e[0] = 0, pruned by partial
// autocorrelation bounds and rotation prefix-minimality; exact leaf checks.
SearchReport classify_cell(int n, int l, const SearchConfig& config = {});

// Same search restricted to Hermitian rows e[(n-k) mod n] = -e[k].
SearchReport classify_hermitian(int n, int l, const SearchConfig& config = {});

struct PrimeUniquenessReport {
  int p = 0;
  long circulant_class_count = 0;  // classes under the configured group
  bool all_quadratic = false;      // every representative fits a quadratic
  bool all_reduce_to_fourier = false;
  // classes up to full Hadamard equivalence implied by the reduction
  long fourier_class_count = 0;
  bool unique = false;  // all classes reduce to F_p
};

// For p <= 7 enumerates C_p^circ(p); for p in {11, 13} uses the planar
// characterization (quadratic rows are the only candidates) instead of raw
// enumeration.
PrimeUniquenessReport prime_uniqueness_audit(int p, const SearchConfig& config = {});

struct TableCell {
  int n = 0;
  int l = 0;
  ObstructionVerdict obstruction;
  std::optional<long> class_count;  // empty when over budget or obstructed
  bool over_budget = false;
};

struct TableSweep {
  int n_max = 0;
  int l_max = 0;
  std::vector<TableCell> cells;  // row-major over n in [2, n_max], l in [2, l_max]
};

// Obstruction check per cell, then exact classification when the raw volume
// l^{n-1} stays within max_volume.
TableSweep sweep_table(int n_max, int l_max, const SearchConfig& config = {},
                       double max_volume = 2e7);

std::string render_table(const TableSweep& sweep);

}  // namespace circbut
