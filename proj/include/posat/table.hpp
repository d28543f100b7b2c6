#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"

namespace posat {

struct BoundRow {
  int n = 0;
  int uctp_bound = 1;
  std::optional<long long> paper_bound_low;
  std::optional<long long> paper_bound_high;
  std::optional<long long> computed_or_construction;
  std::string source;  // "search", "search-partial", "construction:<name>" or "none"
};

struct TableOptions {
  /// Rows with n <= this are computed by exhaustive search.
  int compute_up_to = 0;
  /// Verify the construction that fills a row when n <= this.
  int verify_up_to = 8;
  int threads = 1;
};

/// Known lower/upper bounds for a catalog target, or empty when none are
/// recorded. `key` is a catalog key such as "diamond-2".
std::pair<std::optional<long long>, std::optional<long long>> known_bounds(const std::string& key,
                                                                          Mode mode, int n);

/// One row per n in [n_lo, n_hi]. Throws Internal if a computed value falls
/// below the UCTP bound.
std::vector<BoundRow> bound_table(const std::string& key, Mode mode, int n_lo, int n_hi,
                                  const TableOptions& opts = {});

}  // namespace posat
