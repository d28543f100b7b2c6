#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"

namespace posat {

bool is_free(const Family& f, const Poset& p, Mode mode);

/// The sets S outside f for which f + S is still free, in canonical order.
/// Throws Error(NotFree) when f already contains a copy; the message lists the
/// images of that copy.
std::vector<Mask> unsaturated_witnesses(const Family& f, const Poset& p, Mode mode);

bool is_saturated(const Family& f, const Poset& p, Mode mode);

struct SearchOptions {
  /// Largest family size tried; -1 means 2^n.
  int max_size = -1;
  bool symmetry = true;
  bool theorem_pruning = true;
  int threads = 1;
  /// Hard cap on n. Searches above it throw InstanceTooLarge.
  int max_n = 5;
  /// Sets that may not appear in candidate families. Saturation is still
  /// judged against all of B_n.
  std::vector<Mask> excluded;
  /// Keep every canonical minimum certificate, not just the least one.
  bool collect_all_minimum = false;
  /// Wall-clock budget in seconds; <= 0 means unlimited.
  double time_limit = 0.0;
  /// Optional external stop flag.
  const std::atomic<bool>* cancel = nullptr;
};

struct SearchResult {
  /// Minimum saturated size, or empty when none exists up to searched_up_to.
  std::optional<int> value;
  Family certificate;
  /// All orbit representatives of minimum size (collect_all_minimum only).
  std::vector<Family> minimum_certificates;
  bool exhaustive = false;
  std::uint64_t families_examined = 0;
  int lower_start = 1;
  int searched_up_to = 0;
  bool symmetry_used = false;
  bool complement_symmetry_used = false;
  bool uctp_used = false;
  /// The target has no copy in B_n, so the full lattice is the only
  /// saturated family.
  bool vacuous = false;
  double wall_time = 0.0;
};

/// Exact sat(n,P) (weak) or isat(n,P) (induced) by enumerating families in
/// increasing size, one representative per symmetry orbit.
SearchResult minimum_saturated(int n, const Poset& p, Mode mode, const SearchOptions& opts = {});

/// Calls `visit` for one representative of every orbit of saturated families
/// with size in [min_size, max_size]. Returns the number of families examined.
/// Representatives are visited size by size in canonical order.
std::uint64_t for_each_saturated(int n, const Poset& p, Mode mode, int min_size, int max_size,
                                 const SearchOptions& opts,
                                 const std::function<void(const Family&)>& visit);

}  // namespace posat
