#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"

namespace posat {

Family chains_construction(int n, int k);
/// `ell` odd, >= 3; the antichain bound is k = C(ell, (ell-1)/2).
Family antichain_construction(int n, int ell);
Family n_construction(int n);
Family butterfly_construction(int n);
Family diamond_interior_construction(int n);
Family weak_sat_construction(std::string_view target, int n, std::optional<int> k = std::nullopt);
Family q_example_construction(int n);

long long binomial(int n, int r);

struct ConstructionTarget {
  std::string poset;  // catalog key
  Mode mode;
};

struct ConstructionRecord {
  std::string name;
  std::map<std::string, int> params;
  long long expected_size = 0;
  std::vector<ConstructionTarget> targets;
  Family family;
  bool verified = false;
};

/// Builds a construction by CLI name (chains, antichain, N, butterfly,
/// diamond-interior, weaksat, q-example), checks the closed-form size, and
/// unless `verify` is false runs is_saturated for every declared target.
/// A size mismatch throws Internal; a failed check leaves verified == false.
ConstructionRecord build_construction(std::string_view name, int n, std::optional<int> k,
                                      std::optional<int> ell,
                                      std::optional<std::string> target, bool verify);

}  // namespace posat
