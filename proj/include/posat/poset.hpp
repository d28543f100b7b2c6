#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posat {

/// (lower, upper): `upper` covers `lower`.
using CoverPair = std::pair<int, int>;
using CoverList = std::vector<CoverPair>;

/// A finite partial order on elements 0..m-1, validated at construction and
/// immutable afterwards.
class Poset {
 public:
  /// Builds from a full relation matrix (row-major, leq[i*m+j] means i <= j).
  /// Throws Error if the matrix is not reflexive, antisymmetric and transitive.
  Poset(int m, std::vector<bool> leq, std::vector<std::string> labels = {});

  int size() const noexcept { return m_; }
  bool leq(int i, int j) const noexcept { return leq_[static_cast<std::size_t>(i * m_ + j)]; }
  bool less(int i, int j) const noexcept { return i != j && leq(i, j); }
  bool comparable(int i, int j) const noexcept { return leq(i, j) || leq(j, i); }
  bool incomparable(int i, int j) const noexcept { return !comparable(i, j); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

  /// A linear extension: every element appears after all elements below it.
  /// Ties are broken by element index.
  const std::vector<int>& linear_extension() const noexcept { return order_; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.m_ == b.m_ && a.leq_ == b.leq_;
  }

 private:
  int m_;
  std::vector<bool> leq_;
  std::vector<std::string> labels_;
  std::vector<int> order_;
};

/// Reflexive-transitive closure of a Hasse diagram. Rejects out-of-range
/// indices and cycles (the error message names the cycle).
Poset poset_from_covers(int m, const CoverList& covers,
                        std::vector<std::string> labels = {});

/// Catalog lookup. `name` is case-insensitive and may carry a "-k" suffix
/// ("diamond-2", "V-3"); an explicit `k` overrides the suffix.
///
///   chain-k      0 < 1 < ... < k-1
///   antichain-k  k pairwise incomparable elements
///   V-k          one minimum (0) below k incomparable maxima (1..k)
///   Lambda-k     k incomparable minima (0..k-1) below one maximum (k)
///   diamond-k    minimum 0, k incomparable middles 1..k, maximum k+1
///   N            A, C, B, D with A<B, C<B, C<D
///   butterfly    A, C, B, D with A,C each below both B and D
///   Q            a, b, c with a<c and b incomparable to both
Poset named_poset(std::string_view name, std::optional<int> k = std::nullopt);

/// Canonical spelling of a catalog name ("diamond-2", "N", ...), for reports.
std::string catalog_key(std::string_view name, std::optional<int> k = std::nullopt);

CoverList covers_of(const Poset& p);
Poset dual_poset(const Poset& p);

/// Returns perm with perm[i] = image of p's element i in q, such that
/// i <= j in p iff perm[i] <= perm[j] in q. Capped at 10 elements.
std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q);

struct UctpReport {
  bool holds = true;
  std::optional<int> violating;  // element with exactly one cover and no twin
  bool in_class = false;         // holds && size >= 2
};

UctpReport check_uctp(const Poset& p);

}  // namespace posat
