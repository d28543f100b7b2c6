#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "posat/poset.hpp"

namespace posat {

/// Characteristic vector of a subset of [n]; element i lives in bit i-1.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 30;

inline constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool subset_of(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

/// Canonical set order: by size, then lexicographically on the increasing
/// element lists (so {1,4} precedes {2,3}).
inline bool canonical_less(Mask a, Mask b) noexcept {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const Mask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

Mask mask_of(std::initializer_list<int> elements);
Mask mask_of(std::span<const int> elements);
std::vector<int> elements_of(Mask m);

/// A set of subsets of [n], kept sorted in canonical order without duplicates.
class Family {
 public:
  Family() = default;
  /// Throws if n is outside 0..kMaxGround or a mask has bits above n.
  Family(int n, std::vector<Mask> masks);

  int ground() const noexcept { return n_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  const std::vector<Mask>& sets() const noexcept { return sets_; }
  Mask operator[](std::size_t i) const { return sets_[i]; }
  bool contains(Mask m) const;

  Family with(Mask m) const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> sets_;
};

/// Lexicographic comparison of canonical set lists, the tie-break used for
/// reproducible certificates.
bool family_less(const Family& a, const Family& b);

Family family_from_sets(int n, const std::vector<std::vector<int>>& sets);
Family full_lattice(int n);
Family complement_family(const Family& f);
Poset induced_poset_of(const Family& f);

enum class Mode { Weak, Induced };

const char* to_string(Mode mode) noexcept;

/// images[i] is the set that target element i maps to.
struct Embedding {
  Mode mode = Mode::Weak;
  std::vector<Mask> images;
};

/// Backtracking copy search. Target elements are placed in the poset's linear
/// extension order and candidates tried in the pool's order, so the result is
/// deterministic. With `anchor` set, only copies that use pool[*anchor] are
/// reported.
std::optional<Embedding> find_copy(std::span<const Mask> pool, const Poset& p, Mode mode,
                                   std::optional<std::size_t> anchor = std::nullopt);

std::optional<Embedding> find_weak_copy(const Family& f, const Poset& p);
std::optional<Embedding> find_induced_copy(const Family& f, const Poset& p);

/// True iff `e` is an injective weak (or induced, per e.mode) copy of p.
bool is_valid_embedding(const Embedding& e, const Poset& p);

}  // namespace posat
