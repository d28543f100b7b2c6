#include "posat/family.hpp"

#include <algorithm>

#include "posat/error.hpp"

namespace posat {

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround) throw Error(ErrorCode::OutOfRange, "set element " + std::to_string(e) + " out of range");
    m |= Mask{1} << (e - 1);
  }
  return m;
}

Mask mask_of(std::initializer_list<int> elements) {
  return mask_of(std::span<const int>(elements.begin(), elements.size()));
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Family::Family(int n, std::vector<Mask> masks) : n_(n), sets_(std::move(masks)) {
  if (n_ < 0 || n_ > kMaxGround)
    throw Error(ErrorCode::OutOfRange, "ground set size " + std::to_string(n_) + " outside 0.." + std::to_string(kMaxGround));
  const Mask full = full_mask(n_);
  for (Mask m : sets_)
    if ((m & ~full) != 0)
      throw Error(ErrorCode::OutOfRange, "set uses elements beyond n = " + std::to_string(n_));
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool Family::contains(Mask m) const {
  return std::binary_search(sets_.begin(), sets_.end(), m, canonical_less);
}

Family Family::with(Mask m) const {
  auto masks = sets_;
  masks.push_back(m);
  return Family(n_, std::move(masks));
}

bool family_less(const Family& a, const Family& b) {
  return std::lexicographical_compare(a.sets().begin(), a.sets().end(), b.sets().begin(), b.sets().end(),
                                      canonical_less);
}

Family family_from_sets(int n, const std::vector<std::vector<int>>& sets) {
  if (n < 1 || n > kMaxGround)
    throw Error(ErrorCode::OutOfRange, "ground set size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGround));
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    for (int e : s)
      if (e < 1 || e > n)
        throw Error(ErrorCode::OutOfRange, "set element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    masks.push_back(mask_of(std::span<const int>(s)));
  }
  return Family(n, std::move(masks));
}

Family full_lattice(int n) {
  if (n < 0 || n > 20) throw Error(ErrorCode::InstanceTooLarge, "full lattice is capped at n = 20");
  std::vector<Mask> masks(std::size_t{1} << n);
  for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = static_cast<Mask>(i);
  return Family(n, std::move(masks));
}

Family complement_family(const Family& f) {
  const Mask full = full_mask(f.ground());
  std::vector<Mask> masks;
  masks.reserve(f.size());
  for (Mask m : f.sets()) masks.push_back(full & ~m);
  return Family(f.ground(), std::move(masks));
}

Poset induced_poset_of(const Family& f) {
  const std::size_t m = f.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "the empty family induces no poset");
  std::vector<bool> leq(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    std::string label = "{";
    for (int e : elements_of(f[i])) label += (label.size() > 1 ? "," : "") + std::to_string(e);
    labels.push_back(label + "}");
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = subset_of(f[i], f[j]);
  }
  return Poset(static_cast<int>(m), std::move(leq), std::move(labels));
}

const char* to_string(Mode mode) noexcept { return mode == Mode::Weak ? "weak" : "induced"; }

namespace {

class CopyFinder {
 public:
  CopyFinder(std::span<const Mask> pool, const Poset& p, Mode mode)
      : pool_(pool), p_(p), mode_(mode), chosen_(p.size(), -1), used_(pool.size(), false) {}

  std::optional<Embedding> run(std::optional<std::size_t> anchor) {
    if (static_cast<std::size_t>(p_.size()) > pool_.size()) return std::nullopt;
    const auto& order = p_.linear_extension();
    if (!anchor) {
      if (extend(order, 0)) return result();
      return std::nullopt;
    }
    const int a = static_cast<int>(*anchor);
    used_[*anchor] = true;
    for (int t : order) {
      chosen_[t] = a;
      if (extend(order, 0)) return result();
      chosen_[t] = -1;
    }
    return std::nullopt;
  }

 private:
  bool compatible(int v, Mask mv) const {
    for (int u = 0; u < p_.size(); ++u) {
      const int cu = chosen_[u];
      if (cu < 0 || u == v) continue;
      const Mask mu = pool_[cu];
      const bool uv = subset_of(mu, mv);
      const bool vu = subset_of(mv, mu);
      if (p_.leq(u, v) && !uv) return false;
      if (p_.leq(v, u) && !vu) return false;
      if (mode_ == Mode::Induced && p_.incomparable(u, v) && (uv || vu)) return false;
    }
    return true;
  }

  bool extend(const std::vector<int>& order, std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    if (chosen_[v] >= 0) {
      return compatible(v, pool_[chosen_[v]]) && extend(order, depth + 1);
    }
    for (std::size_t c = 0; c < pool_.size(); ++c) {
      if (used_[c] || !compatible(v, pool_[c])) continue;
      chosen_[v] = static_cast<int>(c);
      used_[c] = true;
      if (extend(order, depth + 1)) return true;
      used_[c] = false;
      chosen_[v] = -1;
    }
    return false;
  }

  Embedding result() const {
    Embedding e{mode_, {}};
    for (int c : chosen_) e.images.push_back(pool_[c]);
    return e;
  }

  std::span<const Mask> pool_;
  const Poset& p_;
  Mode mode_;
  std::vector<int> chosen_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Embedding> find_copy(std::span<const Mask> pool, const Poset& p, Mode mode,
                                   std::optional<std::size_t> anchor) {
  if (anchor && *anchor >= pool.size()) throw Error(ErrorCode::OutOfRange, "anchor index out of range");
  return CopyFinder(pool, p, mode).run(anchor);
}

std::optional<Embedding> find_weak_copy(const Family& f, const Poset& p) {
  return find_copy(f.sets(), p, Mode::Weak);
}

std::optional<Embedding> find_induced_copy(const Family& f, const Poset& p) {
  return find_copy(f.sets(), p, Mode::Induced);
}

bool is_valid_embedding(const Embedding& e, const Poset& p) {
  const int m = p.size();
  if (e.images.size() != static_cast<std::size_t>(m)) return false;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (u == v) continue;
      if (e.images[u] == e.images[v]) return false;
      const bool sub = subset_of(e.images[u], e.images[v]);
      if (p.leq(u, v) && !sub) return false;
      if (e.mode == Mode::Induced && !p.leq(u, v) && sub) return false;
    }
  return true;
}

}  // namespace posat
