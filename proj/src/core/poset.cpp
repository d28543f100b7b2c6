#include "posat/poset.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "posat/error.hpp"

namespace posat {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::Cycle: return "cycle";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::InstanceTooLarge: return "instance-too-large";
    case ErrorCode::NotFree: return "not-free";
    case ErrorCode::DegenerateBiclique: return "degenerate-biclique";
    case ErrorCode::Separated: return "separated";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

namespace {

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Poset::Poset(int m, std::vector<bool> leq, std::vector<std::string> labels)
    : m_(m), leq_(std::move(leq)), labels_(std::move(labels)) {
  if (m_ < 1) throw Error(ErrorCode::InvalidArgument, "poset must have at least one element");
  if (leq_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_))
    throw Error(ErrorCode::InvalidArgument, "relation matrix has the wrong size");
  if (labels_.empty()) labels_ = default_labels(m_);
  if (labels_.size() != static_cast<std::size_t>(m_))
    throw Error(ErrorCode::InvalidArgument, "label count does not match element count");

  for (int i = 0; i < m_; ++i) {
    if (!this->leq(i, i)) throw Error(ErrorCode::InvalidArgument, "relation is not reflexive at " + std::to_string(i));
    for (int j = 0; j < m_; ++j) {
      if (i != j && this->leq(i, j) && this->leq(j, i))
        throw Error(ErrorCode::InvalidArgument,
                    "relation is not antisymmetric on " + std::to_string(i) + "," + std::to_string(j));
      if (!this->leq(i, j)) continue;
      for (int k = 0; k < m_; ++k)
        if (this->leq(j, k) && !this->leq(i, k))
          throw Error(ErrorCode::InvalidArgument, "relation is not transitive on " + std::to_string(i) +
                                                      "," + std::to_string(j) + "," + std::to_string(k));
    }
  }

  std::vector<bool> placed(static_cast<std::size_t>(m_), false);
  while (static_cast<int>(order_.size()) < m_) {
    for (int v = 0; v < m_; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      bool ready = true;
      for (int u = 0; u < m_ && ready; ++u)
        if (less(u, v) && !placed[static_cast<std::size_t>(u)]) ready = false;
      if (ready) {
        placed[static_cast<std::size_t>(v)] = true;
        order_.push_back(v);
        break;
      }
    }
  }
}

Poset poset_from_covers(int m, const CoverList& covers, std::vector<std::string> labels) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "poset must have at least one element");
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(m));
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || lo >= m || hi < 0 || hi >= m)
      throw Error(ErrorCode::OutOfRange, "cover pair (" + std::to_string(lo) + "," + std::to_string(hi) +
                                             ") out of range for " + std::to_string(m) + " elements");
    succ[static_cast<std::size_t>(lo)].push_back(hi);
  }

  const auto um = static_cast<std::size_t>(m);
  // Depth-first search with colours; a back edge closes a cycle.
  std::vector<int> colour(static_cast<std::size_t>(m), 0);
  std::vector<int> stack;
  std::function<void(int)> visit = [&](int v) {
    colour[static_cast<std::size_t>(v)] = 1;
    stack.push_back(v);
    for (int w : succ[static_cast<std::size_t>(v)]) {
      if (colour[static_cast<std::size_t>(w)] == 1) {
        std::ostringstream msg;
        msg << "cover relation has a cycle:";
        const auto name = [&](int x) {
          return labels.size() == um ? labels[static_cast<std::size_t>(x)] : std::to_string(x);
        };
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it) msg << ' ' << name(*it);
        msg << ' ' << name(w);
        throw Error(ErrorCode::Cycle, msg.str());
      }
      if (colour[static_cast<std::size_t>(w)] == 0) visit(w);
    }
    stack.pop_back();
    colour[static_cast<std::size_t>(v)] = 2;
  };
  for (int v = 0; v < m; ++v)
    if (colour[static_cast<std::size_t>(v)] == 0) visit(v);

  std::vector<bool> leq(um * um, false);
  for (std::size_t i = 0; i < um; ++i) leq[i * um + i] = true;
  for (const auto& [lo, hi] : covers) leq[static_cast<std::size_t>(lo) * um + static_cast<std::size_t>(hi)] = true;
  for (std::size_t k = 0; k < um; ++k)
    for (std::size_t i = 0; i < um; ++i)
      if (leq[i * um + k])
        for (std::size_t j = 0; j < um; ++j)
          if (leq[k * um + j]) leq[i * um + j] = true;
  return Poset(m, std::move(leq), std::move(labels));
}

CoverList covers_of(const Poset& p) {
  CoverList out;
  const int m = p.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!p.less(i, j)) continue;
      bool direct = true;
      for (int z = 0; z < m && direct; ++z)
        if (z != i && z != j && p.less(i, z) && p.less(z, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

Poset dual_poset(const Poset& p) {
  const int m = p.size();
  const auto um = static_cast<std::size_t>(m);
  std::vector<bool> leq(um * um);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[static_cast<std::size_t>(i) * um + static_cast<std::size_t>(j)] = p.leq(j, i);
  return Poset(m, std::move(leq), p.labels());
}

namespace {

struct CatalogName {
  std::string base;
  std::optional<int> k;
};

CatalogName split_name(std::string_view name, std::optional<int> k) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  CatalogName out{lower, k};
  const auto dash = lower.rfind('-');
  if (dash != std::string::npos && dash + 1 < lower.size()) {
    const std::string suffix = lower.substr(dash + 1);
    if (std::all_of(suffix.begin(), suffix.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
      out.base = lower.substr(0, dash);
      if (!k) {
        if (suffix.size() > 6) throw Error(ErrorCode::InvalidArgument, "invalid k: " + suffix);
        out.k = std::stoi(suffix);
      }
    }
  }
  return out;
}

bool takes_arity(const std::string& base) {
  return base == "chain" || base == "antichain" || base == "v" || base == "lambda" || base == "diamond";
}

int require_k(const CatalogName& c) {
  if (!c.k) throw Error(ErrorCode::InvalidArgument, "catalog poset '" + c.base + "' needs an arity k");
  if (*c.k < 1 || *c.k > 64) throw Error(ErrorCode::InvalidArgument, "invalid k: " + std::to_string(*c.k));
  return *c.k;
}

std::vector<std::string> numbered(const std::string& prefix, int count, int first = 0) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

}  // namespace

std::string catalog_key(std::string_view name, std::optional<int> k) {
  const CatalogName c = split_name(name, k);
  if (c.base == "chain") return "chain-" + std::to_string(require_k(c));
  if (c.base == "antichain") return "antichain-" + std::to_string(require_k(c));
  if (c.base == "v") return "V-" + std::to_string(require_k(c));
  if (c.base == "lambda") return "Lambda-" + std::to_string(require_k(c));
  if (c.base == "diamond") return "diamond-" + std::to_string(require_k(c));
  if (c.k) throw Error(ErrorCode::InvalidArgument, "catalog poset '" + std::string(name) + "' takes no arity");
  if (c.base == "n") return "N";
  if (c.base == "butterfly") return "butterfly";
  if (c.base == "q") return "Q";
  throw Error(ErrorCode::InvalidArgument, "unknown catalog poset '" + std::string(name) + "'");
}

Poset named_poset(std::string_view name, std::optional<int> k) {
  const CatalogName c = split_name(name, k);
  if (!takes_arity(c.base) && c.k)
    throw Error(ErrorCode::InvalidArgument, "catalog poset '" + std::string(name) + "' takes no arity");

  if (c.base == "chain") {
    const int kk = require_k(c);
    CoverList covers;
    for (int i = 0; i + 1 < kk; ++i) covers.emplace_back(i, i + 1);
    return poset_from_covers(kk, covers, numbered("c", kk));
  }
  if (c.base == "antichain") {
    const int kk = require_k(c);
    return poset_from_covers(kk, {}, numbered("a", kk));
  }
  if (c.base == "v") {
    const int kk = require_k(c);
    CoverList covers;
    for (int i = 1; i <= kk; ++i) covers.emplace_back(0, i);
    auto labels = numbered("t", kk, 1);
    labels.insert(labels.begin(), "bottom");
    return poset_from_covers(kk + 1, covers, labels);
  }
  if (c.base == "lambda") {
    const int kk = require_k(c);
    CoverList covers;
    for (int i = 0; i < kk; ++i) covers.emplace_back(i, kk);
    auto labels = numbered("b", kk, 1);
    labels.push_back("top");
    return poset_from_covers(kk + 1, covers, labels);
  }
  if (c.base == "diamond") {
    const int kk = require_k(c);
    CoverList covers;
    for (int i = 1; i <= kk; ++i) {
      covers.emplace_back(0, i);
      covers.emplace_back(i, kk + 1);
    }
    auto labels = numbered("m", kk, 1);
    labels.insert(labels.begin(), "bottom");
    labels.push_back("top");
    return poset_from_covers(kk + 2, covers, labels);
  }
  if (c.base == "n") {
    // A=0, C=1, B=2, D=3
    return poset_from_covers(4, {{0, 2}, {1, 2}, {1, 3}}, {"A", "C", "B", "D"});
  }
  if (c.base == "butterfly") {
    return poset_from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {"A", "C", "B", "D"});
  }
  if (c.base == "q") {
    return poset_from_covers(3, {{0, 2}}, {"a", "b", "c"});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown catalog poset '" + std::string(name) + "'");
}

std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q) {
  constexpr int kCap = 10;
  if (p.size() > kCap || q.size() > kCap)
    throw Error(ErrorCode::InstanceTooLarge, "isomorphism test is capped at " + std::to_string(kCap) + " elements");
  if (p.size() != q.size()) return std::nullopt;
  const int m = p.size();

  auto signature = [](const Poset& x, int i) {
    int below = 0, above = 0;
    for (int j = 0; j < x.size(); ++j) {
      if (x.less(j, i)) ++below;
      if (x.less(i, j)) ++above;
    }
    return std::pair{below, above};
  };
  std::vector<std::pair<int, int>> sp, sq;
  for (int i = 0; i < m; ++i) {
    sp.push_back(signature(p, i));
    sq.push_back(signature(q, i));
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<int> perm(static_cast<std::size_t>(m), -1);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == m) return true;
    for (int c = 0; c < m; ++c) {
      if (used[static_cast<std::size_t>(c)] || sq[static_cast<std::size_t>(c)] != sp[static_cast<std::size_t>(i)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int cj = perm[static_cast<std::size_t>(j)];
        ok = p.leq(i, j) == q.leq(c, cj) && p.leq(j, i) == q.leq(cj, c);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(i)] = c;
      used[static_cast<std::size_t>(c)] = true;
      if (extend(i + 1)) return true;
      used[static_cast<std::size_t>(c)] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

UctpReport check_uctp(const Poset& p) {
  const int m = p.size();
  std::vector<std::vector<int>> up(static_cast<std::size_t>(m)), down(static_cast<std::size_t>(m));
  for (const auto& [lo, hi] : covers_of(p)) {
    up[static_cast<std::size_t>(lo)].push_back(hi);
    down[static_cast<std::size_t>(hi)].push_back(lo);
  }
  UctpReport report;
  for (int s = 0; s < m; ++s) {
    const auto& ups = up[static_cast<std::size_t>(s)];
    if (ups.size() != 1) continue;
    const auto& twins = down[static_cast<std::size_t>(ups.front())];
    if (twins.size() < 2) {
      report.holds = false;
      report.violating = s;
      break;
    }
  }
  report.in_class = report.holds && m >= 2;
  return report;
}

}  // namespace posat
