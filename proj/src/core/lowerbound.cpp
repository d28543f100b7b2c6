#include "posat/lowerbound.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "posat/error.hpp"

namespace posat {

Graph::Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(std::max(vertices, 0)), 0) {
  if (vertices < 0 || vertices > kMaxGround)
    throw Error(ErrorCode::OutOfRange, "vertex count " + std::to_string(vertices) + " out of range");
}

Graph Graph::complete(int vertices) {
  Graph g(vertices);
  for (int u = 1; u <= vertices; ++u)
    for (int v = u + 1; v <= vertices; ++v) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n || v < 1 || v > n)
    throw Error(ErrorCode::OutOfRange, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::InvalidArgument, "loops are not allowed");
  adj[u - 1] |= Mask{1} << (v - 1);
  adj[v - 1] |= Mask{1} << (u - 1);
}

bool Graph::has_edge(int u, int v) const {
  return u >= 1 && u <= n && v >= 1 && v <= n && ((adj[u - 1] >> (v - 1)) & 1U) != 0;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask m : adj) twice += std::popcount(m);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph separability_graph(const Family& f) {
  const int n = f.ground();
  Graph g(n);
  const Mask full = full_mask(n);
  for (Mask s : f.sets()) {
    const Mask rest = full & ~s;
    for (int v : elements_of(s)) g.adj[v - 1] |= rest;
    for (int v : elements_of(rest)) g.adj[v - 1] |= s;
  }
  return g;
}

Biclique biclique_of_set(Mask s, int n) {
  const Mask full = full_mask(n);
  if ((s & ~full) != 0) throw Error(ErrorCode::OutOfRange, "set uses elements beyond n");
  if (s == 0 || s == full)
    throw Error(ErrorCode::DegenerateBiclique, "the empty set and [n] separate no pair");
  return Biclique{s, full & ~s};
}

bool is_biclique_cover(const Graph& g, const std::vector<Biclique>& cover) {
  Graph covered(g.n);
  for (const auto& b : cover) {
    if (b.left == 0 || b.right == 0 || (b.left & b.right) != 0) return false;
    for (int l : elements_of(b.left))
      for (int r : elements_of(b.right)) {
        if (!g.has_edge(l, r)) return false;
        covered.add_edge(l, r);
      }
  }
  return covered == g;
}

int ceil_log2(int n) noexcept {
  int bits = 0;
  while ((1LL << bits) < n) ++bits;
  return bits;
}

namespace {

// Exact biclique cover search on graphs with at most 10 vertices (45 edges),
// so an uncovered edge set fits in one 64-bit word.
class BicliqueSolver {
 public:
  explicit BicliqueSolver(const Graph& g) : g_(g) {
    for (int u = 1; u <= g.n; ++u)
      for (int v = u + 1; v <= g.n; ++v)
        if (g.has_edge(u, v)) {
          edge_id_[(u - 1) * 32 + (v - 1)] = static_cast<int>(edges_.size());
          edges_.emplace_back(u, v);
        }
    candidates_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) candidates_[e] = maximal_bicliques(edges_[e]);
  }

  BicliqueCover solve() {
    BicliqueCover out;
    if (edges_.empty()) return out;
    const std::uint64_t all = edges_.size() == 64 ? ~0ULL : (1ULL << edges_.size()) - 1;
    for (int budget = std::max(1, clique_bound(all));; ++budget) {
      chosen_.clear();
      if (search(all, budget)) {
        out.value = budget;
        out.bicliques = chosen_;
        return out;
      }
    }
  }

 private:
  struct Candidate {
    Biclique b;
    std::uint64_t edges;
  };

  int id(int u, int v) const { return edge_id_.at((std::min(u, v) - 1) * 32 + (std::max(u, v) - 1)); }

  std::uint64_t edge_mask(Mask left, Mask right) const {
    std::uint64_t out = 0;
    for (int l : elements_of(left))
      for (int r : elements_of(right)) out |= 1ULL << id(l, r);
    return out;
  }

  // Maximal complete bipartite subgraphs containing edge (u, v), with u on
  // the left. Every left side is a subset of N(v) containing u; it is kept
  // when closing it through its common neighbourhood returns it unchanged.
  std::vector<Candidate> maximal_bicliques(std::pair<int, int> edge) const {
    const auto [u, v] = edge;
    const Mask ubit = Mask{1} << (u - 1);
    const Mask pool = g_.adj[v - 1] & ~ubit;
    std::vector<Candidate> out;
    Mask sub = 0;
    do {
      const Mask left = sub | ubit;
      Mask right = full_mask(g_.n);
      for (int l : elements_of(left)) right &= g_.adj[l - 1];
      Mask closure = full_mask(g_.n);
      for (int r : elements_of(right)) closure &= g_.adj[r - 1];
      if (closure == left) {
        Biclique b = (left & (~left + 1)) < (right & (~right + 1)) ? Biclique{left, right} : Biclique{right, left};
        out.push_back({b, edge_mask(left, right)});
      }
      sub = (sub - pool) & pool;
    } while (sub != 0);
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
      return std::popcount(a.edges) > std::popcount(b.edges) ||
             (std::popcount(a.edges) == std::popcount(b.edges) &&
              std::pair{a.b.left, a.b.right} < std::pair{b.b.left, b.b.right});
    });
    return out;
  }

  // A clique whose edges are all uncovered needs ceil(log2 size) more
  // bicliques. Greedy clique, lowest vertex first.
  int clique_bound(std::uint64_t uncovered) const {
    std::vector<Mask> adj(static_cast<std::size_t>(g_.n), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if ((uncovered >> e) & 1ULL) {
        const auto [u, v] = edges_[e];
        adj[u - 1] |= Mask{1} << (v - 1);
        adj[v - 1] |= Mask{1} << (u - 1);
      }
    int best = 0;
    for (int start = 1; start <= g_.n; ++start) {
      Mask clique = Mask{1} << (start - 1);
      Mask cand = adj[start - 1];
      while (cand != 0) {
        int pick = -1, pick_deg = -1;
        for (int w : elements_of(cand)) {
          const int deg = std::popcount(adj[w - 1] & cand);
          if (deg > pick_deg) {
            pick = w;
            pick_deg = deg;
          }
        }
        clique |= Mask{1} << (pick - 1);
        cand &= adj[pick - 1];
      }
      best = std::max(best, std::popcount(clique));
    }
    return best >= 2 ? ceil_log2(best) : 0;
  }

  bool search(std::uint64_t uncovered, int budget) {
    if (uncovered == 0) return true;
    if (budget == 0) return false;
    if (clique_bound(uncovered) > budget) return false;
    if (auto it = failed_.find(uncovered); it != failed_.end() && it->second >= budget) return false;
    const int e = std::countr_zero(uncovered);
    for (const auto& c : candidates_[static_cast<std::size_t>(e)]) {
      chosen_.push_back(c.b);
      if (search(uncovered & ~c.edges, budget - 1)) return true;
      chosen_.pop_back();
    }
    auto& slot = failed_[uncovered];
    slot = std::max(slot, budget);
    return false;
  }

  const Graph& g_;
  std::vector<std::pair<int, int>> edges_;
  std::unordered_map<int, int> edge_id_;
  std::vector<std::vector<Candidate>> candidates_;
  std::unordered_map<std::uint64_t, int> failed_;
  std::vector<Biclique> chosen_;
};

}  // namespace

BicliqueCover bc_exact(const Graph& g) {
  constexpr int kCap = 10;
  if (g.n > kCap)
    throw Error(ErrorCode::InstanceTooLarge, "exact biclique cover is capped at " + std::to_string(kCap) + " vertices");
  return BicliqueSolver(g).solve();
}

std::optional<std::pair<int, int>> separates_all_pairs(const Family& f) {
  const Graph g = separability_graph(f);
  for (int x = 1; x <= g.n; ++x)
    for (int y = x + 1; y <= g.n; ++y)
      if (!g.has_edge(x, y)) return std::pair{x, y};
  return std::nullopt;
}

ChainDecomposition dilworth_chain_cover(const Family& f) {
  constexpr std::size_t kCap = 4096;
  if (f.size() > kCap)
    throw Error(ErrorCode::InstanceTooLarge, "chain decomposition is capped at " + std::to_string(kCap) + " sets");
  const auto& sets = f.sets();
  const int m = static_cast<int>(sets.size());

  // Split graph: left copy of i -> right copy of j when sets[i] is a proper
  // subset of sets[j]. A maximum matching links each set to its successor.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && subset_of(sets[i], sets[j])) adj[i].push_back(j);

  // Hopcroft-Karp.
  constexpr int kFree = -1;
  std::vector<int> match_left(static_cast<std::size_t>(m), kFree), match_right(static_cast<std::size_t>(m), kFree);
  std::vector<int> dist(static_cast<std::size_t>(m));
  auto bfs = [&] {
    std::vector<int> queue;
    bool reachable_free = false;
    for (int i = 0; i < m; ++i) {
      if (match_left[i] == kFree) {
        dist[i] = 0;
        queue.push_back(i);
      } else {
        dist[i] = -1;
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int i = queue[head];
      for (int j : adj[i]) {
        const int next = match_right[j];
        if (next == kFree) {
          reachable_free = true;
        } else if (dist[next] < 0) {
          dist[next] = dist[i] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable_free;
  };
  std::function<bool(int)> dfs = [&](int i) {
    for (int j : adj[i]) {
      const int next = match_right[j];
      if (next == kFree || (dist[next] == dist[i] + 1 && dfs(next))) {
        match_left[i] = j;
        match_right[j] = i;
        return true;
      }
    }
    dist[i] = -1;
    return false;
  };
  while (bfs())
    for (int i = 0; i < m; ++i)
      if (match_left[i] == kFree) dfs(i);

  ChainDecomposition out;
  for (int i = 0; i < m; ++i) {
    if (match_right[i] != kFree) continue;
    std::vector<Mask> chain;
    for (int v = i; v != kFree; v = match_left[v]) chain.push_back(sets[v]);
    out.chains.push_back(std::move(chain));
  }
  return out;
}

int family_size_lower_bound(const Family& f) { return bc_exact(separability_graph(f)).value; }

int uctp_lower_bound(const Poset& p, int n) {
  return check_uctp(p).in_class ? ceil_log2(n) : 1;
}

const char* to_string(PairProfile profile) noexcept {
  switch (profile) {
    case PairProfile::AllAvoid: return "all-avoid";
    case PairProfile::AllContain: return "all-contain";
    case PairProfile::Mixed: return "mixed";
  }
  return "unknown";
}

PairProfile lemma_pair_profile(const Family& f, int x, int y) {
  const int n = f.ground();
  if (x < 1 || x > n || y < 1 || y > n) throw Error(ErrorCode::OutOfRange, "pair outside [n]");
  if (x == y) throw Error(ErrorCode::InvalidArgument, "pair needs two distinct points");
  const Mask pair = (Mask{1} << (x - 1)) | (Mask{1} << (y - 1));
  bool avoid = false, contain = false;
  for (Mask s : f.sets()) {
    const Mask hit = s & pair;
    if (hit == 0) {
      avoid = true;
    } else if (hit == pair) {
      contain = true;
    } else {
      throw Error(ErrorCode::Separated, "the family separates " + std::to_string(x) + " and " + std::to_string(y));
    }
  }
  if (avoid && contain) return PairProfile::Mixed;
  return contain ? PairProfile::AllContain : PairProfile::AllAvoid;
}

}  // namespace posat
