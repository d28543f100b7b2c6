#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"

namespace posat {

/// Simple undirected graph on vertices 1..n. Vertex v's neighbours are stored
/// in adj[v-1] using the same bit layout as Mask.
struct Graph {
  int n = 0;
  std::vector<Mask> adj;

  explicit Graph(int vertices = 0);
  static Graph complete(int vertices);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order, 1-based.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Complete bipartite graph left x right; both sides nonempty and disjoint.
struct Biclique {
  Mask left = 0;
  Mask right = 0;

  friend bool operator==(const Biclique&, const Biclique&) = default;
};

struct BicliqueCover {
  int value = 0;
  std::vector<Biclique> bicliques;
};

Graph separability_graph(const Family& f);

/// Throws DegenerateBiclique for the empty set and [n].
Biclique biclique_of_set(Mask s, int n);

/// Exact biclique cover number by iterative deepening over maximal bicliques.
/// Capped at 10 vertices.
BicliqueCover bc_exact(const Graph& g);

/// True when every edge of g is covered by some biclique of the cover and
/// every biclique is a subgraph of g.
bool is_biclique_cover(const Graph& g, const std::vector<Biclique>& cover);

/// Empty when f separates every pair; otherwise the least unseparated pair.
std::optional<std::pair<int, int>> separates_all_pairs(const Family& f);

struct ChainDecomposition {
  std::vector<std::vector<Mask>> chains;
  int width() const noexcept { return static_cast<int>(chains.size()); }
};

/// Minimum chain partition via maximum matching on strict containment.
ChainDecomposition dilworth_chain_cover(const Family& f);

/// bc of the separability graph; never exceeds |f|.
int family_size_lower_bound(const Family& f);

int ceil_log2(int n) noexcept;

/// ceil(log2 n) for targets in the UCTP class, else 1.
int uctp_lower_bound(const Poset& p, int n);

enum class PairProfile { AllAvoid, AllContain, Mixed };

const char* to_string(PairProfile profile) noexcept;

/// For a pair no member separates: whether members avoid it, contain it, or
/// both. Throws Separated if some member separates x and y.
PairProfile lemma_pair_profile(const Family& f, int x, int y);

}  // namespace posat
