#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eso {

using Tuple = std::vector<int>;

struct Structure {
  int universe_size = 0;
  std::vector<std::pair<std::string, int>> signature;
  std::map<std::string, std::set<Tuple>> relations;

  int arity_of(const std::string& name) const;  // -1 if absent
  bool holds(const std::string& name, const Tuple& t) const;
};

enum class GraphKind { Directed, Undirected, Basic };

const char* to_string(GraphKind k);

// Dense adjacency over a fixed index range; removed vertices keep their index
// and simply lose their active flag.
class Graph {
 public:
  Graph() = default;
  Graph(GraphKind kind, int n);

  GraphKind kind() const { return kind_; }
  int size() const { return n_; }  // index range, including inactive vertices
  bool active(int v) const { return active_[v] != 0; }
  int active_count() const;
  std::vector<int> vertices() const;  // active vertices in index order

  bool has_edge(int u, int v) const { return adj_[u * n_ + v] != 0; }
  // For undirected/basic kinds both directions are set.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void remove_vertex(int v);

  std::vector<int> neighbors(int v) const;  // active out-neighbours, excluding v itself
  int degree(int v) const;
  bool isolated(int v) const { return degree(v) == 0; }
  bool universal(int v) const { return degree(v) == active_count() - 1; }
  std::vector<std::pair<int, int>> edges() const;  // u < v for symmetric kinds

  // Recomputes kind from the adjacency (basic < undirected < directed).
  GraphKind detect_kind() const;

  bool operator==(const Graph& o) const = default;

 private:
  GraphKind kind_ = GraphKind::Basic;
  int n_ = 0;
  std::vector<char> adj_;
  std::vector<char> active_;
};

using Peeling = std::vector<std::vector<int>>;

Structure load_structure(const std::string& text);
std::string dump_graph(const Graph& g);
Structure graph_structure(const Graph& g);  // single relation "adj"; inactive vertices dropped and renumbered
Graph graph_view(const Structure& s);
Graph complement_basic(const Graph& g);

struct TwinQuotient {
  Graph graph;  // same index range; non-representatives inactive
  std::vector<int> rep;  // -1 for vertices inactive in the input
};
bool are_twins(const Graph& g, int u, int v);
TwinQuotient twin_quotient(const Graph& g);

Peeling peel_naive(const Graph& g);
Graph apply_peeling(const Graph& g, const Peeling& p);
std::optional<Peeling> peel_by_degrees(const Graph& q, int l);

// Small helpers shared by the solvers.
std::vector<std::vector<int>> components(const Graph& g);
// BFS tree from root; returns parent array (-1 for root and for vertices outside the component).
std::vector<int> bfs_tree(const Graph& g, int root);
std::vector<int> bfs_distances(const Graph& g, int root);
std::vector<std::pair<int, int>> greedy_matching(const Graph& g);
Graph induced_copy(const Graph& g);  // compacts active vertices into 0..m-1

}  // namespace eso
