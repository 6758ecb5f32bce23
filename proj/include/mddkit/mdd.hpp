#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mddkit/monomial.hpp"

namespace mddkit {

/// Dense index into a DiagramStore arena. Two ids are equal exactly when the
/// diagrams below them are structurally equal, so node equality is one
/// integer comparison.
using NodeId = std::uint32_t;

inline constexpr NodeId kLeafNode = 0;

struct Edge {
  std::uint64_t label;
  NodeId to;
  bool operator==(const Edge&) const = default;
};

/// Remove every edge that points to the same node as the previous edge,
/// keeping the smallest label of each run. Non-adjacent repeats are kept:
/// in diagrams produced by insertion the subtree ideals along a node form an
/// inclusion chain, so equal subtrees are always adjacent.
std::vector<Edge> dedup(std::vector<Edge> edges);

struct DiagramMetrics {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  std::uint64_t width = 0;             // max reachable nodes at one depth
  std::uint64_t branching_degree = 0;  // max outdegree
  std::uint64_t seq_words = 0;         // nodes + 2*edges
  std::uint64_t tree_nodes = 0;        // node count of the unshared tree
};

/// Arena of hash-consed diagram nodes. The distinguished leaf is pre-created
/// at id 0; every other node is interned through make_node, which returns an
/// existing id whenever the edge list is already known. The arena is
/// append-only; compact_into rebuilds a fresh store from live roots.
///
/// Concurrency: single writer. make_node/insert/singleton need exclusive
/// access; all const members may run concurrently with each other.
class DiagramStore {
public:
  explicit DiagramStore(std::size_t dim);

  DiagramStore(const DiagramStore&) = delete;
  DiagramStore& operator=(const DiagramStore&) = delete;

  std::size_t dim() const { return dim_; }
  NodeId leaf() const { return kLeafNode; }
  std::size_t node_count() const { return arena_.size(); }
  const std::vector<Edge>& edges(NodeId id) const;
  std::uint32_t height(NodeId id) const;  // leaf = 0, full roots = dim

  /// Intern an edge list. Labels must strictly increase, targets must share
  /// one height, and adjacent targets must differ (run dedup first).
  NodeId make_node(std::span<const Edge> edges);

  /// The diagram of the principal ideal <m>: a path of dim edges to the leaf.
  NodeId singleton(const Monomial& m);

  /// Canonical diagram of ideal(root) + <m>; nullopt root means the empty
  /// ideal. Memoized so every source node is visited at most once.
  NodeId insert(std::optional<NodeId> root, const Monomial& m);

  /// Membership of m in ideal(root); empty roots contain nothing. At each
  /// level the edge with the largest label not exceeding the coordinate is
  /// chosen by binary search (linear scan below 8 edges). probe_depth, when
  /// given, receives the number of levels visited.
  bool contains(std::optional<NodeId> root, const Monomial& m,
                std::uint32_t* probe_depth = nullptr) const;

  DiagramMetrics metrics(NodeId root) const;

  /// Sequential-form footprint of the unshared tree (1 + 2r words per node).
  std::uint64_t tree_seq_words(NodeId root) const;

  /// All label paths root -> leaf: the Janet-like generating set.
  std::vector<Monomial> enumerate_basis(NodeId root) const;

  /// The unique minimal generating set: basis elements not strictly
  /// divisible by another basis element.
  std::vector<Monomial> minimal_generators(NodeId root) const;

  /// Deterministic DOT rendering of the sub-DAG under root.
  std::string to_dot(NodeId root) const;

  /// Sequential form: one line per reachable node, children before parents,
  /// holding "r a1 p1 ... ar pr" where p_i is the line index of the target.
  void dump_sequential(NodeId root, std::ostream& os) const;

  /// Audit helper: scans the arena for duplicate edge lists without going
  /// through the interning table. True means maximal sharing holds.
  bool verify_maximal_sharing() const;

private:
  struct NodeRecord {
    std::vector<Edge> edge_list;
    std::uint32_t height;
  };

  struct UniverseHash {
    using is_transparent = void;
    const std::vector<NodeRecord>* arena;
    std::size_t operator()(NodeId id) const;
    std::size_t operator()(std::span<const Edge> edges) const;
  };
  struct UniverseEq {
    using is_transparent = void;
    const std::vector<NodeRecord>* arena;
    bool operator()(NodeId a, NodeId b) const;
    bool operator()(std::span<const Edge> edges, NodeId b) const;
    bool operator()(NodeId a, std::span<const Edge> edges) const;
  };

  NodeId singleton_suffix(const Monomial& m, std::size_t i);
  NodeId insert_aux(NodeId t, const Monomial& m, std::size_t i,
                    std::unordered_map<NodeId, NodeId>& memo);
  std::vector<NodeId> reachable(NodeId root) const;  // sorted by (height, id)

  std::size_t dim_;
  std::vector<NodeRecord> arena_;
  std::unordered_set<NodeId, UniverseHash, UniverseEq> universe_;
};

/// Value-like view of one ideal inside a store: the root id, or nullopt for
/// the empty ideal. Handles may be copied freely and shared across threads
/// together with a read-only store.
struct DiagramHandle {
  DiagramStore* store = nullptr;
  std::optional<NodeId> root;

  bool empty() const { return !root.has_value(); }
  bool contains(const Monomial& m) const { return store->contains(root, m); }
  void insert(const Monomial& m) { root = store->insert(root, m); }
  DiagramMetrics metrics() const { return store->metrics(*root); }
};

/// Fold insert over a generator list.
DiagramHandle build_diagram(DiagramStore& store, const GeneratorList& gens);

/// Rebuild the live part of src into dst (a fresh store of the same
/// dimension); returns the roots remapped to dst ids.
std::vector<NodeId> compact_into(const DiagramStore& src, std::span<const NodeId> roots,
                                 DiagramStore& dst);

}  // namespace mddkit
