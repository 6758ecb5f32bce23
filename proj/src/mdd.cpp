#include "mddkit/mdd.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mddkit {

namespace {

constexpr std::size_t kBinarySearchThreshold = 8;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a) throw std::overflow_error("count overflows 64 bits");
  return s;
}

std::size_t hash_edge_span(std::span<const Edge> edges) {
  std::size_t h = edges.size();
  auto mix = [&h](std::uint64_t v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const Edge& e : edges) {
    mix(e.label);
    mix(e.to);
  }
  return h;
}

/// Largest edge with label <= v, or nullptr.
const Edge* floor_edge(std::span<const Edge> edges, std::uint64_t v) {
  if (edges.size() < kBinarySearchThreshold) {
    for (std::size_t i = edges.size(); i-- > 0;)
      if (edges[i].label <= v) return &edges[i];
    return nullptr;
  }
  auto it = std::upper_bound(edges.begin(), edges.end(), v,
                             [](std::uint64_t x, const Edge& e) { return x < e.label; });
  if (it == edges.begin()) return nullptr;
  return &*std::prev(it);
}

}  // namespace

std::vector<Edge> dedup(std::vector<Edge> edges) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (out == 0 || edges[i].to != edges[out - 1].to) edges[out++] = edges[i];
  }
  edges.resize(out);
  return edges;
}

std::size_t DiagramStore::UniverseHash::operator()(NodeId id) const {
  return hash_edge_span((*arena)[id].edge_list);
}

std::size_t DiagramStore::UniverseHash::operator()(std::span<const Edge> edges) const {
  return hash_edge_span(edges);
}

bool DiagramStore::UniverseEq::operator()(NodeId a, NodeId b) const {
  return (*arena)[a].edge_list == (*arena)[b].edge_list;
}

bool DiagramStore::UniverseEq::operator()(std::span<const Edge> edges, NodeId b) const {
  const auto& eb = (*arena)[b].edge_list;
  return std::equal(edges.begin(), edges.end(), eb.begin(), eb.end());
}

bool DiagramStore::UniverseEq::operator()(NodeId a, std::span<const Edge> edges) const {
  return operator()(edges, a);
}

DiagramStore::DiagramStore(std::size_t dim)
    : dim_(dim), universe_(16, UniverseHash{&arena_}, UniverseEq{&arena_}) {
  if (dim == 0) throw std::invalid_argument("diagram store needs dimension >= 1");
  arena_.push_back({{}, 0});
  universe_.insert(kLeafNode);
}

const std::vector<Edge>& DiagramStore::edges(NodeId id) const {
  if (id >= arena_.size()) throw std::out_of_range("bad node id");
  return arena_[id].edge_list;
}

std::uint32_t DiagramStore::height(NodeId id) const {
  if (id >= arena_.size()) throw std::out_of_range("bad node id");
  return arena_[id].height;
}

NodeId DiagramStore::make_node(std::span<const Edge> es) {
  if (es.empty())
    throw std::invalid_argument("make_node: a branch node needs at least one edge");
  for (const Edge& e : es)
    if (e.to >= arena_.size()) throw std::invalid_argument("make_node: unknown target id");
  const std::uint32_t child_height = arena_[es[0].to].height;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i > 0 && es[i].label <= es[i - 1].label)
      throw std::invalid_argument("make_node: labels must strictly increase");
    if (i > 0 && es[i].to == es[i - 1].to)
      throw std::invalid_argument("make_node: adjacent edges share a target; dedup first");
    if (arena_[es[i].to].height != child_height)
      throw std::invalid_argument("make_node: targets at mixed depths");
  }
  if (child_height + 1 > dim_)
    throw std::invalid_argument("make_node: node would exceed the ambient dimension");

  if (auto it = universe_.find(es); it != universe_.end()) return *it;

  NodeId id = static_cast<NodeId>(arena_.size());
  arena_.push_back({std::vector<Edge>(es.begin(), es.end()), child_height + 1});
  universe_.insert(id);
  return id;
}

NodeId DiagramStore::singleton_suffix(const Monomial& m, std::size_t i) {
  NodeId node = kLeafNode;
  for (std::size_t j = dim_; j-- > i;) {
    Edge e{m[j], node};
    node = make_node(std::span<const Edge>(&e, 1));
  }
  return node;
}

NodeId DiagramStore::singleton(const Monomial& m) {
  if (m.dim() != dim_) throw std::invalid_argument("singleton: dimension mismatch");
  return singleton_suffix(m, 0);
}

NodeId DiagramStore::insert_aux(NodeId t, const Monomial& m, std::size_t i,
                                std::unordered_map<NodeId, NodeId>& memo) {
  if (i >= dim_) return t;  // t is the leaf
  if (auto it = memo.find(t); it != memo.end()) return it->second;

  // Copy: make_node below may reallocate the arena.
  const std::vector<Edge> es = arena_[t].edge_list;
  std::vector<Edge> s;
  s.reserve(es.size() + 1);

  const std::uint64_t x = m[i];
  std::optional<NodeId> below;  // quotient subtree at the insertion label
  std::size_t k = 0;
  while (k < es.size() && es[k].label < x) {
    s.push_back(es[k]);
    below = es[k].to;
    ++k;
  }
  if (k == es.size() || es[k].label > x) {
    NodeId sub = below ? insert_aux(*below, m, i + 1, memo) : singleton_suffix(m, i + 1);
    s.push_back({x, sub});
  }
  for (; k < es.size(); ++k) s.push_back({es[k].label, insert_aux(es[k].to, m, i + 1, memo)});

  NodeId out = make_node(dedup(std::move(s)));
  memo.emplace(t, out);
  return out;
}

NodeId DiagramStore::insert(std::optional<NodeId> root, const Monomial& m) {
  if (m.dim() != dim_) throw std::invalid_argument("insert: dimension mismatch");
  if (!root) return singleton(m);
  if (height(*root) != dim_) throw std::invalid_argument("insert: root is not a full diagram");
  std::unordered_map<NodeId, NodeId> memo;
  return insert_aux(*root, m, 0, memo);
}

bool DiagramStore::contains(std::optional<NodeId> root, const Monomial& m,
                            std::uint32_t* probe_depth) const {
  if (m.dim() != dim_) throw std::invalid_argument("contains: dimension mismatch");
  if (probe_depth) *probe_depth = 0;
  if (!root) return false;
  NodeId cur = *root;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (probe_depth) ++*probe_depth;
    const Edge* hit = floor_edge(arena_[cur].edge_list, m[i]);
    if (hit == nullptr) return false;
    cur = hit->to;
  }
  return true;
}

std::vector<NodeId> DiagramStore::reachable(NodeId root) const {
  if (root >= arena_.size()) throw std::out_of_range("bad node id");
  std::vector<NodeId> out;
  std::vector<NodeId> stack{root};
  std::unordered_set<NodeId> seen{root};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    out.push_back(id);
    for (const Edge& e : arena_[id].edge_list)
      if (seen.insert(e.to).second) stack.push_back(e.to);
  }
  std::sort(out.begin(), out.end(), [this](NodeId a, NodeId b) {
    if (arena_[a].height != arena_[b].height) return arena_[a].height < arena_[b].height;
    return a < b;
  });
  return out;
}

DiagramMetrics DiagramStore::metrics(NodeId root) const {
  const auto nodes = reachable(root);
  DiagramMetrics m;
  m.nodes = nodes.size();
  std::vector<std::uint64_t> per_height(arena_[root].height + 1, 0);
  for (NodeId id : nodes) {
    ++per_height[arena_[id].height];
    const std::uint64_t out = arena_[id].edge_list.size();
    m.edges += out;
    m.branching_degree = std::max(m.branching_degree, out);
  }
  m.width = *std::max_element(per_height.begin(), per_height.end());
  m.seq_words = checked_add(m.nodes, checked_add(m.edges, m.edges));

  std::unordered_map<NodeId, std::uint64_t> tree_size;
  tree_size.reserve(nodes.size());
  for (NodeId id : nodes) {  // children first: nodes is sorted by height
    std::uint64_t sz = 1;
    for (const Edge& e : arena_[id].edge_list) sz = checked_add(sz, tree_size.at(e.to));
    tree_size.emplace(id, sz);
  }
  m.tree_nodes = tree_size.at(root);
  return m;
}

std::uint64_t DiagramStore::tree_seq_words(NodeId root) const {
  const auto nodes = reachable(root);
  std::unordered_map<NodeId, std::uint64_t> words;
  words.reserve(nodes.size());
  for (NodeId id : nodes) {
    std::uint64_t w = checked_add(1, 2 * arena_[id].edge_list.size());
    for (const Edge& e : arena_[id].edge_list) w = checked_add(w, words.at(e.to));
    words.emplace(id, w);
  }
  return words.at(root);
}

std::vector<Monomial> DiagramStore::enumerate_basis(NodeId root) const {
  if (height(root) != dim_)
    throw std::invalid_argument("enumerate_basis: root is not a full diagram");
  std::vector<Monomial> out;
  std::vector<std::uint64_t> prefix;
  auto walk = [&](auto&& self, NodeId id) -> void {
    if (arena_[id].height == 0) {
      out.push_back(Monomial::from_storage(prefix));
      return;
    }
    for (const Edge& e : arena_[id].edge_list) {
      prefix.push_back(e.label);
      self(self, e.to);
      prefix.pop_back();
    }
  };
  walk(walk, root);
  return out;
}

std::vector<Monomial> DiagramStore::minimal_generators(NodeId root) const {
  const auto basis = enumerate_basis(root);
  std::vector<Monomial> out;
  for (const Monomial& m : basis) {
    bool redundant = false;
    for (const Monomial& g : basis) {
      if (!(g == m) && divides(g, m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

std::string DiagramStore::to_dot(NodeId root) const {
  const auto nodes = reachable(root);
  std::vector<NodeId> by_id(nodes);
  std::sort(by_id.begin(), by_id.end());
  std::ostringstream os;
  os << "digraph mdd {\n  rankdir=TB;\n";
  for (NodeId id : by_id) {
    os << "  n" << id;
    if (arena_[id].height == 0)
      os << " [shape=doublecircle,label=\"\"]";
    else
      os << " [shape=circle,label=\"" << id << "\"]";
    os << ";\n";
  }
  for (NodeId id : by_id)
    for (const Edge& e : arena_[id].edge_list)
      os << "  n" << id << " -> n" << e.to << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

void DiagramStore::dump_sequential(NodeId root, std::ostream& os) const {
  const auto nodes = reachable(root);  // children before parents
  std::unordered_map<NodeId, std::size_t> index;
  index.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
  for (NodeId id : nodes) {
    os << arena_[id].edge_list.size();
    for (const Edge& e : arena_[id].edge_list) os << ' ' << e.label << ' ' << index.at(e.to);
    os << '\n';
  }
}

bool DiagramStore::verify_maximal_sharing() const {
  std::vector<NodeId> ids(arena_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<NodeId>(i);
  auto edge_less = [](const Edge& a, const Edge& b) {
    return a.label != b.label ? a.label < b.label : a.to < b.to;
  };
  std::sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
    const auto& ea = arena_[a].edge_list;
    const auto& eb = arena_[b].edge_list;
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(), edge_less);
  });
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (arena_[ids[i]].edge_list == arena_[ids[i - 1]].edge_list) return false;
  return true;
}

DiagramHandle build_diagram(DiagramStore& store, const GeneratorList& gens) {
  if (gens.dim != store.dim())
    throw std::invalid_argument("generator list dimension does not match store");
  DiagramHandle h{&store, std::nullopt};
  for (const Monomial& g : gens.gens) h.insert(g);
  return h;
}

std::vector<NodeId> compact_into(const DiagramStore& src, std::span<const NodeId> roots,
                                 DiagramStore& dst) {
  if (dst.dim() != src.dim()) throw std::invalid_argument("compact_into: dimension mismatch");
  if (dst.node_count() != 1) throw std::invalid_argument("compact_into: destination not empty");
  std::unordered_map<NodeId, NodeId> remap{{kLeafNode, kLeafNode}};
  auto rebuild = [&](auto&& self, NodeId id) -> NodeId {
    if (auto it = remap.find(id); it != remap.end()) return it->second;
    std::vector<Edge> es = src.edges(id);
    for (Edge& e : es) e.to = self(self, e.to);
    NodeId out = dst.make_node(es);
    remap.emplace(id, out);
    return out;
  };
  std::vector<NodeId> out;
  out.reserve(roots.size());
  for (NodeId r : roots) out.push_back(rebuild(rebuild, r));
  return out;
}

}  // namespace mddkit
