#include "mddkit/ideal_tree.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace mddkit {

namespace {

IdealTree singleton_impl(std::span<const std::uint64_t> exps) {
  IdealTree node = IdealTree::leaf();
  for (std::size_t i = exps.size(); i-- > 0;) {
    std::vector<IdealTree::Child> cs;
    cs.push_back({exps[i], std::move(node)});
    node = IdealTree::branch(std::move(cs));
  }
  return node;
}

IdealTree insert_impl(const IdealTree* t, std::span<const std::uint64_t> exps) {
  if (t == nullptr) return singleton_impl(exps);
  if (exps.empty()) return IdealTree::leaf();

  const std::uint64_t x = exps[0];
  const auto rest = exps.subspan(1);
  const auto& cs = t->children();

  std::vector<IdealTree::Child> out;
  out.reserve(cs.size() + 1);
  const IdealTree* below = nullptr;
  std::size_t k = 0;
  while (k < cs.size() && cs[k].label < x) {
    out.push_back(cs[k]);
    below = &cs[k].subtree;
    ++k;
  }
  if (k == cs.size() || cs[k].label > x)
    out.push_back({x, insert_impl(below, rest)});
  for (; k < cs.size(); ++k)
    out.push_back({cs[k].label, insert_impl(&cs[k].subtree, rest)});

  // Prune labels whose subtree repeats the previous one. Subtrees are
  // canonical, and their ideals form an inclusion chain, so equal ideals
  // occupy a contiguous label range; comparing neighbours is enough.
  std::vector<IdealTree::Child> pruned;
  pruned.reserve(out.size());
  for (auto& c : out) {
    if (pruned.empty() || !(pruned.back().subtree == c.subtree))
      pruned.push_back(std::move(c));
  }
  return IdealTree::branch(std::move(pruned));
}

void collect_paths(const IdealTree& t, std::vector<std::uint64_t>& prefix,
                   std::vector<Monomial>& out) {
  if (t.is_leaf()) {
    out.push_back(Monomial::from_storage(prefix));
    return;
  }
  for (const auto& c : t.children()) {
    prefix.push_back(c.label);
    collect_paths(c.subtree, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

IdealTree IdealTree::singleton(const Monomial& m) { return singleton_impl(m.storage()); }

IdealTree IdealTree::branch(std::vector<Child> children) {
  if (children.empty())
    throw std::invalid_argument("ideal tree branch needs at least one child");
  IdealTree t;
  t.children_ = std::move(children);
  return t;
}

std::size_t IdealTree::depth() const {
  std::size_t d = 0;
  const IdealTree* cur = this;
  while (!cur->is_leaf()) {
    cur = &cur->children_.front().subtree;
    ++d;
  }
  return d;
}

bool IdealTree::operator==(const IdealTree& other) const {
  return children_ == other.children_;
}

bool naive_contains(const GeneratorList& gens, const Monomial& m) {
  if (m.dim() != gens.dim)
    throw std::invalid_argument("query dimension does not match generator list");
  return std::any_of(gens.gens.begin(), gens.gens.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

const IdealTree* tree_quo(const IdealTree& t, std::uint64_t e) {
  if (t.is_leaf()) throw std::invalid_argument("tree_quo on a leaf");
  const auto& cs = t.children();
  if (e < cs.front().label) return nullptr;
  // largest label not exceeding e
  auto it = std::upper_bound(cs.begin(), cs.end(), e,
                             [](std::uint64_t v, const IdealTree::Child& c) { return v < c.label; });
  return &std::prev(it)->subtree;
}

bool tree_contains(const IdealTree& t, const Monomial& m) {
  if (m.dim() != t.depth())
    throw std::invalid_argument("query dimension does not match tree depth");
  const IdealTree* cur = &t;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const IdealTree* next = tree_quo(*cur, m[i]);
    if (next == nullptr) return false;
    cur = next;
  }
  return true;
}

IdealTree tree_insert(const IdealTree& t, const Monomial& m) {
  if (m.dim() != t.depth())
    throw std::invalid_argument("monomial dimension does not match tree depth");
  return insert_impl(&t, m.storage());
}

IdealTree tree_insert(const std::optional<IdealTree>& t, const Monomial& m) {
  return insert_impl(t ? &*t : nullptr, m.storage());
}

std::optional<IdealTree> build_tree(const GeneratorList& gens) {
  std::optional<IdealTree> t;
  for (const Monomial& g : gens.gens) {
    if (g.dim() != gens.dim)
      throw std::invalid_argument("generator dimension mismatch");
    t = tree_insert(t, g);
  }
  return t;
}

std::vector<Monomial> tree_set(const IdealTree& t) {
  std::vector<Monomial> out;
  std::vector<std::uint64_t> prefix;
  collect_paths(t, prefix, out);
  return out;
}

bool ideal_includes(const IdealTree& a, const IdealTree& b) {
  if (a.depth() != b.depth())
    throw std::invalid_argument("ideal_includes on trees of different depth");
  for (const Monomial& m : tree_set(b))
    if (!tree_contains(a, m)) return false;
  return true;
}

std::uint64_t tree_node_count(const IdealTree& t) {
  std::uint64_t n = 1;
  for (const auto& c : t.children()) n += tree_node_count(c.subtree);
  return n;
}

std::uint64_t tree_seq_words(const IdealTree& t) {
  std::uint64_t w = 1 + 2 * static_cast<std::uint64_t>(t.children().size());
  for (const auto& c : t.children()) w += tree_seq_words(c.subtree);
  return w;
}

}  // namespace mddkit
