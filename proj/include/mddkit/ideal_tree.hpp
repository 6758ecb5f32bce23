#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mddkit/monomial.hpp"

namespace mddkit {

/// Explicit, unshared ideal tree. This is the executable reference for the
/// diagram engine: slow, simple, value-semantic. A default-constructed tree
/// is the dimension-0 leaf; a branch holds a nonempty child list with
/// strictly increasing labels whose subtree ideals form a strictly
/// increasing chain.
class IdealTree {
public:
  struct Child;

  IdealTree() = default;

  static IdealTree leaf() { return {}; }
  static IdealTree singleton(const Monomial& m);
  static IdealTree branch(std::vector<Child> children);

  bool is_leaf() const { return children_.empty(); }
  const std::vector<Child>& children() const { return children_; }
  std::size_t depth() const;

  bool operator==(const IdealTree&) const;

private:
  std::vector<Child> children_;
};

struct IdealTree::Child {
  std::uint64_t label;
  IdealTree subtree;
  bool operator==(const Child&) const = default;
};

/// Ground truth for every membership test in the repository: true iff some
/// generator divides m componentwise.
bool naive_contains(const GeneratorList& gens, const Monomial& m);

/// Quotient lookup: nullptr when e is below every label, otherwise the child
/// at the largest label not exceeding e.
const IdealTree* tree_quo(const IdealTree& t, std::uint64_t e);

bool tree_contains(const IdealTree& t, const Monomial& m);

/// The canonical tree of ideal(t) + <m>. The overload without a tree inserts
/// into the empty ideal.
IdealTree tree_insert(const IdealTree& t, const Monomial& m);
IdealTree tree_insert(const std::optional<IdealTree>& t, const Monomial& m);

/// Fold tree_insert over a generator list; nullopt for the empty list.
std::optional<IdealTree> build_tree(const GeneratorList& gens);

/// All root-to-leaf label paths, i.e. the Janet-like generating set.
std::vector<Monomial> tree_set(const IdealTree& t);

/// true iff ideal(b) is a subset of ideal(a).
bool ideal_includes(const IdealTree& a, const IdealTree& b);

/// Node count of the explicit tree, each occurrence counted.
std::uint64_t tree_node_count(const IdealTree& t);

/// Sequential-form footprint of the explicit tree: each node with r children
/// contributes 1 + 2r words.
std::uint64_t tree_seq_words(const IdealTree& t);

}  // namespace mddkit
