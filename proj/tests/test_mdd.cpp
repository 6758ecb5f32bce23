#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mddkit/generators.hpp"
#include "mddkit/ideal_tree.hpp"
#include "mddkit/mdd.hpp"
#include "mddkit/rng.hpp"

using namespace mddkit;

namespace {

Monomial nat(std::initializer_list<std::uint64_t> exps) {
  std::vector<std::uint64_t> v(exps);
  return Monomial::from_natural(v);
}

GeneratorList gen_list(std::size_t n, std::initializer_list<Monomial> ms) {
  GeneratorList g;
  g.dim = n;
  g.gens = ms;
  return g;
}

const GeneratorList kFig1 = gen_list(3, {nat({1, 1, 1}), nat({2, 0, 0}), nat({1, 2, 0})});
const GeneratorList kI22 = gen_list(2, {nat({2, 0}), nat({1, 1}), nat({0, 2})});

template <class F>
void for_each_box(std::size_t n, std::uint64_t bound, F&& f) {
  std::vector<std::uint64_t> v(n, 0);
  for (;;) {
    f(Monomial::from_storage(v));
    std::size_t i = 0;
    while (i < n && ++v[i] > bound) {
      v[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

GeneratorList random_gens(Xoshiro256& rng, std::size_t n, std::size_t r, std::uint64_t bound) {
  GeneratorList g;
  g.dim = n;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::uint64_t> v(n);
    for (auto& e : v) e = rng.below(bound + 1);
    g.gens.push_back(Monomial::from_storage(std::move(v)));
  }
  return g;
}

std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out *= b;
  return out;
}

// Tiny structural check of DOT output: one digraph block, node statements
// before use, edges reference declared nodes.
void check_dot_wellformed(const std::string& dot) {
  std::istringstream is(dot);
  std::string line;
  REQUIRE(std::getline(is, line));
  REQUIRE(line == "digraph mdd {");
  std::set<std::string> declared;
  bool closed = false;
  while (std::getline(is, line)) {
    if (line == "}") {
      closed = true;
      break;
    }
    REQUIRE(line.size() > 2);
    REQUIRE(line.substr(0, 2) == "  ");
    REQUIRE(line.back() == ';');
    const auto arrow = line.find(" -> ");
    if (arrow == std::string::npos) {
      if (line.find("rankdir") != std::string::npos) continue;
      const auto sp = line.find(' ', 2);
      declared.insert(line.substr(2, sp - 2));
    } else {
      const std::string from = line.substr(2, arrow - 2);
      const auto attr = line.find(" [", arrow + 4);
      const std::string to = line.substr(arrow + 4, attr - arrow - 4);
      REQUIRE(declared.count(from) == 1);
      REQUIRE(declared.count(to) == 1);
    }
  }
  CHECK(closed);
}

}  // namespace

TEST_CASE("make_node interns edge lists") {
  DiagramStore store(2);
  const NodeId a = store.make_node(std::vector<Edge>{{3, store.leaf()}});
  const NodeId b = store.make_node(std::vector<Edge>{{3, store.leaf()}});
  CHECK(a == b);
  const NodeId c = store.make_node(std::vector<Edge>{{4, store.leaf()}});
  CHECK(c != a);
  CHECK(store.node_count() == 3);  // leaf + two distinct nodes

  CHECK_THROWS_AS((void)store.make_node(std::vector<Edge>{}), std::invalid_argument);
  CHECK_THROWS_AS((void)store.make_node(std::vector<Edge>{{3, a}, {1, c}}), std::invalid_argument);
  CHECK_THROWS_AS((void)store.make_node(std::vector<Edge>{{1, a}, {2, a}}), std::invalid_argument);
  CHECK_THROWS_AS((void)store.make_node(std::vector<Edge>{{1, store.leaf()}, {2, a}}),
                  std::invalid_argument);
}

TEST_CASE("dedup collapses adjacent runs only") {
  const NodeId a = 10, b = 11;
  CHECK(dedup({{1, a}, {3, a}, {5, b}}) == std::vector<Edge>{{1, a}, {5, b}});
  CHECK(dedup({}) == std::vector<Edge>{});
  const std::vector<Edge> keep{{0, a}, {2, b}, {4, a}};
  CHECK(dedup(keep) == keep);
}

TEST_CASE("singleton builds a shared path") {
  DiagramStore store(3);
  const Monomial one(3);
  const NodeId unit = store.singleton(one);
  CHECK(store.singleton(one) == unit);
  const auto m = store.metrics(unit);
  CHECK(m.nodes == 4);
  CHECK(m.edges == 3);
  CHECK(m.width == 1);
  CHECK(m.branching_degree == 1);

  // membership in <m> is divisibility by m
  const Monomial g = nat({2, 0, 1});
  const NodeId root = store.singleton(g);
  for_each_box(3, 3, [&](const Monomial& q) {
    CHECK(store.contains(root, q) == divides(g, q));
  });
}

TEST_CASE("contains on the three-generator example") {
  DiagramStore store(3);
  const auto h = build_diagram(store, kFig1);
  CHECK(h.contains(nat({2, 0, 1})));
  CHECK_FALSE(h.contains(nat({1, 1, 0})));
  const DiagramHandle empty{&store, std::nullopt};
  CHECK_FALSE(empty.contains(nat({9, 9, 9})));
}

TEST_CASE("insert: empty, idempotence, I_{2,2} structure") {
  DiagramStore store(2);
  const Monomial m = nat({2, 0});
  CHECK(store.insert(std::nullopt, m) == store.singleton(m));

  const auto h = build_diagram(store, kI22);
  REQUIRE(h.root.has_value());
  // inserting a member leaves the root id unchanged
  CHECK(store.insert(h.root, nat({3, 1})) == *h.root);

  const auto& root_edges = store.edges(*h.root);
  REQUIRE(root_edges.size() == 3);
  CHECK(root_edges[0].label == 0);
  CHECK(root_edges[1].label == 1);
  CHECK(root_edges[2].label == 2);
  CHECK(root_edges[0].to != root_edges[1].to);
  CHECK(root_edges[1].to != root_edges[2].to);
  for (const Edge& e : root_edges) {
    REQUIRE(store.edges(e.to).size() == 1);
    CHECK(store.edges(e.to)[0].to == store.leaf());
  }

  const auto m22 = h.metrics();
  CHECK(m22.nodes == 5);
  CHECK(m22.edges == 6);
  CHECK(m22.width == 3);
  CHECK(m22.branching_degree == 3);
  CHECK(m22.seq_words == 17);
  CHECK(m22.tree_nodes == 7);
  CHECK(store.tree_seq_words(*h.root) == 19);
}

TEST_CASE("insertion order does not change the root id") {
  Xoshiro256 rng(31);
  const auto gens = random_gens(rng, 4, 10, 5);
  DiagramStore store(4);
  const auto reference = build_diagram(store, gens);
  auto perm = gens.gens;
  for (int iter = 0; iter < 200; ++iter) {
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    GeneratorList shuffled{4, perm};
    CHECK(*build_diagram(store, shuffled).root == *reference.root);
  }
  CHECK(store.verify_maximal_sharing());
}

TEST_CASE("oracle equivalence: diagram vs tree vs naive list") {
  Xoshiro256 rng(32);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = 2 + rng.below(3);
    const auto gens = random_gens(rng, n, 1 + rng.below(10), 6);
    DiagramStore store(n);
    const auto h = build_diagram(store, gens);
    const auto t = build_tree(gens);
    for_each_box(n, 7, [&](const Monomial& m) {
      const bool expected = naive_contains(gens, m);
      REQUIRE(h.contains(m) == expected);
      REQUIRE(tree_contains(*t, m) == expected);
    });
  }
}

TEST_CASE("width and size laws hold along random builds") {
  Xoshiro256 rng(33);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = 2 + rng.below(3);
    const std::size_t r = 1 + rng.below(12);
    const auto gens = random_gens(rng, n, r, 6);
    DiagramStore store(n);
    DiagramHandle h{&store, std::nullopt};
    std::uint64_t width_before = 0;
    for (const auto& g : gens.gens) {
      h.insert(g);
      const auto m = h.metrics();
      CHECK(m.width <= 2 * width_before + 1);
      width_before = m.width;
    }
    const auto m = h.metrics();
    CHECK(m.width <= pow_u64(2, r) - 1);
    CHECK(m.edges <= n * m.branching_degree * m.width);
    CHECK(m.width <= pow_u64(m.branching_degree, n - 1));
  }
}

TEST_CASE("tree_nodes matches the explicit tree") {
  Xoshiro256 rng(34);
  for (int iter = 0; iter < 15; ++iter) {
    const std::size_t n = 2 + rng.below(3);
    const auto gens = random_gens(rng, n, 1 + rng.below(8), 5);
    DiagramStore store(n);
    const auto h = build_diagram(store, gens);
    const auto t = build_tree(gens);
    CHECK(h.metrics().tree_nodes == tree_node_count(*t));
    CHECK(store.tree_seq_words(*h.root) == tree_seq_words(*t));
  }
}

TEST_CASE("enumerate_basis lists the paths and regenerates the ideal") {
  DiagramStore store(3);
  const auto h = build_diagram(store, kFig1);
  auto basis = store.enumerate_basis(*h.root);
  CHECK(basis.size() == 4);
  CHECK(std::count(basis.begin(), basis.end(), nat({2, 0, 1})) == 1);

  GeneratorList regen{3, basis};
  CHECK(*build_diagram(store, regen).root == *h.root);

  DiagramStore store2(2);
  const auto h22 = build_diagram(store2, kI22);
  CHECK(store2.enumerate_basis(*h22.root).size() == 3);
  const Monomial m = nat({1, 2});
  CHECK(store2.enumerate_basis(store2.singleton(m)) == std::vector<Monomial>{m});
}

TEST_CASE("minimal_generators drops strict multiples") {
  DiagramStore store(3);
  const auto h = build_diagram(store, kFig1);
  auto mins = store.minimal_generators(*h.root);
  REQUIRE(mins.size() == 3);
  for (const auto& g : kFig1.gens) CHECK(std::count(mins.begin(), mins.end(), g) == 1);

  DiagramStore store2(2);
  const auto h22 = build_diagram(store2, kI22);
  CHECK(store2.minimal_generators(*h22.root).size() == 3);
  const Monomial m = nat({4, 1});
  CHECK(store2.minimal_generators(store2.singleton(m)) == std::vector<Monomial>{m});
}

TEST_CASE("complete-degree ideals have width d+1") {
  for (std::size_t n : {2, 3, 4}) {
    for (std::uint64_t d : {1, 2, 3, 4}) {
      FamilySpec spec;
      spec.family = Family::complete_degree;
      spec.n = n;
      spec.bound = d;
      const auto gens = generate(spec);
      DiagramStore store(n);
      const auto h = build_diagram(store, gens);
      CHECK(h.metrics().width == d + 1);
      CHECK(store.minimal_generators(*h.root).size() == binomial_checked(d + n - 1, n - 1));
    }
  }
}

TEST_CASE("dot output is well-formed and deterministic") {
  DiagramStore store(2);
  check_dot_wellformed(store.to_dot(store.leaf()));

  const NodeId s = store.singleton(nat({1, 2}));
  const std::string dot = store.to_dot(s);
  check_dot_wellformed(dot);
  CHECK(dot == store.to_dot(s));
  // 3 nodes, 2 edges for a path of length 2
  CHECK(std::count(dot.begin(), dot.end(), ';') == 3 + 2 + 1);  // + rankdir line

  Xoshiro256 rng(35);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 2 + rng.below(3);
    DiagramStore st(n);
    const auto h = build_diagram(st, random_gens(rng, n, 1 + rng.below(10), 6));
    check_dot_wellformed(st.to_dot(*h.root));
  }
}

TEST_CASE("sequential dump: word count and index discipline") {
  Xoshiro256 rng(36);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = 2 + rng.below(3);
    DiagramStore store(n);
    const auto h = build_diagram(store, random_gens(rng, n, 1 + rng.below(10), 6));
    std::ostringstream os;
    store.dump_sequential(*h.root, os);

    std::istringstream is(os.str());
    std::uint64_t total_words = 0;
    std::size_t line_index = 0;
    std::string line;
    while (std::getline(is, line)) {
      std::istringstream ls(line);
      std::uint64_t r;
      REQUIRE(static_cast<bool>(ls >> r));
      ++total_words;
      for (std::uint64_t i = 0; i < r; ++i) {
        std::uint64_t label, target;
        REQUIRE(static_cast<bool>(ls >> label));
        REQUIRE(static_cast<bool>(ls >> target));
        CHECK(target < line_index);  // children precede parents
        total_words += 2;
      }
      ++line_index;
    }
    const auto m = h.metrics();
    CHECK(total_words == m.seq_words);
    CHECK(line_index == m.nodes);
  }
}

TEST_CASE("membership probes at most n levels") {
  DiagramStore store(4);
  Xoshiro256 rng(37);
  const auto h = build_diagram(store, random_gens(rng, 4, 8, 5));
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::uint64_t> v(4);
    for (auto& e : v) e = rng.below(8);
    std::uint32_t probe = 0;
    (void)store.contains(h.root, Monomial::from_storage(v), &probe);
    CHECK(probe <= 4);
  }
}

TEST_CASE("re-interning existing nodes does not grow the arena") {
  DiagramStore store(3);
  Xoshiro256 rng(38);
  build_diagram(store, random_gens(rng, 3, 10, 5));
  const std::size_t before = store.node_count();
  for (NodeId id = 1; id < before; ++id) {
    CHECK(store.make_node(store.edges(id)) == id);
    CHECK(store.node_count() == before);
  }
  CHECK(store.verify_maximal_sharing());
}

TEST_CASE("compact rebuilds live roots into a fresh store") {
  DiagramStore store(3);
  Xoshiro256 rng(39);
  const auto gens_a = random_gens(rng, 3, 8, 5);
  const auto a = build_diagram(store, gens_a);
  const auto b = build_diagram(store, random_gens(rng, 3, 4, 5));  // now-dead intermediate roots

  DiagramStore fresh(3);
  const std::vector<NodeId> roots{*a.root, *b.root};
  const auto remapped = compact_into(store, roots, fresh);
  REQUIRE(remapped.size() == 2);
  CHECK(fresh.node_count() <= store.node_count());
  const auto ma = store.metrics(*a.root);
  const auto fa = fresh.metrics(remapped[0]);
  CHECK(ma.nodes == fa.nodes);
  CHECK(ma.edges == fa.edges);
  for_each_box(3, 6, [&](const Monomial& m) {
    CHECK(store.contains(*a.root, m) == fresh.contains(remapped[0], m));
  });
  CHECK(fresh.verify_maximal_sharing());
}
