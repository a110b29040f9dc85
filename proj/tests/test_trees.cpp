#include <map>
#include <random>
#include <set>

#include "bpd/error.hpp"
#include "bpd/symmetric.hpp"
#include "bpd/tree.hpp"
#include "doctest.h"
#include "golden.hpp"
#include "oracles.hpp"

using namespace bpd;

namespace {

Permutation perm(const char* s) { return parse_permutation(s); }

std::set<Permutation> leaf_perms(const TransitionTree& tree) {
  std::set<Permutation> out;
  for (int id : tree.leaves()) out.insert(tree.node(id).perm);
  return out;
}

// parent -> ordered children, by compact strings.
std::map<std::string, std::vector<std::string>> edges(const TransitionTree& tree) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& node : tree.nodes())
    for (int c : node.children) out[to_compact_string(node.perm)].push_back(to_compact_string(tree.node(c).perm));
  return out;
}

}  // namespace

TEST_CASE("maximal transition") {
  const auto mt = maximal_transition(perm("231654"));
  CHECK(mt.r == 5);
  CHECK(mt.s == 6);
  CHECK(mt.indices == std::vector<int>{2, 3});
  CHECK(mt.children == std::vector<Permutation>{perm("241635"), perm("234615")});
  CHECK(mt.embeddings == 0);

  const auto empty = maximal_transition(perm("235416"));
  CHECK(empty.indices.empty());
  CHECK(empty.embeddings == 1);
  CHECK(empty.children == std::vector<Permutation>{perm("2346157")});

  const auto small = maximal_transition(perm("321"));
  CHECK(small.r == 2);
  CHECK(small.s == 3);
  CHECK(small.indices.empty());
  CHECK(small.children == std::vector<Permutation>{perm("2413")});

  CHECK_THROWS_AS(maximal_transition(Permutation::identity(3)), InvalidInput);
}

TEST_CASE("general transition sets") {
  const auto big = general_transition_sets(perm("645879321"), 4);
  CHECK(big.lower == std::vector<int>{1, 3});
  CHECK(big.phi == std::vector<Permutation>{perm("845679321"), perm("648579321")});

  const auto small = general_transition_sets(perm("241536"), 5);
  CHECK(small.psi == std::vector<Permutation>{perm("241563")});

  const auto id = general_transition_sets(Permutation::identity(3), 1);
  CHECK(id.lower.empty());
  CHECK(id.phi_embeddings == 1);
  CHECK(id.phi == std::vector<Permutation>{perm("2134")});
  CHECK(id.psi == std::vector<Permutation>{perm("213")});

  CHECK_THROWS_AS(general_transition_sets(perm("21"), 3), InvalidInput);
}

TEST_CASE("lower and upper covers agree with lengths") {
  for (const auto& u : all_permutations(5))
    for (int k = 1; k <= 5; ++k) {
      const auto sets = general_transition_sets(u, k);
      const int len = oracle::inversions(u.window());
      std::vector<int> lower, upper;
      for (int i = 1; i < k; ++i)
        if (oracle::inversions(apply_transposition(u, i, k).window()) == len + 1) lower.push_back(i);
      for (int j = k + 1; j <= 5; ++j)
        if (oracle::inversions(apply_transposition(u, k, j).window()) == len + 1) upper.push_back(j);
      CHECK(sets.lower == lower);
      CHECK(sets.upper == upper);
    }
}

TEST_CASE("transition identities hold for Stanley polynomials") {
  std::mt19937 rng(11);
  for (int sample = 0; sample < 25; ++sample) {
    const auto w = oracle::random_permutation(5, rng);
    if (w.is_identity()) continue;
    const int m = std::max(length(w), 1);
    SparsePoly sum;
    for (const auto& c : maximal_transition(w).children) sum = sum + stanley_truncated(c, m);
    CHECK(sum == stanley_truncated(w, m));

    for (int k = 1; k <= 5; ++k) {
      const auto sets = general_transition_sets(w, k);
      const int mk = length(w) + 1;
      SparsePoly phi, psi;
      for (const auto& c : sets.phi) phi = phi + stanley_truncated(c, mk);
      for (const auto& c : sets.psi) psi = psi + stanley_truncated(c, mk);
      CHECK(phi == psi);
    }
  }
}

TEST_CASE("modified LS-tree of 231654") {
  const auto tree = mls_tree(perm("231654"));
  const std::map<std::string, std::vector<std::string>> expected{
      {"231654", {"241635", "234615"}}, {"241635", {"251436", "245136"}}, {"251436", {"351246", "253146"}},
      {"351246", {"431256"}},           {"253146", {"423156"}},           {"245136", {"342156"}},
      {"234615", {"235416"}},           {"235416", {"243516"}},           {"243516", {"324516"}},
  };
  CHECK(edges(tree) == expected);
  CHECK(leaf_perms(tree) == std::set{perm("431256"), perm("423156"), perm("342156"), perm("324516")});
  CHECK(tree.root().move == std::nullopt);
  CHECK(tree.node(tree.root().children.front()).move == Move{5, 6, 2});

  std::vector<std::string> path;
  for (int leaf : tree.leaves())
    if (tree.node(leaf).perm == perm("423156"))
      for (int id : leaf_path(tree, leaf)) path.push_back(to_compact_string(tree.node(id).perm));
  CHECK(path == std::vector<std::string>{"231654", "241635", "251436", "253146", "423156"});
  CHECK_THROWS_AS(leaf_path(tree, 0), InvalidInput);
}

TEST_CASE("single-node trees") {
  const auto dom = perm("321");
  CHECK(mls_tree(dom).nodes().size() == 1);
  CHECK(eg_tree(dom).root().pipedream == rothe(dom));
  CHECK(leaf_path(mls_tree(dom), 0) == std::vector<int>{0});
  CHECK(ls_tree(perm("1342")).nodes().size() == 1);
}

TEST_CASE("LS-tree of 231654") {
  const auto tree = ls_tree(perm("231654"));
  // Grassmannian nodes stop the recursion, so 245136 and 234615 are leaves
  // themselves rather than passing to 2451367 and 2346157.
  CHECK(leaf_perms(tree) == std::set{perm("351246"), perm("234615"), perm("2361457"), perm("245136")});
  std::multiset<Partition> shapes;
  for (int leaf : tree.leaves()) {
    CHECK(is_grassmannian(tree.node(leaf).perm));
    shapes.insert(code_shape(tree.node(leaf).perm));
  }
  CHECK(shapes == std::multiset{Partition({3, 2}), Partition({2, 1, 1, 1}), Partition({3, 1, 1}), Partition({2, 2, 1})});

  bool found_embedding = false;
  for (const auto& node : tree.nodes())
    if (node.embedded) {
      found_embedding = true;
      CHECK(node.perm == embed_left(tree.node(*node.parent).perm));
    }
  CHECK(found_embedding);
}

TEST_CASE("EG-tree of 231654 matches the transcribed pipedreams") {
  const auto eg = eg_tree(perm("231654"));
  const auto mls = mls_tree(perm("231654"));
  REQUIRE(eg.nodes().size() == mls.nodes().size());
  for (std::size_t id = 0; id < eg.nodes().size(); ++id) {
    const auto& a = eg.nodes()[id];
    const auto& b = mls.nodes()[id];
    CHECK(a.perm == b.perm);
    CHECK(a.children == b.children);
    CHECK(a.move == b.move);
    REQUIRE(a.pipedream.has_value());
    CHECK(render(*a.pipedream, false, "/") == golden::kEgTree231654.at(to_compact_string(a.perm)));
  }
  CHECK(eg.leaves().size() == 4);
}

TEST_CASE("tree properties over S_5") {
  for (const auto& w : all_permutations(5)) {
    const auto mls = mls_tree(w);
    const auto eg = eg_tree(w);
    CHECK(eg.nodes().size() == mls.nodes().size());
    for (const auto& node : mls.nodes()) {
      CHECK(node.perm.size() == 5);
      CHECK(node.leaf() == is_dominant(node.perm));
    }

    std::set<BumplessPipedream> leaves;
    for (int id : eg.leaves()) leaves.insert(*eg.node(id).pipedream);
    std::set<BumplessPipedream> egs;
    for (const auto& p : enumerate_all(w))
      if (is_eg(p)) egs.insert(p);
    CHECK(leaves == egs);

    for (int id : ls_tree(w).leaves()) CHECK(is_grassmannian(ls_tree(w).node(id).perm));
  }
}

TEST_CASE("Edelman-Greene coefficients by four routes") {
  const std::vector methods{EgMethod::Tableaux, EgMethod::Pipedreams, EgMethod::MlsLeaves, EgMethod::Monomial};
  for (const auto& w : all_permutations(4)) {
    const auto reference = eg_coeffs(w, EgMethod::Tableaux);
    for (auto m : methods) CHECK(eg_coeffs(w, m) == reference);
  }
  const SchurExpansion expected{
      {Partition({3, 2}), 1}, {Partition({3, 1, 1}), 1}, {Partition({2, 2, 1}), 1}, {Partition({2, 1, 1, 1}), 1}};
  for (auto m : methods) CHECK(eg_coeffs(perm("231654"), m) == expected);
  CHECK(eg_coeffs(Permutation::identity(3), EgMethod::Monomial) == SchurExpansion{{Partition(), 1}});
  CHECK(eg_coeffs(Permutation::identity(3), EgMethod::MlsLeaves) == SchurExpansion{{Partition(), 1}});
}

TEST_CASE("export formats") {
  const auto tree = eg_tree(perm("231654"));
  const auto json = to_json(tree);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("\"kind\": \"eg\"") != std::string::npos);
  CHECK(json.find(golden::kWorkedPipedream) != std::string::npos);
  CHECK(to_json(tree) == json);

  const auto ascii = render_ascii(mls_tree(perm("231654")));
  CHECK(ascii.rfind("231654\n|-- 241635  p=5 q=6 i=2\n", 0) == 0);
  CHECK(ascii.find("`-- 234615  p=5 q=6 i=3") != std::string::npos);
  CHECK(parse_tree_kind("mls") == TreeKind::MLS);
  CHECK_THROWS_AS(parse_tree_kind("oak"), InvalidInput);
}
