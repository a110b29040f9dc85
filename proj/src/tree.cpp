#include "bpd/tree.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "bpd/error.hpp"

namespace bpd {

namespace {

// Positions i < k with u_i < u_k and no value of u strictly between them
// in positions (i, k): exactly those with l(u t_{i,k}) = l(u) + 1.
std::vector<int> lower_covers(const Permutation& u, int k) {
  std::vector<int> out;
  for (int i = 1; i < k; ++i) {
    if (u[i] > u[k]) continue;
    bool blocked = false;
    for (int j = i + 1; j < k && !blocked; ++j) blocked = u[i] < u[j] && u[j] < u[k];
    if (!blocked) out.push_back(i);
  }
  return out;
}

std::vector<int> upper_covers(const Permutation& u, int k) {
  std::vector<int> out;
  for (int j = k + 1; j <= u.size(); ++j) {
    if (u[j] < u[k]) continue;
    bool blocked = false;
    for (int i = k + 1; i < j && !blocked; ++i) blocked = u[k] < u[i] && u[i] < u[j];
    if (!blocked) out.push_back(j);
  }
  return out;
}

std::vector<Permutation> swap_each_lower(const Permutation& u, int k, const std::vector<int>& rows) {
  std::vector<Permutation> out;
  for (int i : rows) out.push_back(apply_transposition(u, i, k));
  return out;
}

void check_covers(const Permutation& u, const std::vector<Permutation>& covers) {
  const int len = length(u);
  for (const auto& c : covers) ensure(length(c) == len + 1, "transition set member is not a cover");
}

}  // namespace

MaximalTransition maximal_transition(const Permutation& w) {
  require(!w.is_identity(), "the identity has no maximal transition");
  MaximalTransition out;
  out.r = descents(w).back();
  for (int j = out.r + 1; j <= w.size(); ++j)
    if (w[j] < w[out.r]) out.s = j;
  const Permutation v = apply_transposition(w, out.r, out.s);
  ensure(length(v) == length(w) - 1, "w t_{r,s} is not covered by w");
  out.indices = lower_covers(v, out.r);

  // With I(w) empty every entry before r exceeds v_r, so the 1 in front of
  // 1 x w always qualifies and a single embedding is enough; the guard
  // only protects against a broken cover computation.
  Permutation u = v;
  int r = out.r;
  auto rows = out.indices;
  while (rows.empty()) {
    ensure(out.embeddings < 2 * w.size(), "maximal transition exceeded its embedding guard");
    u = embed_left(u);
    ++r;
    ++out.embeddings;
    rows = lower_covers(u, r);
  }
  out.children = swap_each_lower(u, r, rows);
  check_covers(u, out.children);
  return out;
}

TransitionSets general_transition_sets(const Permutation& u, int k) {
  require(k >= 1 && k <= u.size(), "transition position out of range");
  TransitionSets out;
  out.lower = lower_covers(u, k);
  out.upper = upper_covers(u, k);

  Permutation a = u;
  int ka = k;
  auto rows = out.lower;
  while (rows.empty()) {
    ensure(out.phi_embeddings < 2 * u.size() + 2, "Phi fallback exceeded its embedding guard");
    a = embed_left(a);
    ++ka;
    ++out.phi_embeddings;
    rows = lower_covers(a, ka);
  }
  out.phi = swap_each_lower(a, ka, rows);
  check_covers(a, out.phi);

  Permutation b = u;
  auto cols = out.upper;
  while (cols.empty()) {
    ensure(out.psi_embeddings < 2 * u.size() + 2, "Psi fallback exceeded its embedding guard");
    b = embed_right(b);
    ++out.psi_embeddings;
    cols = upper_covers(b, k);
  }
  for (int j : cols) out.psi.push_back(apply_transposition(b, k, j));
  check_covers(b, out.psi);
  return out;
}

std::string to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::LS: return "ls";
    case TreeKind::MLS: return "mls";
    case TreeKind::EG: return "eg";
  }
  return "?";
}

TreeKind parse_tree_kind(std::string_view name) {
  if (name == "ls") return TreeKind::LS;
  if (name == "mls") return TreeKind::MLS;
  if (name == "eg") return TreeKind::EG;
  throw InvalidInput("unknown tree kind '" + std::string(name) + "' (expected ls, mls or eg)");
}

TransitionTree::TransitionTree(TreeKind kind, std::vector<TreeNode> nodes) : kind_(kind), nodes_(std::move(nodes)) {
  require(!nodes_.empty(), "a tree needs a root");
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const auto& node = nodes_[id];
    require(node.id == static_cast<int>(id), "node ids must match their index");
    require(node.parent.has_value() == (id != 0), "only the root lacks a parent");
    for (int c : node.children)
      require(c > node.id && c < static_cast<int>(nodes_.size()) && nodes_[static_cast<std::size_t>(c)].parent == node.id,
              "child link does not point back to its parent");
  }
}

const TreeNode& TransitionTree::node(int id) const {
  require(id >= 0 && id < static_cast<int>(nodes_.size()), "node id out of range");
  return nodes_[static_cast<std::size_t>(id)];
}

std::vector<int> TransitionTree::leaves() const {
  std::vector<int> out;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const auto& n = node(id);
    if (n.leaf()) out.push_back(id);
    stack.insert(stack.end(), n.children.rbegin(), n.children.rend());
  }
  return out;
}

namespace {

int add_node(std::vector<TreeNode>& nodes, std::optional<int> parent, Permutation perm, std::optional<Move> move) {
  TreeNode node;
  node.id = static_cast<int>(nodes.size());
  node.parent = parent;
  node.perm = std::move(perm);
  node.move = move;
  if (parent) nodes[static_cast<std::size_t>(*parent)].children.push_back(node.id);
  nodes.push_back(std::move(node));
  return nodes.back().id;
}

bool on_path(const std::vector<TreeNode>& nodes, int id, const Permutation& perm) {
  for (std::optional<int> at = id; at; at = nodes[static_cast<std::size_t>(*at)].parent)
    if (nodes[static_cast<std::size_t>(*at)].perm == perm) return true;
  return false;
}

}  // namespace

TransitionTree ls_tree(const Permutation& w) {
  std::vector<TreeNode> nodes;
  add_node(nodes, std::nullopt, w, std::nullopt);
  const int guard = 2 * w.size();
  std::function<void(int, int)> expand = [&](int id, int depth_embedded) {
    const Permutation u = nodes[static_cast<std::size_t>(id)].perm;
    if (is_grassmannian(u)) return;
    const auto mt = maximal_transition(u);
    if (mt.indices.empty()) {
      ensure(depth_embedded < guard, "LS-tree exceeded its embedding guard");
      const int child = add_node(nodes, id, embed_left(u), std::nullopt);
      nodes[static_cast<std::size_t>(child)].embedded = true;
      expand(child, depth_embedded + 1);
      return;
    }
    for (std::size_t c = 0; c < mt.indices.size(); ++c) {
      const int child = add_node(nodes, id, mt.children[c], Move{mt.r, mt.s, mt.indices[c]});
      expand(child, depth_embedded);
    }
  };
  expand(0, 0);
  return TransitionTree(TreeKind::LS, std::move(nodes));
}

TransitionTree mls_tree(const Permutation& w) {
  std::vector<TreeNode> nodes;
  add_node(nodes, std::nullopt, w, std::nullopt);
  std::function<void(int)> expand = [&](int id) {
    const Permutation u = nodes[static_cast<std::size_t>(id)].perm;
    if (is_dominant(u)) return;
    const auto [p, q] = max_pivot_box(u);
    const Permutation v = apply_transposition(u, p, q);
    const auto sets = general_transition_sets(v, p);
    ensure(sets.phi_embeddings == 0, "modified transition left S_n");
    ensure(sets.psi_embeddings == 0 && sets.psi.size() == 1 && sets.psi.front() == u,
           "Psi(u t_{p,q}, p) is not {u}");
    const Box box{p, u[q]};
    for (std::size_t c = 0; c < sets.lower.size(); ++c) {
      const Permutation& child = sets.phi[c];
      ensure(!on_path(nodes, id, child), "modified LS-tree path repeats a permutation");
      if (!is_dominant(child)) {
        const auto next = max_pivot_box(child);
        ensure(Box{next.p, child[next.q]} < box, "maximal pivot box did not decrease along an edge");
      }
      expand(add_node(nodes, id, child, Move{p, q, sets.lower[c]}));
    }
  };
  expand(0);
  return TransitionTree(TreeKind::MLS, std::move(nodes));
}

TransitionTree eg_tree(const Permutation& w) {
  auto nodes = mls_tree(w).nodes();
  nodes.front().pipedream = rothe(w);
  for (auto& node : nodes) {
    if (!node.parent) continue;
    const auto& parent = nodes[static_cast<std::size_t>(*node.parent)];
    const Permutation& u = parent.perm;
    const Move& m = *node.move;
    node.pipedream = droop(*parent.pipedream, Box{m.i, u[m.i]}, Box{m.p, u[m.q]});
    ensure(node.pipedream->permutation() == w, "droop changed the permutation");
    auto empties = node.pipedream->boxes(Tile::Empty);
    auto diagram = rothe_diagram(node.perm);
    std::sort(empties.begin(), empties.end());
    std::sort(diagram.begin(), diagram.end());
    ensure(empties == diagram, "EG-tree node's empty boxes differ from its Rothe diagram");
  }
  for (const auto& node : nodes)
    if (node.leaf()) ensure(is_eg(*node.pipedream).has_value(), "EG-tree leaf is not an EG-pipedream");
  return TransitionTree(TreeKind::EG, std::move(nodes));
}

std::vector<int> leaf_path(const TransitionTree& tree, int leaf) {
  require(tree.node(leaf).leaf(), "node " + std::to_string(leaf) + " is not a leaf");
  std::vector<int> out;
  for (std::optional<int> at = leaf; at; at = tree.node(*at).parent) out.push_back(*at);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_json(const TransitionTree& tree) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = 1;
  doc["kind"] = to_string(tree.kind());
  doc["root"] = tree.root().perm.window();
  ordered_json nodes = ordered_json::array();
  for (const auto& node : tree.nodes()) {
    ordered_json j;
    j["id"] = node.id;
    j["parent"] = node.parent ? ordered_json(*node.parent) : ordered_json(nullptr);
    j["perm"] = node.perm.window();
    j["n"] = node.perm.size();
    if (node.move)
      j["move"] = {{"p", node.move->p}, {"q", node.move->q}, {"i", node.move->i}};
    else
      j["move"] = nullptr;
    if (tree.kind() == TreeKind::LS) j["embedded"] = node.embedded;
    if (node.pipedream) j["pipedream"] = render(*node.pipedream, false, "/");
    j["children"] = node.children;
    j["leaf"] = node.leaf();
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

std::string render_ascii(const TransitionTree& tree) {
  std::string out;
  auto label = [&](const TreeNode& node) {
    std::string line = to_compact_string(node.perm);
    if (node.move)
      line += "  p=" + std::to_string(node.move->p) + " q=" + std::to_string(node.move->q) +
              " i=" + std::to_string(node.move->i);
    if (node.embedded) line += "  (1 x parent)";
    if (node.pipedream) line += "  " + render(*node.pipedream, false, "/");
    return line;
  };
  std::function<void(int, const std::string&)> draw = [&](int id, const std::string& prefix) {
    const auto& children = tree.node(id).children;
    for (std::size_t c = 0; c < children.size(); ++c) {
      const bool last = c + 1 == children.size();
      out += prefix + (last ? "`-- " : "|-- ") + label(tree.node(children[c])) + "\n";
      draw(children[c], prefix + (last ? "    " : "|   "));
    }
  };
  out += label(tree.root()) + "\n";
  draw(0, "");
  return out;
}

}  // namespace bpd
