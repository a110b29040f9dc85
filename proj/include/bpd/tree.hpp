#pragma once

// Transition sets and the three transition trees: the LS-tree (leaves
// Grassmannian), the modified LS-tree (leaves dominant) and the EG-tree
// (modified LS-tree decorated with bumpless pipedreams).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpd/perm.hpp"
#include "bpd/pipedream.hpp"

namespace bpd {

struct MaximalTransition {
  int r = 0;
  int s = 0;
  /// I(w), computed in the permutation w itself (possibly empty).
  std::vector<int> indices;
  /// Phi(w), after any 1 x w embeddings.
  std::vector<Permutation> children;
  /// Number of 1 x w embeddings applied before I became nonempty.
  int embeddings = 0;
};

/// r = last descent, s = the position after r with l(w t_{r,s}) = l(w) - 1,
/// I(w) = {i < r : l(w t_{r,s} t_{i,r}) = l(w)}.  Throws InvalidInput for
/// the identity.
MaximalTransition maximal_transition(const Permutation& w);

struct TransitionSets {
  std::vector<int> lower;  // I(u,k)
  std::vector<int> upper;  // S(u,k)
  std::vector<Permutation> phi;
  std::vector<Permutation> psi;
  int phi_embeddings = 0;  // applications of u -> 1 x u, k -> k + 1
  int psi_embeddings = 0;  // applications of u -> u x 1
};

/// I(u,k) = {i < k : l(u t_{i,k}) = l(u) + 1}, S(u,k) = {j > k : l(u t_{k,j})
/// = l(u) + 1}, with Phi and Psi the corresponding permutations.  An empty
/// Phi is replaced by Phi(1 x u, k + 1) and an empty Psi by Psi(u x 1, k).
TransitionSets general_transition_sets(const Permutation& u, int k);

enum class TreeKind { LS, MLS, EG };

std::string to_string(TreeKind kind);
TreeKind parse_tree_kind(std::string_view name);

/// The transition that produced a node.  For the modified trees (p, q) is
/// the maximal pivot box index pair of the parent; for the LS-tree it is
/// (r, s).  i is the row swapped with p (or r).
struct Move {
  int p = 0;
  int q = 0;
  int i = 0;

  bool operator==(const Move&) const = default;
};

struct TreeNode {
  int id = 0;
  std::optional<int> parent;
  Permutation perm;
  std::optional<BumplessPipedream> pipedream;
  std::vector<int> children;
  /// Absent for the root and for LS-tree embedding nodes 1 x w.
  std::optional<Move> move;
  bool embedded = false;

  bool leaf() const { return children.empty(); }
};

class TransitionTree {
 public:
  TransitionTree(TreeKind kind, std::vector<TreeNode> nodes);

  TreeKind kind() const { return kind_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(int id) const;
  const TreeNode& root() const { return nodes_.front(); }
  /// Leaf ids in depth-first order (children visited in order).
  std::vector<int> leaves() const;

 private:
  TreeKind kind_;
  std::vector<TreeNode> nodes_;
};

/// Children are Phi(w) from maximal_transition, with each 1 x w embedding
/// kept as an explicit node.  Leaves are Grassmannian.
TransitionTree ls_tree(const Permutation& w);

/// Each non-dominant node u expands into Phi(u t_{p,q}, p) with (p,q) the
/// maximal pivot box, children ordered by ascending i.  Leaves are dominant.
TransitionTree mls_tree(const Permutation& w);

/// mls_tree(w) with rothe(w) at the root and each child's pipedream obtained
/// by drooping the SE elbow (i, u_i) to (p, u_q).  Leaves are EG-pipedreams.
TransitionTree eg_tree(const Permutation& w);

/// Root-first node ids ending at `leaf`.  Throws InvalidInput when `leaf`
/// is not a leaf of the tree.
std::vector<int> leaf_path(const TransitionTree& tree, int leaf);

/// {"schema":1,"kind":...,"root":[...],"nodes":[...]}, pretty-printed.
std::string to_json(const TransitionTree& tree);
/// Indented ASCII drawing, one node per line.
std::string render_ascii(const TransitionTree& tree);

}  // namespace bpd
