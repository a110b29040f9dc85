#include "bpd/bijection.hpp"

#include <algorithm>

#include "bpd/error.hpp"

namespace bpd {

namespace {

// Both invariants of a word chain: the recording tableau of the reversed
// word never changes, and the insertion tableau of the reversed word reads
// back the word by columns.
void check_chain_word(const Word& word, const Tableau& recording) {
  const auto ins = eg_insert(reverse(word));
  ensure(ins.q == recording, "recording tableau changed along the word chain");
  ensure(column_reading_word(ins.p, word.ambient_size()) == word,
         "column word of the insertion tableau differs from the chain word");
}

std::vector<Box> sorted(std::vector<Box> boxes) {
  std::sort(boxes.begin(), boxes.end());
  return boxes;
}

// The permutation whose Rothe diagram is the set of empty boxes of p.
Permutation empty_box_permutation(const BumplessPipedream& p) {
  std::vector<int> code(static_cast<std::size_t>(p.size()), 0);
  const auto empties = p.boxes(Tile::Empty);
  for (const auto& b : empties) ++code[static_cast<std::size_t>(b.row - 1)];
  const auto u = Permutation::from_code(code, p.size());
  ensure(sorted(rothe_diagram(u)) == sorted(empties), "empty boxes do not form a Rothe diagram");
  return u;
}

}  // namespace

GammaTrace gamma_trace(const Tableau& t, const Permutation& w) {
  require(is_reduced_word_tableau(t, w), "tableau " + to_string(t) + " is not a reduced word tableau of " +
                                             to_compact_string(w));
  const int n = w.size();
  const auto tree = eg_tree(w);

  Word word = column_reading_word(t, n);
  const Tableau recording = eg_insert(reverse(word)).q;
  check_chain_word(word, recording);

  GammaTrace trace{{}, *tree.root().pipedream};
  const TreeNode* node = &tree.root();
  trace.steps.push_back({node->perm, word, *node->pipedream, std::nullopt});
  while (!node->leaf()) {
    const Move& move = *tree.node(node->children.front()).move;
    word = little_map(word, move.p, node->perm[move.q]);
    ensure(word.ambient_size() == n, "Little map left S_n inside the modified tree");
    const Permutation next = evaluate(word);
    const TreeNode* child = nullptr;
    for (int c : node->children)
      if (tree.node(c).perm == next) {
        ensure(child == nullptr, "two children share a permutation");
        child = &tree.node(c);
      }
    ensure(child != nullptr, "Little map did not land on a child");
    check_chain_word(word, recording);
    node = child;
    trace.steps.push_back({node->perm, word, *node->pipedream, node->move});
  }
  ensure(word == column_reading_word(frozen_tableau(node->perm), n), "chain does not end at the frozen tableau");
  trace.result = *node->pipedream;
  ensure(is_eg(trace.result) == t.shape(), "bijection changed the shape");
  return trace;
}

BumplessPipedream gamma(const Tableau& t, const Permutation& w) { return gamma_trace(t, w).result; }

GammaInverseTrace gamma_inverse_trace(const BumplessPipedream& p) {
  const auto shape = is_eg(p);
  require(shape.has_value(), "not an EG-pipedream: its empty boxes are not a Young diagram in the corner");
  const Permutation& w = p.permutation();
  const int n = w.size();

  // P_m, ..., P_0 and the NW elbow removed at each step.
  std::vector<BumplessPipedream> pipedreams{p};
  std::vector<Box> elbows;
  while (true) {
    const auto nw = pipedreams.back().boxes(Tile::NWElbow);
    if (nw.empty()) break;
    elbows.push_back(nw.front());
    pipedreams.push_back(reverse_droop(pipedreams.back(), nw.front()));
  }
  ensure(pipedreams.back() == rothe(w), "reverse droops did not reach the Rothe pipedream");
  std::reverse(pipedreams.begin(), pipedreams.end());
  std::reverse(elbows.begin(), elbows.end());  // elbows[k-1] separates P_{k-1} and P_k

  const std::size_t m = elbows.size();
  std::vector<Permutation> perms;
  for (const auto& pd : pipedreams) perms.push_back(empty_box_permutation(pd));
  ensure(perms.front() == w, "empty boxes of the Rothe pipedream do not give w");
  ensure(is_dominant(perms.back()), "reverse droop chain does not start at a dominant permutation");

  std::vector<Move> moves;
  for (std::size_t k = 1; k <= m; ++k) {
    const Permutation& u = perms[k - 1];
    const auto [pr, q] = max_pivot_box(u);
    ensure((Box{pr, u[q]} == elbows[k - 1]), "NW elbow is not the maximal pivot box of its parent");
    const Permutation v = apply_transposition(u, pr, q);
    const auto sets = general_transition_sets(v, pr);
    std::optional<int> row;
    for (std::size_t c = 0; c < sets.lower.size(); ++c)
      if (sets.phi[c] == perms[k]) row = sets.lower[c];
    ensure(row.has_value(), "reverse droop chain left the modified LS-tree");
    moves.push_back(Move{pr, q, *row});
  }

  std::vector<Word> words(m + 1);
  words[m] = column_reading_word(frozen_tableau(perms[m]), n);
  const Tableau recording = eg_insert(reverse(words[m])).q;
  check_chain_word(words[m], recording);
  for (std::size_t k = m; k >= 1; --k) {
    words[k - 1] = little_map_inverse(words[k], moves[k - 1].p, elbows[k - 1].col);
    ensure(evaluate(words[k - 1]) == perms[k - 1], "inverse Little map landed on the wrong permutation");
    check_chain_word(words[k - 1], recording);
  }

  GammaInverseTrace trace{{}, eg_insert(reverse(words[0])).p};
  for (std::size_t k = 0; k <= m; ++k)
    trace.steps.push_back(
        {perms[k], words[k], pipedreams[k], k == 0 ? std::nullopt : std::optional<Move>(moves[k - 1])});
  ensure(is_reduced_word_tableau(trace.result, w), "inverse bijection did not give a reduced word tableau");
  ensure(trace.result.shape() == *shape, "inverse bijection changed the shape");
  return trace;
}

IncreasingTableau gamma_inverse(const BumplessPipedream& p) { return gamma_inverse_trace(p).result; }

Word pipedream_word(const BumplessPipedream& p) { return gamma_inverse_trace(p).steps.front().word; }

}  // namespace bpd
