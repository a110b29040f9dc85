#pragma once

// The shape-preserving bijection between reduced word tableaux of w and
// EG-pipedreams of w, in both directions.

#include <optional>
#include <vector>

#include "bpd/perm.hpp"
#include "bpd/pipedream.hpp"
#include "bpd/tableau.hpp"
#include "bpd/tree.hpp"
#include "bpd/word.hpp"

namespace bpd {

/// One node on the root-to-leaf path: the permutation, the word of that
/// permutation carried by the chain, the node's pipedream, and the move
/// that led to it (absent at the root).
struct ChainStep {
  Permutation perm;
  Word word;
  BumplessPipedream pipedream;
  std::optional<Move> move;
};

struct GammaTrace {
  /// Root first.
  std::vector<ChainStep> steps;
  BumplessPipedream result;
};

struct GammaInverseTrace {
  /// Root first: steps.front().word is w(P), steps.back().pipedream is P.
  std::vector<ChainStep> steps;
  IncreasingTableau result;
};

/// Walks the modified LS-tree of w, mapping column(T) through the Little
/// maps theta_{p, u_q} and following the child whose permutation the word
/// lands on.  Throws InvalidInput unless T is a reduced word tableau of w.
GammaTrace gamma_trace(const Tableau& t, const Permutation& w);
BumplessPipedream gamma(const Tableau& t, const Permutation& w);

/// Undoes the NW elbows of P smallest first, reads each intermediate
/// permutation off the empty boxes, and pulls column(frozen tableau) back
/// through the inverse Little maps.  Throws InvalidInput unless P is an
/// EG-pipedream.
GammaInverseTrace gamma_inverse_trace(const BumplessPipedream& p);
IncreasingTableau gamma_inverse(const BumplessPipedream& p);

/// The reduced word w(P) of the permutation of P.
Word pipedream_word(const BumplessPipedream& p);

}  // namespace bpd
