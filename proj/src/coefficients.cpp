#include <algorithm>

#include "bpd/error.hpp"
#include "bpd/pipedream.hpp"
#include "bpd/symmetric.hpp"
#include "bpd/tableau.hpp"
#include "bpd/tree.hpp"

namespace bpd {

SchurExpansion eg_coeffs(const Permutation& w, EgMethod method) {
  SchurExpansion out;
  switch (method) {
    case EgMethod::Tableaux:
      for (const auto& t : enumerate_reduced_word_tableaux(w)) out[t.shape()] += 1;
      break;
    case EgMethod::Pipedreams:
      for (const auto& p : enumerate_all(w))
        if (auto shape = is_eg(p)) out[*shape] += 1;
      break;
    case EgMethod::MlsLeaves: {
      const auto tree = mls_tree(w);
      for (int leaf : tree.leaves()) out[code_shape(tree.node(leaf).perm)] += 1;
      break;
    }
    case EgMethod::Monomial: {
      const int m = std::max(length(w), 1);
      out = schur_expand(stanley_truncated(w, m), m);
      break;
    }
  }
  return out;
}

}  // namespace bpd
