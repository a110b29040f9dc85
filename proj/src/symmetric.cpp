#include "bpd/symmetric.hpp"

#include <algorithm>

#include "bpd/error.hpp"
#include "bpd/word.hpp"

namespace bpd {

namespace {

using Counts = std::map<std::vector<int>, long long>;

SparsePoly from_counts(const Counts& counts) {
  SparsePoly out;
  for (const auto& [exps, c] : counts) out.add_term(Monomial(exps), c);
  return out;
}

// Visits every weakly increasing b with b_t <= bound(t), strict after
// an ascent of a, accumulating x_b.
void fill_word(const Word& a, std::size_t t, int low, const std::function<int(std::size_t)>& bound,
               std::vector<int>& exps, Counts& counts) {
  if (t > a.size()) {
    ++counts[exps];
    return;
  }
  const int start = (t > 1 && a[t - 1] < a[t]) ? low + 1 : low;
  for (int b = std::max(start, 1); b <= bound(t); ++b) {
    ++exps[static_cast<std::size_t>(b - 1)];
    fill_word(a, t + 1, b, bound, exps, counts);
    --exps[static_cast<std::size_t>(b - 1)];
  }
}

}  // namespace

SparsePoly stanley_truncated(const Permutation& w, int m) {
  require(m >= 1, "variable count must be positive");
  Counts counts;
  std::vector<int> exps(static_cast<std::size_t>(m), 0);
  for (const auto& a : reduced_words(w)) fill_word(a, 1, 1, [m](std::size_t) { return m; }, exps, counts);
  return from_counts(counts);
}

SparsePoly schubert_bjs(const Permutation& w) {
  Counts counts;
  std::vector<int> exps(static_cast<std::size_t>(w.size()), 0);
  for (const auto& a : reduced_words(w))
    fill_word(a, 1, 1, [&a](std::size_t t) { return a[t]; }, exps, counts);
  return from_counts(counts);
}

namespace {

SparsePoly descend(const Permutation& w, AscentChoice choice, const SparsePoly& top,
                   std::map<Permutation, SparsePoly>& memo) {
  if (w == Permutation::longest(w.size())) return top;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  int ascent = 0;
  for (int i = 1; i < w.size(); ++i) {
    if (w[i] > w[i + 1]) continue;
    ascent = i;
    if (choice == AscentChoice::First) break;
  }
  SparsePoly result = divided_difference(descend(w.apply_simple(ascent), choice, top, memo), ascent);
  memo.emplace(w, result);
  return result;
}

}  // namespace

SparsePoly schubert_recursive(const Permutation& w, AscentChoice choice) {
  const int n = w.size();
  std::vector<int> staircase;
  for (int i = 1; i < n; ++i) staircase.push_back(n - i);
  std::map<Permutation, SparsePoly> memo;
  return descend(w, choice, SparsePoly(Monomial(staircase)), memo);
}

SparsePoly double_schubert(const Permutation& w, AscentChoice choice) {
  const int n = w.size();
  SparsePoly top(1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) top *= SparsePoly::x(i) - SparsePoly::y(j);
  std::map<Permutation, SparsePoly> memo;
  return descend(w, choice, top, memo);
}

namespace {

void fill_tableau(const Partition& lambda, int m, std::size_t row, int col,
                  std::vector<std::vector<int>>& filling, std::vector<int>& exps, Counts& counts) {
  if (row == static_cast<std::size_t>(lambda.rows())) {
    ++counts[exps];
    return;
  }
  if (col == lambda[static_cast<int>(row)]) {
    fill_tableau(lambda, m, row + 1, 0, filling, exps, counts);
    return;
  }
  const auto c = static_cast<std::size_t>(col);
  int low = 1;
  if (col > 0) low = std::max(low, filling[row][c - 1]);
  if (row > 0) low = std::max(low, filling[row - 1][c] + 1);
  for (int v = low; v <= m; ++v) {
    filling[row][c] = v;
    ++exps[static_cast<std::size_t>(v - 1)];
    fill_tableau(lambda, m, row, col + 1, filling, exps, counts);
    --exps[static_cast<std::size_t>(v - 1)];
  }
}

}  // namespace

SparsePoly schur_poly(const Partition& lambda, int m) {
  require(m >= 0, "variable count must be nonnegative");
  if (lambda.rows() > m) return SparsePoly();
  std::vector<std::vector<int>> filling;
  for (int part : lambda.parts()) filling.emplace_back(static_cast<std::size_t>(part), 0);
  std::vector<int> exps(static_cast<std::size_t>(m), 0);
  Counts counts;
  fill_tableau(lambda, m, 0, 0, filling, exps, counts);
  return from_counts(counts);
}

SchurExpansion schur_expand(const SparsePoly& f, int m) {
  require(m >= 1, "variable count must be positive");
  require(!f.has_y(), "Schur expansion needs a polynomial in x only");
  require(f.is_homogeneous(), "Schur expansion needs a homogeneous polynomial");
  require(is_symmetric(f, m), "polynomial is not symmetric in x_1..x_" + std::to_string(m));

  SchurExpansion out;
  SparsePoly rest = f;
  while (!rest.is_zero()) {
    // The lexicographically largest monomial of a symmetric polynomial has
    // a partition as its exponent vector.
    const auto& [lead, c] = *rest.terms().rbegin();
    require(std::is_sorted(lead.x.begin(), lead.x.end(), std::greater<>()), "leading exponent is not a partition");
    require(c > 0, "negative Schur coefficient: input is not Schur positive");
    const Partition lambda(lead.x);
    const Coefficient coefficient = c;
    rest -= SparsePoly(coefficient) * schur_poly(lambda, m);
    out.emplace(lambda, coefficient);
  }
  ensure(schur_sum(out, m) == f, "Schur expansion does not reconstruct its input");
  return out;
}

SparsePoly schur_sum(const SchurExpansion& expansion, int m) {
  SparsePoly out;
  for (const auto& [lambda, c] : expansion) out += SparsePoly(c) * schur_poly(lambda, m);
  return out;
}

EgMethod parse_eg_method(std::string_view name) {
  if (name == "tableaux") return EgMethod::Tableaux;
  if (name == "pipedreams") return EgMethod::Pipedreams;
  if (name == "mls_leaves" || name == "mls-leaves") return EgMethod::MlsLeaves;
  if (name == "monomial") return EgMethod::Monomial;
  throw InvalidInput("unknown method '" + std::string(name) + "'");
}

std::string to_string(EgMethod method) {
  switch (method) {
    case EgMethod::Tableaux:
      return "tableaux";
    case EgMethod::Pipedreams:
      return "pipedreams";
    case EgMethod::MlsLeaves:
      return "mls_leaves";
    case EgMethod::Monomial:
      return "monomial";
  }
  return "?";
}

std::string to_string(const SchurExpansion& expansion) {
  std::string out;
  for (const auto& [lambda, c] : expansion) out += to_string(lambda) + ": " + c.str() + "\n";
  return out;
}

}  // namespace bpd
