#include "bpd/word.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "bpd/error.hpp"
#include "text.hpp"

namespace bpd {

Word::Word(std::vector<int> letters, int ambient_size) : letters_(std::move(letters)), ambient_(ambient_size) {
  require(ambient_ >= 1, "word ambient size must be positive");
  for (int a : letters_)
    require(a >= 1 && a < ambient_,
            "letter " + std::to_string(a) + " outside 1.." + std::to_string(ambient_ - 1));
}

Word Word::without(std::size_t t) const {
  require(t >= 1 && t <= letters_.size(), "word index out of range");
  auto letters = letters_;
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(t - 1));
  return Word(std::move(letters), ambient_);
}

Permutation evaluate(const Word& a) {
  std::vector<int> w(static_cast<std::size_t>(a.ambient_size()));
  std::iota(w.begin(), w.end(), 1);
  for (int letter : a.letters()) std::swap(w[static_cast<std::size_t>(letter - 1)], w[static_cast<std::size_t>(letter)]);
  return Permutation(std::move(w));
}

bool is_reduced(const Word& a) { return length(evaluate(a)) == static_cast<int>(a.size()); }

std::vector<std::size_t> word_descents(const Word& a) {
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t < a.size(); ++t)
    if (a[t] > a[t + 1]) out.push_back(t);
  return out;
}

std::pair<int, int> LineDiagram::crossing_at(std::size_t t) const {
  require(t >= 1 && t <= word.size(), "time out of range");
  const int row = word[t];
  int lo = 0;
  int hi = 0;
  for (std::size_t v = 0; v < trajectories.size(); ++v) {
    if (trajectories[v][t - 1] == row) lo = static_cast<int>(v) + 1;
    if (trajectories[v][t - 1] == row + 1) hi = static_cast<int>(v) + 1;
  }
  return {std::min(lo, hi), std::max(lo, hi)};
}

int LineDiagram::crossings(int u, int v) const {
  int count = 0;
  for (std::size_t t = 1; t <= word.size(); ++t) {
    const auto [lo, hi] = crossing_at(t);
    if (lo == std::min(u, v) && hi == std::max(u, v)) ++count;
  }
  return count;
}

LineDiagram line_diagram(const Word& a) {
  const int n = a.ambient_size();
  LineDiagram diagram{a, std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
  std::vector<int> arrangement(static_cast<std::size_t>(n));  // arrangement[row-1] = line
  std::iota(arrangement.begin(), arrangement.end(), 1);
  auto record = [&] {
    for (int row = 1; row <= n; ++row)
      diagram.trajectories[static_cast<std::size_t>(arrangement[static_cast<std::size_t>(row - 1)] - 1)].push_back(row);
  };
  record();
  for (int letter : a.letters()) {
    std::swap(arrangement[static_cast<std::size_t>(letter - 1)], arrangement[static_cast<std::size_t>(letter)]);
    record();
  }
  return diagram;
}

namespace {

// Pair of lines swapped at each time, without materialising trajectories.
std::vector<std::pair<int, int>> crossing_pairs(const Word& a) {
  std::vector<int> arrangement(static_cast<std::size_t>(a.ambient_size()));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size());
  for (int letter : a.letters()) {
    auto& x = arrangement[static_cast<std::size_t>(letter - 1)];
    auto& y = arrangement[static_cast<std::size_t>(letter)];
    out.emplace_back(std::min(x, y), std::max(x, y));
    std::swap(x, y);
  }
  return out;
}

}  // namespace

std::optional<std::size_t> crossing_time(const Word& a, int u, int v) {
  const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
  std::optional<std::size_t> found;
  const auto pairs = crossing_pairs(a);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    if (pairs[t] != key) continue;
    if (found) return std::nullopt;
    found = t + 1;
  }
  return found;
}

Word bump_at(const Word& a, std::size_t t) {
  require(t >= 1 && t <= a.size(), "bump time out of range");
  auto letters = a.letters();
  if (letters[t - 1] > 1) {
    --letters[t - 1];
    return Word(std::move(letters), a.ambient_size());
  }
  for (std::size_t s = 0; s < letters.size(); ++s)
    if (s != t - 1) ++letters[s];
  return Word(std::move(letters), a.ambient_size() + 1);
}

LittleBumpResult little_bump_trace(const Word& a, std::size_t t1) {
  require(t1 >= 1 && t1 <= a.size(), "bump start out of range");
  require(is_reduced(a), "Little bump needs a reduced word");
  require(is_reduced(a.without(t1)), "deleting the starting letter must leave a reduced word");

  const std::size_t scale = static_cast<std::size_t>(a.ambient_size()) + a.size();
  const std::size_t guard = 10 * scale * scale;

  LittleBumpResult result{a, {t1}};
  std::size_t t = t1;
  for (std::size_t step = 0;; ++step) {
    ensure(step < guard, "Little bump exceeded its iteration guard");
    result.word = bump_at(result.word, t);
    if (is_reduced(result.word)) return result;

    // The bumped crossing now meets its pair of lines a second time; that
    // other crossing is the only other letter whose removal repairs the word.
    const auto pairs = crossing_pairs(result.word);
    std::optional<std::size_t> next;
    for (std::size_t s = 1; s <= pairs.size(); ++s) {
      if (s == t || pairs[s - 1] != pairs[t - 1]) continue;
      ensure(!next, "bumped lines cross more than twice");
      next = s;
    }
    ensure(next.has_value(), "unreduced bump without a repeated crossing");
    for (std::size_t s = 1; s <= result.word.size(); ++s) {
      if (s == t) continue;
      ensure(is_reduced(result.word.without(s)) == (s == *next), "defect of a bumped word is not unique");
    }
    t = *next;
    result.bumped.push_back(t);
  }
}

Word little_bump(const Word& a, std::size_t t1) { return little_bump_trace(a, t1).word; }

LittleBumpResult little_map_trace(const Word& a, int k, int v) {
  require(is_reduced(a), "Little map needs a reduced word");
  const Permutation w = evaluate(a);
  require(k >= 1 && k <= w.size(), "Little map position out of range");
  require(v >= 1 && v <= w.size(), "Little map value out of range");
  const int j = w.position_of(v);
  require(j > k && w[k] > v, "value must appear after position k and be smaller than w_k");
  const auto t1 = crossing_time(a, w[k], v);
  require(t1.has_value(), "no unique crossing of the required pair of lines");
  require(length(apply_transposition(w, k, j)) == length(w) - 1,
          "transposition does not cover: w is not in the Psi set for (k, v)");
  return little_bump_trace(a, *t1);
}

Word little_map(const Word& a, int k, int v) { return little_map_trace(a, k, v).word; }

Word little_map_inverse(const Word& a, int k, int v) {
  const int n = a.ambient_size();
  const Word mapped = little_map(complement_word(a), n + 1 - k, n + 1 - v);
  return complement_word(mapped);
}

std::optional<int> infer_little_value(const Permutation& w, int k) {
  require(k >= 1 && k <= w.size(), "position out of range");
  const int len = length(w);
  std::optional<int> found;
  for (int j = k + 1; j <= w.size(); ++j) {
    if (w[j] > w[k] || length(apply_transposition(w, k, j)) != len - 1) continue;
    if (found) return std::nullopt;
    found = w[j];
  }
  return found;
}

Word reverse(const Word& a) {
  return Word(std::vector<int>(a.letters().rbegin(), a.letters().rend()), a.ambient_size());
}

Word complement_word(const Word& a) {
  std::vector<int> out;
  out.reserve(a.size());
  for (int letter : a.letters()) out.push_back(a.ambient_size() - letter);
  return Word(std::move(out), a.ambient_size());
}

Word parse_word(std::string_view input, std::optional<int> ambient_size) {
  std::vector<int> letters;
  for (auto piece : text::split(text::strip_parens(input), ", \t")) letters.push_back(text::parse_int(piece));
  int n = 1;
  for (int a : letters) n = std::max(n, a + 1);
  if (ambient_size) {
    require(*ambient_size >= n, "ambient size too small for the word's letters");
    n = *ambient_size;
  }
  return Word(std::move(letters), n);
}

std::string to_string(const Word& a) { return "(" + text::join(a.letters(), ",") + ")"; }

std::ostream& operator<<(std::ostream& os, const Word& a) { return os << to_string(a); }

}  // namespace bpd
