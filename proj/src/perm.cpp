#include "bpd/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

#include "bpd/error.hpp"
#include "bpd/word.hpp"
#include "text.hpp"

namespace bpd {

Permutation::Permutation() : window_{1} {}

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  require(!window_.empty(), "permutation must have positive size");
  std::vector<bool> seen(window_.size() + 1, false);
  for (int v : window_) {
    require(v >= 1 && v <= size() && !seen[static_cast<std::size_t>(v)],
            "not a permutation of 1.." + std::to_string(size()));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  require(n >= 1, "permutation size must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  require(n >= 1, "permutation size must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::from_code(const std::vector<int>& code, int n) {
  require(static_cast<int>(code.size()) <= n, "Lehmer code longer than permutation size");
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
    require(c >= 0 && c < static_cast<int>(remaining.size()), "invalid Lehmer code");
    w.push_back(remaining[static_cast<std::size_t>(c)]);
    remaining.erase(remaining.begin() + c);
  }
  return Permutation(std::move(w));
}

int Permutation::at(int i) const {
  require(i >= 1 && i <= size(), "position out of range");
  return (*this)[i];
}

int Permutation::position_of(int v) const {
  require(v >= 1 && v <= size(), "value out of range");
  const auto it = std::find(window_.begin(), window_.end(), v);
  return static_cast<int>(it - window_.begin()) + 1;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)[i] != i) return false;
  return true;
}

Permutation Permutation::apply_simple(int i) const {
  require(i >= 1 && i < size(), "simple transposition index out of range");
  auto w = window_;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  Permutation out;
  out.window_ = std::move(w);
  return out;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, "partition parts must be positive");
    require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> values) {
  std::erase(values, 0);
  std::sort(values.begin(), values.end(), std::greater<>());
  return Partition(std::move(values));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int c = 1; c <= parts_.front(); ++c) {
    int count = 0;
    for (int p : parts_)
      if (p >= c) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

// ---------------------------------------------------------------------------

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::vector<int> lehmer_code(const Permutation& w) {
  std::vector<int> code(static_cast<std::size_t>(w.size()), 0);
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w[j] < w[i]) ++code[static_cast<std::size_t>(i - 1)];
  return code;
}

Partition code_shape(const Permutation& w) { return Partition::from_unsorted(lehmer_code(w)); }

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(i);
  return out;
}

bool is_dominant(const Permutation& w) {
  const auto code = lehmer_code(w);
  return std::is_sorted(code.begin(), code.end(), std::greater<>());
}

bool contains_132(const Permutation& w) {
  const int n = w.size();
  for (int j = 1; j <= n; ++j) {
    int min_before = n + 1;
    for (int i = 1; i < j; ++i) min_before = std::min(min_before, w[i]);
    for (int k = j + 1; k <= n; ++k)
      if (min_before < w[k] && w[k] < w[j]) return true;
  }
  return false;
}

bool contains_2143(const Permutation& w) {
  const int n = w.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (w[b] >= w[a]) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (w[c] <= w[a]) continue;
        for (int d = c + 1; d <= n; ++d)
          if (w[a] < w[d] && w[d] < w[c]) return true;
      }
    }
  return false;
}

bool is_grassmannian(const Permutation& w) { return descents(w).size() <= 1; }

PatternFlags classify(const Permutation& w) {
  PatternFlags flags;
  flags.dominant = is_dominant(w);
  ensure(flags.dominant == !contains_132(w), "dominance tests disagree");
  flags.vexillary = !contains_2143(w);
  flags.grassmannian = is_grassmannian(w);
  return flags;
}

Permutation apply_transposition(const Permutation& w, int i, int j) {
  require(1 <= i && i < j && j <= w.size(), "transposition indices must satisfy 1 <= i < j <= n");
  auto window = w.window();
  std::swap(window[static_cast<std::size_t>(i - 1)], window[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(window));
}

Permutation embed(const Permutation& w, Side side) {
  return side == Side::Left ? embed_left(w) : embed_right(w);
}

Permutation embed_left(const Permutation& w) {
  std::vector<int> out{1};
  for (int v : w.window()) out.push_back(v + 1);
  return Permutation(std::move(out));
}

Permutation embed_right(const Permutation& w) {
  auto out = w.window();
  out.push_back(w.size() + 1);
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> out(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(w[i] - 1)] = i;
  return Permutation(std::move(out));
}

Permutation complement(const Permutation& w) {
  const int n = w.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - w[n + 1 - i];
  return Permutation(std::move(out));
}

namespace {

// Peels descents off the right end: every reduced word of w ends in some
// descent d, and the prefix is a reduced word of w s_d.
void collect_reduced_words(const Permutation& w, std::vector<int>& suffix, std::vector<Word>& out) {
  if (w.is_identity()) {
    out.emplace_back(std::vector<int>(suffix.rbegin(), suffix.rend()), w.size());
    return;
  }
  for (int d : descents(w)) {
    suffix.push_back(d);
    collect_reduced_words(w.apply_simple(d), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w) {
  std::vector<Word> out;
  std::vector<int> suffix;
  collect_reduced_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_reduced_words(const Permutation& w) {
  std::map<Permutation, std::size_t> memo;
  auto count = [&memo](auto&& self, const Permutation& u) -> std::size_t {
    if (u.is_identity()) return 1;
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (int d : descents(u)) total += self(self, u.apply_simple(d));
    memo.emplace(u, total);
    return total;
  };
  return count(count, w);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation parse_permutation(std::string_view input) {
  const auto body = text::strip_parens(input);
  require(!body.empty(), "empty permutation");
  std::vector<int> values;
  if (body.find_first_of(", ") != std::string_view::npos) {
    for (auto piece : text::split(body, ", ")) values.push_back(text::parse_int(piece));
  } else {
    require(body.size() <= 9, "compact permutation form only supports n <= 9; use commas");
    for (char c : body) {
      require(c >= '1' && c <= '9', "invalid digit in permutation '" + std::string(input) + "'");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& w) { return text::join(w.window(), ","); }

std::string to_compact_string(const Permutation& w) {
  if (w.size() > 9) return to_string(w);
  std::string out;
  for (int v : w.window()) out += static_cast<char>('0' + v);
  return out;
}

std::string to_string(const Partition& lambda) { return "(" + text::join(lambda.parts(), ",") + ")"; }

Partition parse_partition(std::string_view input) {
  std::vector<int> parts;
  for (auto piece : text::split(text::strip_parens(input), ", ")) parts.push_back(text::parse_int(piece));
  return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << to_compact_string(w); }
std::ostream& operator<<(std::ostream& os, const Partition& lambda) { return os << to_string(lambda); }

}  // namespace bpd
