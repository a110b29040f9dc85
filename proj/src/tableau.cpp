#include "bpd/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include "bpd/error.hpp"
#include "text.hpp"

namespace bpd {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    require(!row.empty(), "tableau rows must be nonempty");
    require(i == 0 || row.size() <= rows_[i - 1].size(), "tableau rows must weakly decrease in length");
    for (std::size_t j = 0; j < row.size(); ++j) {
      require(row[j] >= 1, "tableau entries must be positive");
      require(j == 0 || row[j - 1] < row[j], "tableau rows must strictly increase");
      require(i == 0 || rows_[i - 1][j] < row[j], "tableau columns must strictly increase");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const { return shape().size(); }

bool Tableau::is_standard() const {
  std::vector<int> entries;
  for (const auto& row : rows_) entries.insert(entries.end(), row.begin(), row.end());
  std::sort(entries.begin(), entries.end());
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Tableau Tableau::transpose() const {
  std::vector<std::vector<int>> cols;
  for (const auto& row : rows_)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (cols.size() <= j) cols.emplace_back();
      cols[j].push_back(row[j]);
    }
  return Tableau(std::move(cols));
}

Insertion eg_insert(const Word& a) {
  require(is_reduced(a), "Edelman-Greene insertion needs a reduced word");
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (std::size_t t = 1; t <= a.size(); ++t) {
    int x = a[t];
    for (std::size_t r = 0;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(t)});
        break;
      }
      auto& row = p[r];
      if (x > row.back()) {
        row.push_back(x);
        q[r].push_back(static_cast<int>(t));
        break;
      }
      ensure(x != row.back(), "inserted letter equals the largest entry of a row");
      const auto j = static_cast<std::size_t>(std::upper_bound(row.begin(), row.end(), x) - row.begin());
      const int y = row[j];
      // Replace only if the tableau stays increasing; otherwise y moves on
      // and the row is left as is.
      const bool fits = (j == 0 || row[j - 1] < x) && (r == 0 || p[r - 1][j] < x);
      if (fits) row[j] = x;
      x = y;
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Word row_reading_word(const Tableau& t, int ambient_size) {
  std::vector<int> letters;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) letters.insert(letters.end(), it->begin(), it->end());
  return Word(std::move(letters), ambient_size);
}

Word column_reading_word(const Tableau& t, int ambient_size) {
  std::vector<int> letters;
  const auto& rows = t.rows();
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t j = width; j-- > 0;)
    for (const auto& row : rows)
      if (j < row.size()) letters.push_back(row[j]);
  return Word(std::move(letters), ambient_size);
}

namespace {

int max_entry(const Tableau& t) {
  int m = 0;
  for (const auto& row : t.rows())
    for (int v : row) m = std::max(m, v);
  return m;
}

}  // namespace

bool is_reduced_word_tableau(const Tableau& t, const Permutation& w) {
  if (max_entry(t) >= w.size()) return false;
  const Word column = column_reading_word(t, w.size());
  const Word row = row_reading_word(t, w.size());
  const bool by_column = is_reduced(column) && evaluate(column) == w;
  const bool by_row = is_reduced(row) && evaluate(row) == inverse(w);
  ensure(by_column == by_row, "row and column reading words disagree on " + to_string(t));
  return by_column;
}

bool tableau_order(const Tableau& a, const Tableau& b) {
  const auto sa = a.shape();
  const auto sb = b.shape();
  if (sa != sb) return sa < sb;
  const int n = std::max(max_entry(a), max_entry(b)) + 1;
  return row_reading_word(a, n) < row_reading_word(b, n);
}

std::vector<IncreasingTableau> enumerate_reduced_word_tableaux(const Permutation& w) {
  std::set<Tableau> distinct;
  for (const auto& a : reduced_words(inverse(w))) distinct.insert(eg_insert(a).p);
  std::vector<Tableau> out(distinct.begin(), distinct.end());
  std::sort(out.begin(), out.end(), tableau_order);
  return out;
}

IncreasingTableau frozen_tableau(const Permutation& w) {
  require(is_dominant(w), "frozen tableau needs a dominant permutation");
  std::vector<std::vector<int>> rows;
  const Partition shape = code_shape(w);
  for (int part : shape.parts()) {
    const int i = static_cast<int>(rows.size()) + 1;
    std::vector<int> row(static_cast<std::size_t>(part));
    std::iota(row.begin(), row.end(), i);
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

Tableau parse_tableau(std::string_view input) {
  const auto body = text::trim(input);
  if (body.empty() || body == "()") return Tableau();
  std::vector<std::vector<int>> rows;
  for (auto row_text : text::split(body, "/")) {
    std::vector<int> row;
    for (auto piece : text::split(row_text, ", ")) row.push_back(text::parse_int(piece));
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

std::string to_string(const Tableau& t) {
  if (t.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i > 0) out += '/';
    out += text::join(t.rows()[i], ",");
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << to_string(t); }

}  // namespace bpd
