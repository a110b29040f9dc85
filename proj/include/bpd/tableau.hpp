#pragma once

// Increasing and standard tableaux in English notation, Edelman-Greene
// insertion, reading words and reduced word tableaux.

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bpd/perm.hpp"
#include "bpd/word.hpp"

namespace bpd {

/// A filling of a partition shape with strictly increasing rows and columns.
class Tableau {
 public:
  Tableau() = default;
  /// Throws InvalidInput unless the rows form a partition shape and the
  /// filling is strictly increasing along rows and columns.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  /// Entry in 1-based row i, column j.
  int at(int i, int j) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

  /// Entries are exactly 1..size().
  bool is_standard() const;
  Tableau transpose() const;

  auto operator<=>(const Tableau&) const = default;
  bool operator==(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

using IncreasingTableau = Tableau;
using StandardTableau = Tableau;

struct Insertion {
  IncreasingTableau p;
  StandardTableau q;
};

/// Edelman-Greene insertion of a reduced word.  Throws InvalidInput when
/// the word is not reduced.
Insertion eg_insert(const Word& a);

/// Rows left to right, from the bottom row up.
Word row_reading_word(const Tableau& t, int ambient_size);
/// Columns top to bottom, from the rightmost column leftwards.
Word column_reading_word(const Tableau& t, int ambient_size);

/// column(T) is a reduced word of w.  Also checks that the row word is a
/// reduced word of w^{-1} and raises InternalError if the two disagree.
bool is_reduced_word_tableau(const Tableau& t, const Permutation& w);

/// Sort key for deterministic output: shape, then row reading word.
bool tableau_order(const Tableau& a, const Tableau& b);

/// RT(w): the distinct insertion tableaux P(a), a reduced for w^{-1},
/// sorted by tableau_order.
std::vector<IncreasingTableau> enumerate_reduced_word_tableaux(const Permutation& w);

/// Box (i,j) of the code shape holds i+j-1.  Requires w dominant.
IncreasingTableau frozen_tableau(const Permutation& w);

/// `1,4,5/2/5`; the empty tableau prints as `()`.
Tableau parse_tableau(std::string_view text);
std::string to_string(const Tableau& t);
std::ostream& operator<<(std::ostream& os, const Tableau& t);

}  // namespace bpd
