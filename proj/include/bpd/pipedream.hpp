#pragma once

// Bumpless pipedreams on an n x n grid (row 1 at the top, column 1 at the
// left).  Pipe i enters through the south edge of column i and leaves
// through the east edge of row w^{-1}(i), moving only north and east.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpd/perm.hpp"
#include "bpd/poly.hpp"

namespace bpd {

enum class Tile : std::uint8_t { Empty, NWElbow, SEElbow, Horizontal, Vertical, Crossing };

/// `.` `j` `r` `-` `|` `+`
char to_char(Tile tile);
/// Box-drawing form: `.` `┘` `┌` `─` `│` `┼`.
std::string to_unicode(Tile tile);

/// Grid position; the default ordering is the row-major total order.
struct Box {
  int row = 0;
  int col = 0;

  auto operator<=>(const Box&) const = default;
  bool operator==(const Box&) const = default;
};

std::string to_string(const Box& box);

class BumplessPipedream {
 public:
  /// Throws InvalidInput unless the grid is square and satisfies the
  /// pipedream conditions (see validate()).
  explicit BumplessPipedream(std::vector<std::vector<Tile>> grid);

  int size() const { return n_; }
  Tile at(int row, int col) const { return tiles_[index(row, col)]; }
  Tile at(const Box& b) const { return at(b.row, b.col); }
  const Permutation& permutation() const { return perm_; }

  /// Boxes holding `tile`, in row-major order.
  std::vector<Box> boxes(Tile tile) const;
  std::vector<std::vector<Tile>> grid() const;

  auto operator<=>(const BumplessPipedream& other) const { return tiles_ <=> other.tiles_; }
  bool operator==(const BumplessPipedream& other) const { return tiles_ == other.tiles_; }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
  }

  int n_ = 0;
  std::vector<Tile> tiles_;
  Permutation perm_;
};

/// Traces the pipes of a grid and returns its permutation.  Throws
/// InvalidInput for a non-square grid, mismatched edges between
/// neighbouring tiles or against the boundary, or a pair of pipes that
/// cross twice.
Permutation validate(const std::vector<std::vector<Tile>>& grid);

/// The pipedream with an SE elbow at each (i, w_i) and no NW elbows.
BumplessPipedream rothe(const Permutation& w);

/// Boxes (i,j) with w_i > j and j appearing after position i in w.
std::vector<Box> rothe_diagram(const Permutation& w);

enum class DroopFailure {
  NotSEElbow,
  NotEmpty,
  NotSoutheast,
  PipeNotOnBoundary,
  ExtraElbow,
  InvalidResult,
};

std::string to_string(DroopFailure failure);

struct DroopResult {
  std::optional<BumplessPipedream> pipedream;
  std::optional<DroopFailure> failure;
};

/// Moves the SE elbow at `elbow` to the empty box `target` strictly to
/// its southeast, rerouting the elbow's pipe along the south row and east
/// column of the rectangle they span.
DroopResult try_droop(const BumplessPipedream& p, const Box& elbow, const Box& target);
/// As try_droop, throwing InvalidInput naming the violated condition.
BumplessPipedream droop(const BumplessPipedream& p, const Box& elbow, const Box& target);

/// Undoes the droop that created the NW elbow at `nw`.
BumplessPipedream reverse_droop(const BumplessPipedream& p, const Box& nw);

/// SE elbows (k, w_k) of rothe(w) northwest of the empty box with no other
/// elbow in the rectangle between them.
std::vector<Box> pivots(const Permutation& w, const Box& box);

struct PivotIndices {
  int p = 0;
  int q = 0;
};

/// p = max{t : some i < t < j has w_i < w_j < w_t} and
/// q = max{j > p : w_j < w_p, some i < p has w_i < w_j}.  The box (p, w_q)
/// is checked to be the largest empty box of rothe(w) with a pivot.
/// Throws InvalidInput for dominant w.
PivotIndices max_pivot_box(const Permutation& w);

/// Every bumpless pipedream of w, by closing rothe(w) under droops.
/// Sorted by grid.
std::vector<BumplessPipedream> enumerate_all(const Permutation& w);

/// Product of (x_i - y_j) over the empty boxes (i,j).
SparsePoly weight(const BumplessPipedream& p);

/// The shape when the empty boxes form a Young diagram in the northwest
/// corner.
std::optional<Partition> is_eg(const BumplessPipedream& p);

/// One character per box, rows joined by `separator`.
std::string render(const BumplessPipedream& p, bool unicode = false, std::string_view separator = "\n");
/// Accepts either character set, rows separated by newlines or `/`.
BumplessPipedream parse_pipedream(std::string_view text);

std::ostream& operator<<(std::ostream& os, const BumplessPipedream& p);

}  // namespace bpd
