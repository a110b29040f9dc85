#include "bpd/pipedream.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>

#include "bpd/error.hpp"
#include "text.hpp"

namespace bpd {

namespace {

// Open edges of a tile.
constexpr int kNorth = 1;
constexpr int kEast = 2;
constexpr int kSouth = 4;
constexpr int kWest = 8;

int mask(Tile tile) {
  switch (tile) {
    case Tile::Empty:
      return 0;
    case Tile::NWElbow:
      return kWest | kNorth;
    case Tile::SEElbow:
      return kSouth | kEast;
    case Tile::Horizontal:
      return kWest | kEast;
    case Tile::Vertical:
      return kNorth | kSouth;
    case Tile::Crossing:
      return kNorth | kEast | kSouth | kWest;
  }
  return 0;
}

std::optional<Tile> tile_of_mask(int m) {
  for (Tile t : {Tile::Empty, Tile::NWElbow, Tile::SEElbow, Tile::Horizontal, Tile::Vertical, Tile::Crossing})
    if (mask(t) == m) return t;
  return std::nullopt;
}

bool is_elbow(Tile t) { return t == Tile::NWElbow || t == Tile::SEElbow; }

using Grid = std::vector<std::vector<Tile>>;

Tile cell(const Grid& g, int row, int col) {
  return g[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
}

}  // namespace

char to_char(Tile tile) {
  switch (tile) {
    case Tile::Empty:
      return '.';
    case Tile::NWElbow:
      return 'j';
    case Tile::SEElbow:
      return 'r';
    case Tile::Horizontal:
      return '-';
    case Tile::Vertical:
      return '|';
    case Tile::Crossing:
      return '+';
  }
  return '?';
}

std::string to_unicode(Tile tile) {
  switch (tile) {
    case Tile::Empty:
      return ".";
    case Tile::NWElbow:
      return "┘";
    case Tile::SEElbow:
      return "┌";
    case Tile::Horizontal:
      return "─";
    case Tile::Vertical:
      return "│";
    case Tile::Crossing:
      return "┼";
  }
  return "?";
}

std::string to_string(const Box& box) { return "(" + std::to_string(box.row) + "," + std::to_string(box.col) + ")"; }

Permutation validate(const Grid& grid) {
  const int n = static_cast<int>(grid.size());
  require(n >= 1, "pipedream grid is empty");
  for (const auto& row : grid) require(static_cast<int>(row.size()) == n, "pipedream grid is not square");

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int m = mask(cell(grid, i, j));
      const std::string where = " at " + to_string(Box{i, j});
      const bool north = i > 1 ? (mask(cell(grid, i - 1, j)) & kSouth) != 0 : false;
      const bool west = j > 1 ? (mask(cell(grid, i, j - 1)) & kEast) != 0 : false;
      const bool south = i < n ? (mask(cell(grid, i + 1, j)) & kNorth) != 0 : true;
      const bool east = j < n ? (mask(cell(grid, i, j + 1)) & kWest) != 0 : true;
      require(((m & kNorth) != 0) == north, "north edge mismatch" + where);
      require(((m & kWest) != 0) == west, "west edge mismatch" + where);
      require(((m & kSouth) != 0) == south, "south edge mismatch" + where);
      require(((m & kEast) != 0) == east, "east edge mismatch" + where);
    }

  // Label each pipe by its entry column and follow it north/east.
  std::vector<int> window(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> vertical_pipe(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::set<std::pair<int, int>> crossed;
  for (int pipe = 1; pipe <= n; ++pipe) {
    int row = n;
    int col = pipe;
    bool heading_north = true;
    while (true) {
      const Tile t = cell(grid, row, col);
      if (t == Tile::SEElbow) heading_north = false;
      if (t == Tile::NWElbow) heading_north = true;
      if (heading_north) vertical_pipe[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = pipe;
      if (heading_north) {
        --row;
        ensure(row >= 1, "pipe left through the north boundary");
      } else if (++col > n) {
        window[static_cast<std::size_t>(row - 1)] = pipe;
        break;
      }
    }
  }
  // Record the horizontal pipe of each crossing from the exits backwards.
  for (int i = 1; i <= n; ++i) {
    int pipe = window[static_cast<std::size_t>(i - 1)];
    int row = i;
    int col = n;
    bool heading_west = true;
    while (true) {
      const Tile t = cell(grid, row, col);
      if (t == Tile::Crossing && heading_west) {
        const int other = vertical_pipe[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
        require(crossed.emplace(std::min(pipe, other), std::max(pipe, other)).second,
                "pipes " + std::to_string(std::min(pipe, other)) + " and " + std::to_string(std::max(pipe, other)) +
                    " cross twice");
      }
      if (t == Tile::SEElbow) heading_west = false;
      if (t == Tile::NWElbow) heading_west = true;
      if (heading_west) {
        --col;
      } else if (++row > n) {
        break;
      }
    }
  }
  return Permutation(std::move(window));
}

BumplessPipedream::BumplessPipedream(Grid grid) {
  perm_ = validate(grid);
  n_ = static_cast<int>(grid.size());
  for (const auto& row : grid) tiles_.insert(tiles_.end(), row.begin(), row.end());
}

std::vector<Box> BumplessPipedream::boxes(Tile tile) const {
  std::vector<Box> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) == tile) out.push_back({i, j});
  return out;
}

Grid BumplessPipedream::grid() const {
  Grid out(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out[static_cast<std::size_t>(i - 1)].push_back(at(i, j));
  return out;
}

BumplessPipedream rothe(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = inverse(w);
  Grid grid(static_cast<std::size_t>(n), std::vector<Tile>(static_cast<std::size_t>(n), Tile::Empty));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool horizontal = j > w[i];
      const bool vertical = i > winv[j];
      Tile& t = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (j == w[i])
        t = Tile::SEElbow;
      else if (horizontal && vertical)
        t = Tile::Crossing;
      else if (horizontal)
        t = Tile::Horizontal;
      else if (vertical)
        t = Tile::Vertical;
    }
  return BumplessPipedream(std::move(grid));
}

std::vector<Box> rothe_diagram(const Permutation& w) {
  const Permutation winv = inverse(w);
  std::vector<Box> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = 1; j <= w.size(); ++j)
      if (w[i] > j && winv[j] > i) out.push_back({i, j});
  return out;
}

std::string to_string(DroopFailure failure) {
  switch (failure) {
    case DroopFailure::NotSEElbow:
      return "source box is not an SE elbow";
    case DroopFailure::NotEmpty:
      return "target box is not empty";
    case DroopFailure::NotSoutheast:
      return "target is not strictly southeast of the elbow";
    case DroopFailure::PipeNotOnBoundary:
      return "the elbow's pipe does not run along the west column and north row of the rectangle";
    case DroopFailure::ExtraElbow:
      return "the rectangle contains another elbow";
    case DroopFailure::InvalidResult:
      return "rerouting the pipe does not give a bumpless pipedream";
  }
  return "?";
}

namespace {

using EdgeMap = std::map<Box, int>;

// Edges of the elbow's pipe inside the rectangle, before and after a droop
// from (a,b) to (c,d).
EdgeMap path_before(int a, int b, int c, int d) {
  EdgeMap edges;
  for (int i = a + 1; i <= c; ++i) edges[{i, b}] = kNorth | kSouth;
  edges[{a, b}] = kSouth | kEast;
  for (int j = b + 1; j <= d; ++j) edges[{a, j}] = kWest | kEast;
  return edges;
}

EdgeMap path_after(int a, int b, int c, int d) {
  EdgeMap edges;
  edges[{c, b}] = kSouth | kEast;
  for (int j = b + 1; j < d; ++j) edges[{c, j}] = kWest | kEast;
  edges[{c, d}] = kWest | kNorth;
  for (int i = a + 1; i < c; ++i) edges[{i, d}] = kNorth | kSouth;
  edges[{a, d}] = kSouth | kEast;
  return edges;
}

// Replaces one routing of a pipe by another; nullopt when the new edges
// collide with other pipes or do not form a valid pipedream.
std::optional<BumplessPipedream> reroute(const BumplessPipedream& p, const EdgeMap& from, const EdgeMap& to) {
  Grid grid = p.grid();
  std::set<Box> touched;
  for (const auto& [box, edges] : from) touched.insert(box);
  for (const auto& [box, edges] : to) touched.insert(box);
  for (const Box& box : touched) {
    const auto old_it = from.find(box);
    const auto new_it = to.find(box);
    const int removed = old_it == from.end() ? 0 : old_it->second;
    const int added = new_it == to.end() ? 0 : new_it->second;
    const int current = mask(p.at(box));
    if ((current & removed) != removed) return std::nullopt;
    const int rest = current & ~removed;
    if ((rest & added) != 0) return std::nullopt;
    const auto tile = tile_of_mask(rest | added);
    if (!tile) return std::nullopt;
    grid[static_cast<std::size_t>(box.row - 1)][static_cast<std::size_t>(box.col - 1)] = *tile;
  }
  try {
    return BumplessPipedream(std::move(grid));
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

}  // namespace

DroopResult try_droop(const BumplessPipedream& p, const Box& elbow, const Box& target) {
  const int n = p.size();
  auto fail = [](DroopFailure f) { return DroopResult{std::nullopt, f}; };
  const auto inside = [n](const Box& b) { return b.row >= 1 && b.row <= n && b.col >= 1 && b.col <= n; };
  require(inside(elbow) && inside(target), "droop box outside the grid");
  if (p.at(elbow) != Tile::SEElbow) return fail(DroopFailure::NotSEElbow);
  if (p.at(target) != Tile::Empty) return fail(DroopFailure::NotEmpty);
  const auto [a, b] = elbow;
  const auto [c, d] = target;
  if (!(a < c && b < d)) return fail(DroopFailure::NotSoutheast);

  for (int i = a + 1; i <= c; ++i) {
    const Tile t = p.at(i, b);
    if (t != Tile::Vertical && t != Tile::Crossing) return fail(DroopFailure::PipeNotOnBoundary);
  }
  for (int j = b + 1; j <= d; ++j) {
    const Tile t = p.at(a, j);
    if (t != Tile::Horizontal && t != Tile::Crossing) return fail(DroopFailure::PipeNotOnBoundary);
  }
  for (int i = a; i <= c; ++i)
    for (int j = b; j <= d; ++j)
      if (Box{i, j} != elbow && is_elbow(p.at(i, j))) return fail(DroopFailure::ExtraElbow);

  auto result = reroute(p, path_before(a, b, c, d), path_after(a, b, c, d));
  if (!result) return fail(DroopFailure::InvalidResult);
  ensure(result->permutation() == p.permutation(), "droop changed the permutation");
  return {std::move(result), std::nullopt};
}

BumplessPipedream droop(const BumplessPipedream& p, const Box& elbow, const Box& target) {
  auto result = try_droop(p, elbow, target);
  if (!result.pipedream)
    throw InvalidInput("illegal droop " + to_string(elbow) + " -> " + to_string(target) + ": " +
                       to_string(*result.failure));
  return std::move(*result.pipedream);
}

BumplessPipedream reverse_droop(const BumplessPipedream& p, const Box& nw) {
  const int n = p.size();
  require(nw.row >= 1 && nw.row <= n && nw.col >= 1 && nw.col <= n, "box outside the grid");
  require(p.at(nw) == Tile::NWElbow, "reverse droop needs an NW elbow at " + to_string(nw));
  const auto [c, d] = nw;
  // The pipe entered row c at an SE elbow to the west and leaves column d
  // at an SE elbow to the north.
  int b = d - 1;
  while (b >= 1 && (p.at(c, b) == Tile::Horizontal || p.at(c, b) == Tile::Crossing)) --b;
  int a = c - 1;
  while (a >= 1 && (p.at(a, d) == Tile::Vertical || p.at(a, d) == Tile::Crossing)) --a;
  ensure(b >= 1 && p.at(c, b) == Tile::SEElbow, "NW elbow's pipe does not start at an SE elbow in its row");
  ensure(a >= 1 && p.at(a, d) == Tile::SEElbow, "NW elbow's pipe does not leave through an SE elbow in its column");

  auto before = reroute(p, path_after(a, b, c, d), path_before(a, b, c, d));
  require(before.has_value(), "no droop produces the NW elbow at " + to_string(nw));
  const auto again = try_droop(*before, {a, b}, nw);
  require(again.pipedream && *again.pipedream == p, "no droop produces the NW elbow at " + to_string(nw));
  return std::move(*before);
}

std::vector<Box> pivots(const Permutation& w, const Box& box) {
  const auto [i, j] = box;
  require(i >= 1 && i <= w.size() && j >= 1 && j <= w.size(), "box outside the grid");
  const Permutation winv = inverse(w);
  require(w[i] > j && winv[j] > i, to_string(box) + " is not an empty box of the Rothe pipedream");
  std::vector<Box> out;
  for (int k = 1; k < i; ++k) {
    if (w[k] >= j) continue;
    bool maximal = true;
    for (int other = k; other < i && maximal; ++other)
      if (other != k && w[other] >= w[k] && w[other] < j) maximal = false;
    if (maximal) out.push_back({k, w[k]});
  }
  return out;
}

PivotIndices max_pivot_box(const Permutation& w) {
  const int n = w.size();
  int p = 0;
  for (int t = 1; t < n; ++t)
    for (int i = 1; i < t && p != t; ++i)
      for (int j = t + 1; j <= n; ++j)
        if (w[i] < w[j] && w[j] < w[t]) {
          p = t;
          break;
        }
  require(p > 0, "dominant permutation " + to_compact_string(w) + " has no maximal pivot box");

  int q = 0;
  for (int j = p + 1; j <= n; ++j) {
    if (w[j] >= w[p]) continue;
    for (int i = 1; i < p; ++i)
      if (w[i] < w[j]) {
        q = j;
        break;
      }
  }
  ensure(q > 0, "no index q for p = " + std::to_string(p));

  // q also indexes the largest value after position p below w_p.
  int largest = 0;
  for (int j = p + 1; j <= n; ++j)
    if (w[j] < w[p] && (largest == 0 || w[j] > w[largest])) largest = j;
  ensure(largest == q, "q is not the position of the largest smaller value after p");

  std::optional<Box> best;
  for (const Box& box : rothe_diagram(w))
    if (!pivots(w, box).empty()) best = box;  // rothe_diagram is row-major
  ensure(best && *best == (Box{p, w[q]}), "(p, w_q) is not the largest box with a pivot");
  return {p, q};
}

std::vector<BumplessPipedream> enumerate_all(const Permutation& w) {
  std::set<BumplessPipedream> seen;
  std::deque<BumplessPipedream> frontier;
  frontier.push_back(rothe(w));
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    const BumplessPipedream p = std::move(frontier.front());
    frontier.pop_front();
    const auto empties = p.boxes(Tile::Empty);
    for (const Box& elbow : p.boxes(Tile::SEElbow))
      for (const Box& target : empties) {
        if (target.row <= elbow.row || target.col <= elbow.col) continue;
        auto next = try_droop(p, elbow, target);
        if (next.pipedream && seen.insert(*next.pipedream).second) frontier.push_back(std::move(*next.pipedream));
      }
  }
  return {seen.begin(), seen.end()};
}

SparsePoly weight(const BumplessPipedream& p) {
  SparsePoly out(1);
  for (const Box& box : p.boxes(Tile::Empty)) out *= SparsePoly::x(box.row) - SparsePoly::y(box.col);
  return out;
}

std::optional<Partition> is_eg(const BumplessPipedream& p) {
  std::vector<int> rows;
  for (int i = 1; i <= p.size(); ++i) {
    int count = 0;
    for (int j = 1; j <= p.size(); ++j) count += p.at(i, j) == Tile::Empty;
    int prefix = 0;
    while (prefix < p.size() && p.at(i, prefix + 1) == Tile::Empty) ++prefix;
    if (prefix != count) return std::nullopt;
    if (!rows.empty() && count > rows.back()) return std::nullopt;
    rows.push_back(count);
  }
  return Partition::from_unsorted(rows);
}

std::string render(const BumplessPipedream& p, bool unicode, std::string_view separator) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += separator;
    for (int j = 1; j <= p.size(); ++j) out += unicode ? to_unicode(p.at(i, j)) : std::string(1, to_char(p.at(i, j)));
  }
  return out;
}

BumplessPipedream parse_pipedream(std::string_view input) {
  static const std::vector<std::pair<std::string, Tile>> symbols{
      {".", Tile::Empty},       {"j", Tile::NWElbow},       {"r", Tile::SEElbow},
      {"-", Tile::Horizontal},  {"|", Tile::Vertical},      {"+", Tile::Crossing},
      {"┘", Tile::NWElbow},     {"┌", Tile::SEElbow},       {"─", Tile::Horizontal},
      {"│", Tile::Vertical},    {"┼", Tile::Crossing},      {"·", Tile::Empty}};
  Grid grid;
  for (auto line : text::split(input, "/\n")) {
    std::vector<Tile> row;
    std::size_t k = 0;
    while (k < line.size()) {
      bool matched = false;
      for (const auto& [symbol, tile] : symbols)
        if (line.substr(k, symbol.size()) == symbol) {
          row.push_back(tile);
          k += symbol.size();
          matched = true;
          break;
        }
      require(matched, "unknown pipedream symbol in '" + std::string(line) + "'");
    }
    grid.push_back(std::move(row));
  }
  return BumplessPipedream(std::move(grid));
}

std::ostream& operator<<(std::ostream& os, const BumplessPipedream& p) { return os << render(p, false, "/"); }

}  // namespace bpd
