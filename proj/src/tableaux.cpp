#include "schurkit/tableaux.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace schurkit {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("SkewShape: inner shape not contained in outer");
  if (cell_count() < 1) throw std::invalid_argument("SkewShape: shape has no cells");
}

bool SkewShape::has_cell(int r, int c) const {
  if (r < 1 || r > rows() || c < 1) return false;
  return c > inner_.part(r) && c <= outer_.part(r);
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int n = shape_.cell_count();
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("Tableau: row count mismatch");
  value_row_.assign(n + 1, 0);
  for (int r = 1; r <= shape_.rows(); ++r) {
    const auto& row = rows_[r - 1];
    const int expected = shape_.outer().part(r) - shape_.inner().part(r);
    if (static_cast<int>(row.size()) != expected)
      throw std::invalid_argument("Tableau: row length mismatch");
    for (int v : row) {
      if (v < 1 || v > n || value_row_[v] != 0)
        throw std::invalid_argument("Tableau: entries must fill 1..n bijectively");
      value_row_[v] = r;
    }
  }
  // Standardness: rows increase left to right, columns top to bottom.
  for (int r = 1; r <= shape_.rows(); ++r)
    for (int c = shape_.inner().part(r) + 2; c <= shape_.outer().part(r); ++c)
      if (at(r, c - 1) >= at(r, c))
        throw std::invalid_argument("Tableau: row not increasing");
  for (int r = 2; r <= shape_.rows(); ++r)
    for (int c = shape_.inner().part(r) + 1; c <= shape_.outer().part(r); ++c)
      if (shape_.has_cell(r - 1, c) && at(r - 1, c) >= at(r, c))
        throw std::invalid_argument("Tableau: column not increasing");
}

int Tableau::at(int r, int c) const {
  if (!shape_.has_cell(r, c)) throw std::invalid_argument("Tableau::at: cell not in shape");
  return rows_[r - 1][c - shape_.inner().part(r) - 1];
}

int Tableau::row_of(int value) const {
  if (value < 1 || value > size()) throw std::invalid_argument("Tableau::row_of: bad value");
  return value_row_[value];
}

namespace {
std::atomic<int> g_syt_bound{12};
}

int syt_cell_bound() { return g_syt_bound.load(); }

void set_syt_cell_bound(int n) {
  if (n < 1) throw std::invalid_argument("set_syt_cell_bound: bound must be positive");
  g_syt_bound.store(n);
}

namespace {

// Cells are filled with 1..n in increasing order; a cell may receive the next
// value once its left and upper neighbours (within the shape) are filled.
void enumerate_syt_rec(const SkewShape& shape, std::vector<std::vector<int>>& rows,
                       std::vector<int>& filled_in_row, int next,
                       std::vector<Tableau>& out) {
  const int n = shape.cell_count();
  if (next > n) {
    out.emplace_back(shape, rows);
    return;
  }
  for (int r = 1; r <= shape.rows(); ++r) {
    const int inner = shape.inner().part(r);
    const int c = inner + 1 + filled_in_row[r - 1];
    if (c > shape.outer().part(r)) continue;
    if (r > 1 && shape.has_cell(r - 1, c)) {
      const int filled_above = shape.inner().part(r - 1) + filled_in_row[r - 2];
      if (filled_above < c) continue;  // upper neighbour not yet filled
    }
    rows[r - 1].push_back(next);
    ++filled_in_row[r - 1];
    enumerate_syt_rec(shape, rows, filled_in_row, next + 1, out);
    --filled_in_row[r - 1];
    rows[r - 1].pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const SkewShape& shape) {
  if (shape.cell_count() > syt_cell_bound())
    throw std::invalid_argument("enumerate_syt: cell count exceeds the bound");
  std::vector<std::vector<int>> rows(shape.rows());
  std::vector<int> filled(shape.rows(), 0);
  std::vector<Tableau> out;
  enumerate_syt_rec(shape, rows, filled, 1, out);
  return out;
}

long long count_syt(const SkewShape& shape) {
  return static_cast<long long>(enumerate_syt(shape).size());
}

SubsetOfRange syt_descent(const Tableau& t) {
  const int n = t.size();
  SubsetOfRange d = SubsetOfRange::empty(n - 1);
  for (int i = 1; i < n; ++i)
    if (t.row_of(i + 1) > t.row_of(i)) d = d.with(i);
  return d;
}

namespace {

Tableau grid_to_tableau(const std::vector<std::vector<int>>& grid) {
  std::vector<int> parts;
  for (const auto& row : grid)
    if (!row.empty()) parts.push_back(static_cast<int>(row.size()));
  std::vector<std::vector<int>> rows(grid.begin(), grid.begin() + parts.size());
  return Tableau(SkewShape(Partition(parts)), std::move(rows));
}

}  // namespace

std::pair<Tableau, Tableau> rsk(const Permutation& pi) {
  const int n = pi.size();
  std::vector<std::vector<int>> p, q;
  for (int i = 1; i <= n; ++i) {
    int v = pi(i);
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({v});
        q.push_back({i});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), v);
      if (it == p[r].end()) {
        p[r].push_back(v);
        q[r].push_back(i);
        break;
      }
      std::swap(*it, v);  // bump
      ++r;
    }
  }
  return {grid_to_tableau(p), grid_to_tableau(q)};
}

Permutation inverse_rsk(const Tableau& p, const Tableau& q) {
  if (p.shape() != q.shape()) throw std::invalid_argument("inverse_rsk: shape mismatch");
  if (!p.shape().inner().empty())
    throw std::invalid_argument("inverse_rsk: only straight shapes");
  const int n = p.size();
  std::vector<std::vector<int>> grid = p.rows();
  // Cell of value k in q, found once up front.
  std::vector<std::pair<int, int>> cell(n + 1);
  for (int r = 1; r <= q.shape().rows(); ++r)
    for (int c = 1; c <= q.shape().outer().part(r); ++c) cell[q.at(r, c)] = {r, c};
  std::vector<int> word(n);
  for (int k = n; k >= 1; --k) {
    auto [r, c] = cell[k];
    int v = grid[r - 1][c - 1];
    grid[r - 1].pop_back();
    for (int row = r - 2; row >= 0; --row) {
      // Reverse bump: displace the largest entry smaller than v.
      auto it = std::lower_bound(grid[row].begin(), grid[row].end(), v);
      --it;
      std::swap(*it, v);
    }
    word[k - 1] = v;
  }
  return Permutation(std::move(word));
}

bool is_connected_ribbon(const SkewShape& shape) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= shape.rows(); ++r)
    for (int c = shape.inner().part(r) + 1; c <= shape.outer().part(r); ++c)
      cells.emplace_back(r, c);
  for (auto [r, c] : cells)
    if (shape.has_cell(r, c + 1) && shape.has_cell(r + 1, c) && shape.has_cell(r + 1, c + 1))
      return false;  // contains a 2x2 block
  // Edge connectivity over the cells.
  std::vector<bool> seen(cells.size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  auto index_of = [&](int r, int c) -> int {
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i] == std::make_pair(r, c)) return static_cast<int>(i);
    return -1;
  };
  std::size_t visited = 1;
  while (!stack.empty()) {
    auto [r, c] = cells[stack.back()];
    stack.pop_back();
    const int drs[] = {1, -1, 0, 0};
    const int dcs[] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      int idx = index_of(r + drs[k], c + dcs[k]);
      if (idx >= 0 && !seen[idx]) {
        seen[idx] = true;
        ++visited;
        stack.push_back(idx);
      }
    }
  }
  return visited == cells.size();
}

Tableau hook_with_descent(const SubsetOfRange& j) {
  const int n = j.universe() + 1;
  const int k = j.size();
  std::vector<int> column;  // below the corner
  for (int i : j.members()) column.push_back(i + 1);
  std::vector<int> row = {1};
  for (int v = 2; v <= n; ++v)
    if (!j.contains(v - 1)) row.push_back(v);
  std::vector<int> parts = {n - k};
  std::vector<std::vector<int>> rows = {row};
  for (int v : column) {
    parts.push_back(1);
    rows.push_back({v});
  }
  return Tableau(SkewShape(Partition(parts)), std::move(rows));
}

}  // namespace schurkit
