#ifndef SCHURKIT_TABLEAUX_HPP
#define SCHURKIT_TABLEAUX_HPP

#include <utility>
#include <vector>

#include "schurkit/perm.hpp"
#include "schurkit/subset.hpp"

namespace schurkit {

// Skew shape lambda/mu in English notation; straight shapes have empty mu.
class SkewShape {
 public:
  explicit SkewShape(Partition outer, Partition inner = Partition());

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int cell_count() const { return outer_.sum() - inner_.sum(); }
  int rows() const { return outer_.length(); }
  // True iff the cell in (1-based) row r, column c belongs to the shape.
  bool has_cell(int r, int c) const;

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

// A standard Young tableau of (skew) shape: cells filled bijectively with 1..n,
// rows increasing left to right and columns top to bottom.
class Tableau {
 public:
  // rows[r][j] is the value in row r+1, column inner_{r+1}+1+j.
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  int size() const { return shape_.cell_count(); }
  int at(int r, int c) const;  // 1-based cell coordinates
  // 1-based row containing the given value.
  int row_of(int value) const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> value_row_;  // value -> 1-based row
};

int syt_cell_bound();
void set_syt_cell_bound(int n);

// All standard Young tableaux of the given shape, in a fixed deterministic order.
std::vector<Tableau> enumerate_syt(const SkewShape& shape);
long long count_syt(const SkewShape& shape);

// Des(T) = { i : i+1 lies in a lower row than i }.
SubsetOfRange syt_descent(const Tableau& t);

// Robinson-Schensted row insertion; returns (P, Q).
std::pair<Tableau, Tableau> rsk(const Permutation& pi);
Permutation inverse_rsk(const Tableau& p, const Tableau& q);

// True iff the cells are edge-connected and contain no 2x2 block.
bool is_connected_ribbon(const SkewShape& shape);

// The unique hook-shaped SYT of size universe+1 whose descent set is J.
Tableau hook_with_descent(const SubsetOfRange& j);

}  // namespace schurkit

#endif
