#ifndef SCHURKIT_SUBSET_HPP
#define SCHURKIT_SUBSET_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace schurkit {

// A subset of [m] = {1,...,m} that remembers its universe size m.
// Elements are 1-based; bit i-1 of bits() stands for the element i.
class SubsetOfRange {
 public:
  SubsetOfRange() = default;
  SubsetOfRange(int universe_max, std::uint64_t bits);
  SubsetOfRange(int universe_max, std::initializer_list<int> members);

  static SubsetOfRange empty(int universe_max) { return {universe_max, std::uint64_t{0}}; }
  static SubsetOfRange full(int universe_max);
  static SubsetOfRange from_members(int universe_max, const std::vector<int>& members);

  int universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const { return i >= 1 && i <= universe_ && (bits_ >> (i - 1)) & 1; }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const;
  int size() const;
  std::vector<int> members() const;

  bool subset_of(const SubsetOfRange& other) const;
  SubsetOfRange with(int i) const;
  SubsetOfRange without(int i) const;

  friend auto operator<=>(const SubsetOfRange&, const SubsetOfRange&) = default;

 private:
  int universe_ = 0;
  std::uint64_t bits_ = 0;
};

// Cyclic shift on subsets of [n]: every i maps to i+1, with n wrapping to 1.
SubsetOfRange shift_set(const SubsetOfRange& s);

}  // namespace schurkit

#endif
