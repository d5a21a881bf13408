#include "schurkit/subset.hpp"

#include <bit>
#include <stdexcept>

namespace schurkit {

namespace {
std::uint64_t universe_mask(int m) {
  return m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
}
}  // namespace

SubsetOfRange::SubsetOfRange(int universe_max, std::uint64_t bits)
    : universe_(universe_max), bits_(bits) {
  if (universe_max < 0 || universe_max > 62)
    throw std::invalid_argument("SubsetOfRange: universe size out of range");
  if (bits & ~universe_mask(universe_max))
    throw std::invalid_argument("SubsetOfRange: member outside universe");
}

SubsetOfRange::SubsetOfRange(int universe_max, std::initializer_list<int> members)
    : SubsetOfRange(universe_max, std::uint64_t{0}) {
  for (int i : members) {
    if (i < 1 || i > universe_max)
      throw std::invalid_argument("SubsetOfRange: member outside universe");
    bits_ |= std::uint64_t{1} << (i - 1);
  }
}

SubsetOfRange SubsetOfRange::full(int universe_max) {
  return {universe_max, universe_mask(universe_max)};
}

SubsetOfRange SubsetOfRange::from_members(int universe_max, const std::vector<int>& members) {
  SubsetOfRange s(universe_max, std::uint64_t{0});
  for (int i : members) {
    if (i < 1 || i > universe_max)
      throw std::invalid_argument("SubsetOfRange: member outside universe");
    s.bits_ |= std::uint64_t{1} << (i - 1);
  }
  return s;
}

bool SubsetOfRange::is_full() const { return bits_ == universe_mask(universe_); }

int SubsetOfRange::size() const { return std::popcount(bits_); }

std::vector<int> SubsetOfRange::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i = 1; i <= universe_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool SubsetOfRange::subset_of(const SubsetOfRange& other) const {
  return universe_ == other.universe_ && (bits_ & ~other.bits_) == 0;
}

SubsetOfRange SubsetOfRange::with(int i) const {
  SubsetOfRange s = *this;
  if (i < 1 || i > universe_) throw std::invalid_argument("SubsetOfRange::with: out of universe");
  s.bits_ |= std::uint64_t{1} << (i - 1);
  return s;
}

SubsetOfRange SubsetOfRange::without(int i) const {
  SubsetOfRange s = *this;
  if (i >= 1 && i <= universe_) s.bits_ &= ~(std::uint64_t{1} << (i - 1));
  return s;
}

SubsetOfRange shift_set(const SubsetOfRange& s) {
  const int m = s.universe();
  if (m == 0) return s;
  const std::uint64_t bits = s.bits();
  const std::uint64_t shifted = ((bits << 1) | (bits >> (m - 1))) & ((std::uint64_t{1} << m) - 1);
  return {m, shifted};
}

}  // namespace schurkit
