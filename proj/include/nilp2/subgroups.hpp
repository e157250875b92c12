#ifndef NILP2_SUBGROUPS_HPP
#define NILP2_SUBGROUPS_HPP

// Brute-force machinery for desk-sized groups: a full multiplication table
// and the complete subgroup list.

#include <cstdint>
#include <functional>
#include <vector>

#include "nilp2/group.hpp"

namespace nilp2 {

using ElementId = std::uint32_t;

// Fixed-size bitset over element ids.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(ElementId x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(ElementId x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::size_t count() const noexcept;
  bool subset_of(const ElementSet& other) const noexcept;
  ElementSet operator&(const ElementSet& other) const;
  std::vector<ElementId> members() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.words_ < b.words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Every element of G indexed by its coordinates (v, w) read as a base-p
// number, v_1 least significant.
class ElementTable {
 public:
  ElementTable(const Presentation& g, std::uint64_t cap = kDefaultMaxOrder);

  const Presentation& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return inverse_.size(); }
  ElementId identity() const noexcept { return 0; }
  ElementId multiply(ElementId a, ElementId b) const noexcept { return table_[a * size() + b]; }
  ElementId inverse(ElementId a) const noexcept { return inverse_[a]; }
  ElementId commutator(ElementId a, ElementId b) const noexcept;
  bool commute(ElementId a, ElementId b) const noexcept { return multiply(a, b) == multiply(b, a); }

  Element element(ElementId id) const;
  ElementId id_of(const Element& x) const;

 private:
  Presentation group_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
};

struct Subgroup {
  std::vector<ElementId> generators;
  ElementSet elements;
  std::size_t order() const noexcept { return elements.count(); }
};

// Closure of `generators` under multiplication.
Subgroup generated_subgroup(const ElementTable& t, std::vector<ElementId> generators);
// [S, S] as a subgroup.
Subgroup derived_subgroup(const ElementTable& t, const Subgroup& s);
// C_G(S).
Subgroup centralizer(const ElementTable& t, const Subgroup& s);

// All subgroups of G sorted by (order, element set). Throws OrderExceedsCap
// when |G| > cap.
std::vector<Subgroup> enumerate_subgroups(const ElementTable& t);
std::vector<Subgroup> enumerate_subgroups(const Presentation& g, std::uint64_t cap = kDefaultMaxOrder);

// p^(n+m), or nullopt if it exceeds `cap`.
std::optional<std::uint64_t> bounded_order(const Presentation& g, std::uint64_t cap);

}  // namespace nilp2

#endif  // NILP2_SUBGROUPS_HPP
