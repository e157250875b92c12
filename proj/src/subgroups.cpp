#include "nilp2/subgroups.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace nilp2 {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::subset_of(const ElementSet& other) const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] & other.words_[k];
  return out;
}

std::vector<ElementId> ElementSet::members() const {
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < universe_; ++x) {
    if (contains(static_cast<ElementId>(x))) out.push_back(static_cast<ElementId>(x));
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
  return h;
}

std::optional<std::uint64_t> bounded_order(const Presentation& g, std::uint64_t cap) {
  std::uint64_t order = 1;
  for (Index k = 0; k < g.order_exponent(); ++k) {
    order *= static_cast<std::uint64_t>(g.p());
    if (order > cap) return std::nullopt;
  }
  return order;
}

ElementTable::ElementTable(const Presentation& g, std::uint64_t cap) : group_(g) {
  const auto order = bounded_order(g, cap);
  if (!order) {
    throw Error(ErrorCode::OrderExceedsCap,
                "group of order " + std::to_string(g.p()) + "^" +
                    std::to_string(g.order_exponent()) + " exceeds the enumeration cap " +
                    std::to_string(cap));
  }
  const auto size = static_cast<std::size_t>(*order);
  std::vector<Element> elems;
  elems.reserve(size);
  for (std::size_t id = 0; id < size; ++id) elems.push_back(element(static_cast<ElementId>(id)));
  table_.resize(size * size);
  inverse_.resize(size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) table_[a * size + b] = id_of(elems[a] * elems[b]);
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (table_[a * size + b] == 0) {
        inverse_[a] = static_cast<ElementId>(b);
        break;
      }
    }
  }
}

ElementId ElementTable::commutator(ElementId a, ElementId b) const noexcept {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

Element ElementTable::element(ElementId id) const {
  const Index n = group_.n();
  const Index m = group_.m();
  const auto p = static_cast<std::uint64_t>(group_.p());
  Vector v(n), w(m);
  std::uint64_t t = id;
  for (Index k = 0; k < n; ++k, t /= p) v(k) = static_cast<Residue>(t % p);
  for (Index k = 0; k < m; ++k, t /= p) w(k) = static_cast<Residue>(t % p);
  return group_.element(v, w);
}

ElementId ElementTable::id_of(const Element& x) const {
  const auto p = static_cast<std::uint64_t>(group_.p());
  std::uint64_t id = 0;
  for (Index k = group_.m() - 1; k >= 0; --k) id = id * p + static_cast<std::uint64_t>(x.w()(k));
  for (Index k = group_.n() - 1; k >= 0; --k) id = id * p + static_cast<std::uint64_t>(x.v()(k));
  return static_cast<ElementId>(id);
}

Subgroup generated_subgroup(const ElementTable& t, std::vector<ElementId> generators) {
  ElementSet set(t.size());
  set.insert(t.identity());
  std::deque<ElementId> queue{t.identity()};
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (ElementId g : generators) {
      const ElementId y = t.multiply(x, g);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup{std::move(generators), std::move(set)};
}

Subgroup derived_subgroup(const ElementTable& t, const Subgroup& s) {
  // Class two: [S, S] is generated by commutators of generators.
  std::vector<ElementId> gens;
  for (std::size_t a = 0; a < s.generators.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const ElementId c = t.commutator(s.generators[a], s.generators[b]);
      if (c != t.identity()) gens.push_back(c);
    }
  }
  return generated_subgroup(t, std::move(gens));
}

Subgroup centralizer(const ElementTable& t, const Subgroup& s) {
  ElementSet set(t.size());
  std::vector<ElementId> members;
  for (std::size_t x = 0; x < t.size(); ++x) {
    const auto id = static_cast<ElementId>(x);
    bool ok = true;
    for (ElementId g : s.generators) {
      if (!t.commute(id, g)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      set.insert(id);
      members.push_back(id);
    }
  }
  return Subgroup{std::move(members), std::move(set)};
}

std::vector<Subgroup> enumerate_subgroups(const ElementTable& t) {
  struct Hash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
  };
  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, Hash> seen;
  found.push_back(generated_subgroup(t, {}));
  seen.emplace(found.front().elements, 0);

  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    // <S, g> depends only on the coset gS, so one representative per coset.
    ElementSet covered = found[idx].elements;
    const auto members = found[idx].elements.members();
    for (std::size_t x = 0; x < t.size(); ++x) {
      const auto g = static_cast<ElementId>(x);
      if (covered.contains(g)) continue;
      for (ElementId s : members) covered.insert(t.multiply(g, s));
      auto gens = found[idx].generators;
      gens.push_back(g);
      Subgroup next = generated_subgroup(t, std::move(gens));
      if (seen.find(next.elements) == seen.end()) {
        seen.emplace(next.elements, found.size());
        found.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return found;
}

std::vector<Subgroup> enumerate_subgroups(const Presentation& g, std::uint64_t cap) {
  return enumerate_subgroups(ElementTable(g, cap));
}

}  // namespace nilp2
