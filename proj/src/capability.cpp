#include "nilp2/capability.hpp"

#include <algorithm>
#include <numeric>

namespace nilp2 {

std::string to_string(CapabilityStatus s) {
  switch (s) {
    case CapabilityStatus::capable: return "capable";
    case CapabilityStatus::not_capable: return "not_capable";
    case CapabilityStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::string to_string(CapabilityMethod m) {
  switch (m) {
    case CapabilityMethod::baer_abelian: return "baer_abelian";
    case CapabilityMethod::ellis_basis: return "ellis_basis";
    case CapabilityMethod::epicentre_trivial: return "epicentre_trivial";
    case CapabilityMethod::epicentre_nontrivial: return "epicentre_nontrivial";
    case CapabilityMethod::central_product: return "central_product";
    case CapabilityMethod::out_of_scope: return "out_of_scope";
  }
  return "out_of_scope";
}

std::string to_string(RpStatus s) {
  switch (s) {
    case RpStatus::member: return "member";
    case RpStatus::non_member: return "non_member";
    case RpStatus::member_by_construction: return "member_by_construction";
    case RpStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

Vector jacobi_element(const Presentation& g, Index i, Index j, Index k) {
  const Index n = g.n();
  Vector out = zero_vector(g.m() * n);
  auto add = [&](const Vector& comm, Index slot) {
    for (Index a = 0; a < g.m(); ++a) out(a * n + slot) += comm(a);
  };
  add(g.kappa(i, j), k);
  add(g.kappa(j, k), i);
  add(g.kappa(k, i), j);
  return reduce_mod(out, g.p());
}

JacobiSubspace jacobi_subspace(const Presentation& g) {
  JacobiSubspace js{Subspace(g.p(), g.m() * g.n()), {}, {}};
  for (Index i = 0; i < g.n(); ++i) {
    for (Index j = i + 1; j < g.n(); ++j) {
      for (Index k = j + 1; k < g.n(); ++k) {
        js.triples.push_back({i, j, k});
        js.generators.push_back(jacobi_element(g, i, j, k));
      }
    }
  }
  js.span = Subspace::span(g.p(), g.m() * g.n(), js.generators);
  return js;
}

Subspace epicentre_in_derived(const Presentation& g) {
  if (!center(g).equals_derived) {
    throw Error(ErrorCode::PreconditionCenterNotDerived,
                "epicentre criterion applies only when Z(G) = [G,G]");
  }
  const Index n = g.n();
  const Index m = g.m();
  if (m == 0) return Subspace(g.p(), 0);
  const auto js = jacobi_subspace(g);
  const QuotientMap mod_s(m * n, js.span);
  const Index t = mod_s.target_dim();
  // Row a: the classes of e_a (x) e_1, ..., e_a (x) e_n modulo S.
  Matrix slices(m, n * t);
  for (Index a = 0; a < m; ++a) {
    for (Index i = 0; i < n; ++i) {
      slices.block(a, i * t, 1, t) = mod_s.matrix().row(a * n + i);
    }
  }
  return Subspace::span(left_null_space(FpMatrix(g.p(), slices)));
}

EllisResult ellis_basis_criterion(const Presentation& g) {
  if (g.is_abelian()) return EllisResult::inconclusive;
  std::vector<Vector> rows;
  for (auto [j, i] : g.nonzero_pairs()) rows.push_back(g.constant(j, i));
  const auto span = Subspace::span(g.p(), g.m(), rows);
  return static_cast<std::size_t>(span.dim()) == rows.size() ? EllisResult::capable
                                                             : EllisResult::inconclusive;
}

CapabilityVerdict capability_verdict(const Presentation& g, const CapabilityOptions& opts) {
  CapabilityVerdict out;
  if (g.is_abelian()) {
    // Elementary abelian of rank n: capable iff n > 1, and the trivial group
    // is the central quotient of any abelian group.
    out.method = CapabilityMethod::baer_abelian;
    const bool capable = g.n() != 1;
    out.status = capable ? CapabilityStatus::capable : CapabilityStatus::not_capable;
    out.evidence = "elementary abelian of rank " + std::to_string(g.n());
    return out;
  }
  if (center(g).equals_derived) {
    Subspace z = epicentre_in_derived(g);
    out.status = z.is_zero() ? CapabilityStatus::capable : CapabilityStatus::not_capable;
    out.method = z.is_zero() ? CapabilityMethod::epicentre_trivial : CapabilityMethod::epicentre_nontrivial;
    out.evidence = "epicentre dimension " + std::to_string(z.dim());
    out.epicentre = std::move(z);
    return out;
  }
  if (ellis_basis_criterion(g) == EllisResult::capable) {
    out.status = CapabilityStatus::capable;
    out.method = CapabilityMethod::ellis_basis;
    out.evidence = "nonzero commutators of the generators form a basis of [G,G]";
    return out;
  }
  const auto search = central_decomposition_search(g, opts.max_order, true);
  if (search.status == SearchStatus::found) {
    out.status = CapabilityStatus::not_capable;
    out.method = CapabilityMethod::central_product;
    out.evidence = "central decomposition with |C| = " + std::to_string(search.witness->c.order()) +
                   ", |D| = " + std::to_string(search.witness->d.order()) +
                   " and [C,C] cap [D,D] nontrivial";
    out.decomposition = search.witness;
    return out;
  }
  out.status = CapabilityStatus::undetermined;
  out.method = CapabilityMethod::out_of_scope;
  out.evidence = search.status == SearchStatus::order_exceeds_cap
                     ? "Z(G) != [G,G] and the group exceeds the search cap"
                     : "Z(G) != [G,G] and no admissible central decomposition exists";
  return out;
}

DecompositionSearch central_decomposition_search(const ElementTable& t,
                                                 const std::vector<Subgroup>& subgroups,
                                                 bool require_derived_overlap) {
  DecompositionSearch out;
  out.subgroup_count = subgroups.size();
  const std::size_t order = t.size();
  std::vector<std::size_t> by_order(subgroups.size());
  std::iota(by_order.begin(), by_order.end(), std::size_t{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](std::size_t a, std::size_t b) {
    return subgroups[a].order() > subgroups[b].order();
  });

  for (std::size_t ci : by_order) {
    const Subgroup& c = subgroups[ci];
    if (c.order() == order || c.order() == 1) continue;
    const ElementSet cent = centralizer(t, c).elements;
    std::optional<Subgroup> derived_c;
    for (std::size_t di : by_order) {
      const Subgroup& d = subgroups[di];
      // Each unordered pair once: |C| >= |D|, ties broken by position.
      if (d.order() > c.order() || (d.order() == c.order() && di <= ci)) continue;
      if (d.order() == 1 || c.order() * d.order() < order) continue;
      if (!d.elements.subset_of(cent)) continue;
      const std::size_t meet = (c.elements & d.elements).count();
      if (c.order() * d.order() != order * meet) continue;
      if (c.elements.subset_of(d.elements) || d.elements.subset_of(c.elements)) continue;
      bool overlap = false;
      if (!derived_c) derived_c = derived_subgroup(t, c);
      overlap = (derived_c->elements & derived_subgroup(t, d).elements).count() > 1;
      if (require_derived_overlap && !overlap) continue;
      out.status = SearchStatus::found;
      out.witness = CentralDecomposition{c, d, overlap};
      return out;
    }
  }
  out.status = SearchStatus::none_found;
  return out;
}

DecompositionSearch central_decomposition_search(const Presentation& g, std::uint64_t cap,
                                                 bool require_derived_overlap) {
  if (!bounded_order(g, cap)) {
    DecompositionSearch out;
    out.status = SearchStatus::order_exceeds_cap;
    return out;
  }
  const ElementTable t(g, cap);
  return central_decomposition_search(t, enumerate_subgroups(t), require_derived_overlap);
}

bool witness_is_valid(const ElementTable& t, const CentralDecomposition& w) {
  const auto cs = w.c.elements.members();
  const auto ds = w.d.elements.members();
  ElementSet product(t.size());
  for (ElementId c : cs) {
    for (ElementId d : ds) {
      if (!t.commute(c, d)) return false;
      product.insert(t.multiply(c, d));
    }
  }
  if (product.count() != t.size()) return false;
  return !w.c.elements.subset_of(w.d.elements) && !w.d.elements.subset_of(w.c.elements);
}

RpMembership rp_membership(const Presentation& g, const CapabilityOptions& opts) {
  RpMembership out;
  out.center_equals_derived = center(g).equals_derived;
  out.nonzero_commutators = g.nonzero_pairs().size();
  out.relation_found = static_cast<Index>(out.nonzero_commutators) > g.m();

  if (!out.center_equals_derived) {
    out.status = RpStatus::non_member;
    out.reasons.push_back("Z(G) != [G,G]");
    return out;
  }
  out.reasons.push_back("Z(G) = [G,G]");
  const std::string counts = std::to_string(out.nonzero_commutators) + " nonzero commutators, m = " +
                             std::to_string(g.m()) + " (standard generator transversal)";
  if (!out.relation_found) {
    out.status = RpStatus::non_member;
    out.reasons.push_back("no relation among commutators: " + counts);
    return out;
  }
  out.reasons.push_back("relation among commutators: " + counts);

  if (g.origin() == Origin::amalgam_of_nontrivial) {
    out.status = RpStatus::member_by_construction;
    out.reasons.push_back("amalgamated coproduct of nontrivial factors is centrally indecomposable");
    return out;
  }
  const auto search = central_decomposition_search(g, opts.max_order, false);
  switch (search.status) {
    case SearchStatus::found:
      out.status = RpStatus::non_member;
      out.reasons.push_back("nontrivial central decomposition with |C| = " +
                            std::to_string(search.witness->c.order()) + ", |D| = " +
                            std::to_string(search.witness->d.order()));
      break;
    case SearchStatus::none_found:
      out.status = RpStatus::member;
      out.reasons.push_back("exhaustive search over " + std::to_string(search.subgroup_count) +
                            " subgroups found no nontrivial central decomposition");
      break;
    case SearchStatus::order_exceeds_cap:
      out.status = RpStatus::undetermined;
      out.reasons.push_back("central indecomposability not checked: order exceeds cap");
      break;
  }
  return out;
}

CrossCheckReport epicentre_cross_check(const Presentation& g, Index max_m) {
  if (!center(g).equals_derived) {
    throw Error(ErrorCode::PreconditionCenterNotDerived, "cross-check requires Z(G) = [G,G]");
  }
  if (g.m() > max_m) {
    throw Error(ErrorCode::OrderExceedsCap, "cross-check enumerates subspaces of F_p^m only for m <= " +
                                                std::to_string(max_m));
  }
  CrossCheckReport out{.passed = false, .epicentre = epicentre_in_derived(g), .violations = {}};
  const CapabilityOptions direct_only{0};
  for (const Subspace& n : enumerate_subspaces(g.p(), g.m())) {
    ++out.subspaces_examined;
    const auto q = quotient_by_central(g, n).group;
    const auto verdict = capability_verdict(q, direct_only);
    const bool is_top = n == out.epicentre;
    if (verdict.status == CapabilityStatus::undetermined) continue;
    ++out.checkable_quotients;
    const bool capable = verdict.status == CapabilityStatus::capable;
    if (capable) {
      ++out.capable_quotients;
      if (!n.contains(out.epicentre)) {
        out.violations.push_back("G/N capable but N = <" + format_basis(n) + "> misses Z*");
      }
    }
    if (is_top) {
      out.top_quotient_checkable = true;
      out.top_quotient_capable = capable;
      if (!capable) out.violations.push_back("G/Z* is not capable");
    }
  }
  out.passed = out.violations.empty();
  return out;
}

}  // namespace nilp2
