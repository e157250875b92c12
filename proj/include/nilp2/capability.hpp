#ifndef NILP2_CAPABILITY_HPP
#define NILP2_CAPABILITY_HPP

// Epicentre and capability of class-two exponent-p groups.
//
// The tensor space [G,G] (x) G^ab = F_p^m (x) F_p^n is flattened with the
// commutator index major: coordinate (a, k) sits at a * n + k.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilp2/group.hpp"
#include "nilp2/subgroups.hpp"

namespace nilp2 {

struct JacobiSubspace {
  struct Triple {
    Index i, j, k;
  };
  Subspace span;
  std::vector<Triple> triples;  // i < j < k, one per generator
  std::vector<Vector> generators;
};

// J(i,j,k) = kappa(i,j) (x) e_k + kappa(j,k) (x) e_i + kappa(k,i) (x) e_j.
Vector jacobi_element(const Presentation& g, Index i, Index j, Index k);
JacobiSubspace jacobi_subspace(const Presentation& g);

// {g in F_p^m : g (x) e_i in S for every i}. This is Z*(G) when
// Z(G) = [G,G]; otherwise throws PreconditionCenterNotDerived.
Subspace epicentre_in_derived(const Presentation& g);

enum class CapabilityStatus { capable, not_capable, undetermined };

enum class CapabilityMethod {
  baer_abelian,
  ellis_basis,
  epicentre_trivial,
  epicentre_nontrivial,
  central_product,
  out_of_scope,
};

std::string to_string(CapabilityStatus s);
std::string to_string(CapabilityMethod m);

struct CentralDecomposition {
  Subgroup c;
  Subgroup d;
  bool derived_overlap = false;  // [C,C] cap [D,D] != e
};

struct CapabilityVerdict {
  CapabilityStatus status = CapabilityStatus::undetermined;
  CapabilityMethod method = CapabilityMethod::out_of_scope;
  std::optional<Subspace> epicentre;               // epicentre methods
  std::optional<CentralDecomposition> decomposition;  // central_product
  std::string evidence;                            // human-readable summary
};

struct CapabilityOptions {
  std::uint64_t max_order = kDefaultMaxOrder;  // cap for brute-force search
};

enum class EllisResult { capable, inconclusive };

// Nonzero c(j,i) linearly independent (hence a basis of [G,G]) => capable.
// Inconclusive for abelian G.
EllisResult ellis_basis_criterion(const Presentation& g);

CapabilityVerdict capability_verdict(const Presentation& g, const CapabilityOptions& opts = {});

enum class SearchStatus { found, none_found, order_exceeds_cap };

struct DecompositionSearch {
  SearchStatus status = SearchStatus::none_found;
  std::optional<CentralDecomposition> witness;
  std::size_t subgroup_count = 0;
};

// Nontrivial central decomposition G = CD, [C,D] = e, C not in D, D not in
// C. With `require_derived_overlap` only witnesses with [C,C] cap [D,D] != e
// are accepted.
DecompositionSearch central_decomposition_search(const Presentation& g,
                                                 std::uint64_t cap = kDefaultMaxOrder,
                                                 bool require_derived_overlap = false);
DecompositionSearch central_decomposition_search(const ElementTable& t,
                                                 const std::vector<Subgroup>& subgroups,
                                                 bool require_derived_overlap = false);

// Recomputes CD, [C,D] and the two non-containments element by element.
bool witness_is_valid(const ElementTable& t, const CentralDecomposition& w);

enum class RpStatus { member, non_member, member_by_construction, undetermined };
std::string to_string(RpStatus s);

struct RpMembership {
  RpStatus status = RpStatus::undetermined;
  std::vector<std::string> reasons;
  bool center_equals_derived = false;
  std::size_t nonzero_commutators = 0;
  bool relation_found = false;
};

RpMembership rp_membership(const Presentation& g, const CapabilityOptions& opts = {});

struct CrossCheckReport {
  bool passed = false;
  Subspace epicentre;
  std::size_t subspaces_examined = 0;
  std::size_t checkable_quotients = 0;
  std::size_t capable_quotients = 0;
  bool top_quotient_checkable = false;
  bool top_quotient_capable = false;
  std::vector<std::string> violations;
};

// Checks Z* against the definition by enumerating every central subspace N
// of [G,G] and deciding G/N where a direct method applies. Requires
// Z(G) = [G,G] and m <= max_m.
CrossCheckReport epicentre_cross_check(const Presentation& g, Index max_m = 4);

}  // namespace nilp2

#endif  // NILP2_CAPABILITY_HPP
