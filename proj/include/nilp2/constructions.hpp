#ifndef NILP2_CONSTRUCTIONS_HPP
#define NILP2_CONSTRUCTIONS_HPP

// Named groups and the two embedding constructions: every nontrivial group
// of class <= 2 and exponent p sits inside a capable and inside a
// non-capable centrally indecomposable group with Z = [G,G].

#include <optional>
#include <string>
#include <vector>

#include "nilp2/capability.hpp"
#include "nilp2/products.hpp"

namespace nilp2 {

Presentation cyclic(Residue p);
Presentation elementary_abelian(Residue p, Index rank);
// C_p *2 C_p: n = 2, m = 1, c(2,1) = 1.
Presentation heisenberg(Residue p);
// Extraspecial of order p^5 and exponent p: c(2,1) = c(4,3) = 1.
Presentation extraspecial_p5(Residue p);

// The lexicographically least nonzero c(j, i), scaled to leading entry 1.
// Throws TrivialInput for abelian groups.
Vector least_commutator(const Presentation& g);

// H = <h> in A identified with span{(1)} = [B,B] for a Heisenberg B.
Identification line_identification(const Presentation& a, const Vector& h, const Presentation& b);

enum class ExtensionMode { capable, noncapable };
std::string to_string(ExtensionMode mode);

struct ExtensionReport {
  ExtensionMode mode = ExtensionMode::capable;
  Presentation input;
  // Left factor of the final amalgam (G0 for the capable construction, the
  // central product H for the non-capable one).
  Presentation intermediate;
  Presentation partner;  // right factor of the final amalgam
  Identification identification;
  Presentation output;
  GeneratorMap embedding;  // input -> output
  std::vector<std::string> trail;

  CapabilityVerdict verdict;
  RpMembership rp;
  // Image in the output of the identified commutator (non-capable mode).
  std::optional<Vector> identified_element;
  bool identified_in_epicentre = false;

  int bound_claimed = 0;
  int bound_actual = 0;
  bool bound_ok = false;
  bool embedding_ok = false;
};

ExtensionReport build_capable_extension(const Presentation& g);
ExtensionReport build_noncapable_extension(const Presentation& g);

struct ClaimCheck {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct VerificationResult {
  bool passed = false;
  std::vector<ClaimCheck> claims;
  std::vector<std::string> failed_claims() const;
};

// Rebuilds the construction from the stored input and recomputes every
// certificate; any stored value that disagrees fails its claim.
VerificationResult verify_extension(const ExtensionReport& report);

}  // namespace nilp2

#endif  // NILP2_CONSTRUCTIONS_HPP
