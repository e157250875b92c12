#include "nilp2/constructions.hpp"

namespace nilp2 {

Presentation cyclic(Residue p) { return elementary_abelian(p, 1); }

Presentation elementary_abelian(Residue p, Index rank) {
  return Presentation::from_constants(FpMatrix(p, Presentation::pair_count(rank), 0), rank,
                                      "C_" + std::to_string(p) + "^" + std::to_string(rank));
}

Presentation heisenberg(Residue p) {
  Matrix c(1, 1);
  c << 1;
  return Presentation::from_constants(FpMatrix(p, c), 2, "heisenberg(" + std::to_string(p) + ")");
}

Presentation extraspecial_p5(Residue p) {
  Matrix c = Matrix::Zero(Presentation::pair_count(4), 1);
  c(Presentation::pair_index(1, 0), 0) = 1;
  c(Presentation::pair_index(3, 2), 0) = 1;
  return Presentation::from_constants(FpMatrix(p, c), 4, "extraspecial_p5(" + std::to_string(p) + ")");
}

namespace {

Vector normalized(const Vector& v, const PrimeField& f) {
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k) != 0) return reduce_mod(f.inv(v(k)) * v, f.modulus());
  }
  return v;
}

Vector unit_line() {
  Vector one(1);
  one << 1;
  return one;
}

}  // namespace

Vector least_commutator(const Presentation& g) {
  const auto pairs = g.nonzero_pairs();
  if (pairs.empty()) throw Error(ErrorCode::TrivialInput, "group has no nontrivial commutator");
  return normalized(g.constant(pairs.front().first, pairs.front().second), g.field());
}

Identification line_identification(const Presentation& a, const Vector& h, const Presentation& b) {
  return Identification(a.p(), a.m(), b.m(), {normalized(h, a.field())}, {unit_line()});
}

std::string to_string(ExtensionMode mode) {
  return mode == ExtensionMode::capable ? "capable" : "noncapable";
}

namespace {

void require_nontrivial(const Presentation& g) {
  if (g.is_trivial()) throw Error(ErrorCode::TrivialInput, "construction needs a nontrivial group");
}

void finish(ExtensionReport& r) {
  r.verdict = capability_verdict(r.output);
  r.rp = rp_membership(r.output);
  r.bound_actual = static_cast<int>(r.output.n() - r.input.n());
  r.bound_ok = r.bound_actual <= r.bound_claimed;
  r.embedding_ok = is_monomorphism(r.embedding).status == MonoStatus::injective;
}

}  // namespace

ExtensionReport build_capable_extension(const Presentation& g) {
  require_nontrivial(g);
  const Residue p = g.p();
  std::vector<std::string> trail;
  const bool sharp = !g.is_abelian() && capability_verdict(g).status == CapabilityStatus::capable;

  std::optional<ProductResult> widened;
  if (sharp) {
    trail.push_back("G nonabelian and capable: G0 = G");
  } else {
    widened = nilpotent2_product(g, cyclic(p));
    trail.push_back("G abelian or not known capable: G0 = G *2 C_p");
  }
  const Presentation g0 = widened ? widened->group : g;
  const GeneratorMap into_g0 = widened ? widened->left : identity_map(g);

  const Presentation h = heisenberg(p);
  const Vector glued = least_commutator(g0);
  Identification ident = line_identification(g0, glued, h);
  trail.push_back("identify [H,H] with <" + format_vector(ident.h_basis().front()) + "> in [G0,G0]");
  const ProductResult amalgam = amalgamated_coproduct(g0, h, ident);
  trail.push_back("G1 = G0 *2_phi heisenberg(p)");

  ExtensionReport r{
      .mode = ExtensionMode::capable,
      .input = g,
      .intermediate = g0,
      .partner = h,
      .identification = std::move(ident),
      .output = amalgam.group,
      .embedding = compose(amalgam.left, into_g0),
      .trail = std::move(trail),
      .verdict = {},
      .rp = {},
      .identified_element = std::nullopt,
      .identified_in_epicentre = false,
      .bound_claimed = sharp ? 2 : 3,
  };
  finish(r);
  return r;
}

ExtensionReport build_noncapable_extension(const Presentation& g) {
  require_nontrivial(g);
  const Residue p = g.p();
  std::vector<std::string> trail;
  const bool abelian = g.is_abelian();

  // Step 1: a central product H containing G in which the chosen g is
  // identified with the derived subgroup of a Heisenberg factor.
  std::optional<ProductResult> widened;
  if (abelian) {
    widened = nilpotent2_product(g, cyclic(p));
    trail.push_back("G abelian: widen to G *2 C_p");
  } else {
    trail.push_back("G nonabelian");
  }
  const Presentation base = widened ? widened->group : g;
  const GeneratorMap into_base = widened ? widened->left : identity_map(g);
  const Vector gvec = least_commutator(base);
  const Presentation h1 = heisenberg(p);
  const ProductResult central =
      central_product_identified(base, h1, line_identification(base, gvec, h1));
  trail.push_back("H = central product identifying <" + format_vector(gvec) + "> with [H1,H1]");

  // Step 2: amalgamate H with E along g.
  const Vector g_in_h = central.left.commutator_map().apply(gvec);
  const Presentation e = extraspecial_p5(p);
  Identification ident = line_identification(central.group, g_in_h, e);
  const ProductResult amalgam = amalgamated_coproduct(central.group, e, ident);
  trail.push_back("G2 = H *2_phi extraspecial_p5(p), phi: <" + format_vector(ident.h_basis().front()) +
                  "> -> [E,E]");

  ExtensionReport r{
      .mode = ExtensionMode::noncapable,
      .input = g,
      .intermediate = central.group,
      .partner = e,
      .identification = std::move(ident),
      .output = amalgam.group,
      .embedding = compose(amalgam.left, compose(central.left, into_base)),
      .trail = std::move(trail),
      .verdict = {},
      .rp = {},
      .identified_element = amalgam.left.commutator_map().apply(g_in_h),
      .identified_in_epicentre = false,
      .bound_claimed = abelian ? 7 : 6,
  };
  finish(r);
  r.identified_in_epicentre = r.verdict.epicentre && r.verdict.epicentre->contains(*r.identified_element);
  return r;
}

std::vector<std::string> VerificationResult::failed_claims() const {
  std::vector<std::string> out;
  for (const auto& c : claims) {
    if (!c.passed) out.push_back(c.claim);
  }
  return out;
}

namespace {

template <typename Fn>
ClaimCheck check_claim(std::string name, Fn&& fn) {
  ClaimCheck c{std::move(name), false, {}};
  try {
    c.passed = fn(c.detail);
  } catch (const std::exception& ex) {
    c.passed = false;
    c.detail = ex.what();
  }
  return c;
}

}  // namespace

VerificationResult verify_extension(const ExtensionReport& r) {
  VerificationResult out;
  const bool capable_mode = r.mode == ExtensionMode::capable;

  out.claims.push_back(check_claim("construction", [&](std::string& detail) {
    const auto rebuilt = capable_mode ? build_capable_extension(r.input) : build_noncapable_extension(r.input);
    const bool same = rebuilt.intermediate == r.intermediate && rebuilt.partner == r.partner &&
                      rebuilt.identification == r.identification && rebuilt.output == r.output;
    detail = same ? "output reproduced from the input" : "stored groups differ from a fresh rebuild";
    return same;
  }));

  out.claims.push_back(check_claim("amalgam", [&](std::string& detail) {
    const auto amalgam = amalgamated_coproduct(r.intermediate, r.partner, r.identification);
    const bool same = amalgam.group == r.output;
    detail = same ? "output equals the amalgamated coproduct of the stored factors"
                  : "output is not the amalgam of the stored factors";
    return same;
  }));

  out.claims.push_back(check_claim("embedding_ok", [&](std::string& detail) {
    const auto f = hom_from_images(r.input, r.output, r.embedding.images());
    if (!f.consistent()) {
      detail = "stored images do not define a homomorphism";
      return false;
    }
    const bool mono = is_monomorphism(f).status == MonoStatus::injective;
    detail = mono ? "injective" : "not injective";
    return mono && r.embedding_ok;
  }));

  out.claims.push_back(check_claim("center_equals_derived", [&](std::string& detail) {
    const bool ok = center(r.output).equals_derived;
    detail = ok ? "Z = [G,G]" : "Z != [G,G]";
    return ok;
  }));

  out.claims.push_back(check_claim("verdict", [&](std::string& detail) {
    const auto v = capability_verdict(r.output);
    const auto want_status = capable_mode ? CapabilityStatus::capable : CapabilityStatus::not_capable;
    const auto want_method =
        capable_mode ? CapabilityMethod::epicentre_trivial : CapabilityMethod::epicentre_nontrivial;
    detail = to_string(v.status) + " via " + to_string(v.method);
    return v.status == want_status && v.method == want_method && v.status == r.verdict.status &&
           v.method == r.verdict.method && v.epicentre && r.verdict.epicentre &&
           *v.epicentre == *r.verdict.epicentre;
  }));

  out.claims.push_back(check_claim("rp_status", [&](std::string& detail) {
    const auto rp = rp_membership(r.output);
    detail = to_string(rp.status);
    const bool in =
        rp.status == RpStatus::member || rp.status == RpStatus::member_by_construction;
    return in && rp.status == r.rp.status && rp.center_equals_derived && rp.relation_found;
  }));

  if (!capable_mode) {
    out.claims.push_back(check_claim("identified_in_epicentre", [&](std::string& detail) {
      if (!r.identified_element) {
        detail = "no identified element stored";
        return false;
      }
      const auto z = epicentre_in_derived(r.output);
      const bool in = z.contains(*r.identified_element);
      detail = in ? "identified element lies in Z*" : "identified element is outside Z*";
      return in && r.identified_in_epicentre;
    }));
  }

  out.claims.push_back(check_claim("bound_ok", [&](std::string& detail) {
    int expected = 0;
    if (capable_mode) {
      expected = r.intermediate == r.input ? 2 : 3;
    } else {
      expected = r.input.is_abelian() ? 7 : 6;
    }
    const int actual = static_cast<int>(r.output.n() - r.input.n());
    detail = "rank grows by " + std::to_string(actual) + ", bound " + std::to_string(expected);
    return r.bound_claimed == expected && r.bound_actual == actual && actual <= expected &&
           r.bound_ok == (actual <= r.bound_claimed) && r.bound_ok;
  }));

  out.passed = true;
  for (const auto& c : out.claims) out.passed = out.passed && c.passed;
  return out;
}

}  // namespace nilp2
