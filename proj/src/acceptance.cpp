#include "nilp2/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "nilp2/io.hpp"
#include "nilp2/report.hpp"

namespace nilp2 {

std::vector<Presentation> standard_battery(Residue p) {
  const auto h = heisenberg(p);
  return {cyclic(p),
          elementary_abelian(p, 2),
          elementary_abelian(p, 3),
          h,
          extraspecial_p5(p),
          nilpotent2_product(h, cyclic(p)).group.with_label("heisenberg(" + std::to_string(p) + ")*2C_p")};
}

Presentation random_presentation(std::mt19937_64& rng, Residue p, Index max_n) {
  std::uniform_int_distribution<Index> pick_n(1, max_n);
  std::uniform_int_distribution<Residue> entry(0, p - 1);
  for (;;) {
    const Index n = pick_n(rng);
    const Index pairs = Presentation::pair_count(n);
    std::uniform_int_distribution<Index> pick_m(0, pairs);
    const Index m = pick_m(rng);
    Matrix c(pairs, m);
    for (Index r = 0; r < pairs; ++r) {
      for (Index k = 0; k < m; ++k) c(r, k) = entry(rng);
    }
    const FpMatrix fc(p, c);
    if (rank(fc) == m) return Presentation::from_constants(fc, n);
  }
}

Element random_element(std::mt19937_64& rng, const Presentation& g) {
  std::uniform_int_distribution<Residue> entry(0, g.p() - 1);
  Vector v(g.n()), w(g.m());
  for (Index k = 0; k < g.n(); ++k) v(k) = entry(rng);
  for (Index k = 0; k < g.m(); ++k) w(k) = entry(rng);
  return g.element(v, w);
}

namespace {

std::string describe(const Presentation& g) {
  std::string name = g.label().empty() ? "group" : g.label();
  return name + "[p=" + std::to_string(g.p()) + ",n=" + std::to_string(g.n()) + ",m=" +
         std::to_string(g.m()) + "]";
}

// Collects per-check outcomes; the first failure is kept for the evidence.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  bool passed() const { return failed_ == 0; }
  std::string summary(const std::string& extra) const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks";
    if (!extra.empty()) os << "; " << extra;
    if (!first_failure_.empty()) os << "; first failure: " << first_failure_;
    return os.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

Identification centers(const Presentation& a, const Presentation& b) {
  return line_identification(a, least_commutator(a), b);
}

Identification commutator_to_commutator(const Presentation& a, const Presentation& b) {
  return Identification(a.p(), a.m(), b.m(), {least_commutator(a)}, {least_commutator(b)});
}

// {h in H : h in Z*(A), phi(h) in Z*(B)} mapped into the amalgam, computed
// from the factors alone.
Subspace expected_amalgam_epicentre(const Presentation& a, const Presentation& b,
                                    const Identification& ident, const ProductResult& r) {
  if (ident.empty()) return Subspace(r.group.p(), r.group.m());
  const QuotientMap mod_a(a.m(), epicentre_in_derived(a));
  const QuotientMap mod_b(b.m(), epicentre_in_derived(b));
  const Index ta = mod_a.target_dim();
  const Index tb = mod_b.target_dim();
  Matrix cond(static_cast<Index>(ident.size()), ta + tb);
  for (std::size_t k = 0; k < ident.size(); ++k) {
    const auto row = static_cast<Index>(k);
    cond.block(row, 0, 1, ta) = mod_a(ident.h_basis()[k]);
    cond.block(row, ta, 1, tb) = mod_b(ident.k_basis()[k]);
  }
  const FpMatrix coeffs = left_null_space(FpMatrix(a.p(), cond));
  if (coeffs.rows() == 0) return Subspace(r.group.p(), r.group.m());
  const FpMatrix h = FpMatrix::from_rows(a.p(), a.m(), ident.h_basis());
  return image(Subspace::span(coeffs * h), r.left.commutator_map());
}

CriterionResult group_axioms() {
  CriterionResult res;
  Checks checks;
  std::mt19937_64 rng(0x6e696c7032ULL);
  const std::vector<Presentation> groups = {cyclic(3), elementary_abelian(3, 2), heisenberg(3),
                                            extraspecial_p5(3), heisenberg(5)};
  int exhaustive = 0;
  for (const auto& g : groups) {
    bool assoc = true, inv = true, expo = true;
    for (int t = 0; t < 1000; ++t) {
      const auto a = random_element(rng, g);
      const auto b = random_element(rng, g);
      const auto c = random_element(rng, g);
      assoc = assoc && (a * b) * c == a * (b * c);
      inv = inv && (a * a.inverse()).is_identity() && (a.inverse() * a).is_identity();
      expo = expo && a.pow(g.p()).is_identity();
    }
    checks.expect(assoc, "associativity in " + describe(g));
    checks.expect(inv, "inverses in " + describe(g));
    checks.expect(expo, "exponent p in " + describe(g));
    if (bounded_order(g, 243)) {
      // Independent of the table's indexing: close the generators under
      // multiplication and count distinct normal forms.
      const ElementTable t(g, 243);
      std::vector<ElementId> gens;
      for (Index k = 0; k < g.n(); ++k) gens.push_back(t.id_of(g.generator(k)));
      const auto whole = generated_subgroup(t, gens);
      std::uint64_t expected = 1;
      for (Index k = 0; k < g.order_exponent(); ++k) expected *= static_cast<std::uint64_t>(g.p());
      checks.expect(whole.order() == expected, "order of " + describe(g));
      ++exhaustive;
    }
  }
  res.passed = checks.passed();
  res.evidence = checks.summary(std::to_string(groups.size()) + " groups x 1000 triples, " +
                                std::to_string(exhaustive) + " orders enumerated");
  return res;
}

CriterionResult machenry_law() {
  CriterionResult res;
  Checks checks;
  std::mt19937_64 rng(0x4d6163ULL);
  for (int t = 0; t < 20; ++t) {
    const Residue p = t % 2 == 0 ? 3 : 5;
    const auto a = random_presentation(rng, p, 3);
    const auto b = random_presentation(rng, p, 3);
    const auto r = nilpotent2_product(a, b);
    const std::string tag = "pair " + std::to_string(t) + " " + describe(a) + " x " + describe(b);
    checks.expect(r.group.m() == a.m() + b.m() + a.n() * b.n(), "dimension law for " + tag);
    checks.expect(is_monomorphism(r.left).status == MonoStatus::injective, "left embedding of " + tag);
    checks.expect(is_monomorphism(r.right).status == MonoStatus::injective, "right embedding of " + tag);
  }
  res.passed = checks.passed();
  res.evidence = checks.summary("20 random pairs at p in {3,5}");
  return res;
}

CriterionResult capability_ground_truths() {
  CriterionResult res;
  Checks checks;
  for (Residue p : {3, 5}) {
    const auto h = heisenberg(p);
    const auto v = capability_verdict(h);
    checks.expect(v.status == CapabilityStatus::capable && v.method == CapabilityMethod::epicentre_trivial &&
                      v.epicentre && v.epicentre->dim() == 0,
                  "heisenberg(" + std::to_string(p) + ") capable with trivial epicentre");
    checks.expect(ellis_basis_criterion(h) == EllisResult::capable,
                  "ellis criterion on heisenberg(" + std::to_string(p) + ")");
  }
  const auto e = extraspecial_p5(3);
  const auto ve = capability_verdict(e);
  checks.expect(ve.status == CapabilityStatus::not_capable && ve.method == CapabilityMethod::epicentre_nontrivial,
                "extraspecial_p5(3) not capable via epicentre");
  checks.expect(ve.epicentre && ve.epicentre->dim() == 1 && *ve.epicentre == Subspace::full(3, 1),
                "extraspecial_p5(3) epicentre = [E,E]");
  const auto search = central_decomposition_search(e, 243, true);
  checks.expect(search.status == SearchStatus::found && search.witness && search.witness->derived_overlap,
                "central product method on extraspecial_p5(3)");
  if (search.witness) {
    checks.expect(witness_is_valid(ElementTable(e, 243), *search.witness), "decomposition witness is valid");
  }
  const auto c3 = capability_verdict(cyclic(3));
  checks.expect(c3.status == CapabilityStatus::not_capable && c3.method == CapabilityMethod::baer_abelian,
                "C_3 not capable by Baer");
  const auto c33 = capability_verdict(elementary_abelian(3, 2));
  checks.expect(c33.status == CapabilityStatus::capable && c33.method == CapabilityMethod::baer_abelian,
                "C_3^2 capable by Baer");
  res.passed = checks.passed();
  res.evidence = checks.summary("E(3) witness |C|=" +
                                (search.witness ? std::to_string(search.witness->c.order()) : std::string("-")) +
                                " |D|=" +
                                (search.witness ? std::to_string(search.witness->d.order()) : std::string("-")));
  return res;
}

struct AmalgamCase {
  Presentation a;
  Presentation b;
  Identification ident;
};

std::vector<AmalgamCase> amalgam_battery() {
  const auto c3 = cyclic(3);
  const auto c33 = elementary_abelian(3, 2);
  const auto h = heisenberg(3);
  const auto e = extraspecial_p5(3);
  const auto hc = nilpotent2_product(h, c3).group;
  return {
      {c3, c3, Identification::empty(c3, c3)},
      {c3, c33, Identification::empty(c3, c33)},
      {c33, c3, Identification::empty(c33, c3)},
      {h, c3, Identification::empty(h, c3)},
      {h, h, Identification::empty(h, h)},
      {h, h, commutator_to_commutator(h, h)},
      {h, e, commutator_to_commutator(h, e)},
      {e, e, commutator_to_commutator(e, e)},
      {e, h, commutator_to_commutator(e, h)},
      {hc, e, commutator_to_commutator(hc, e)},
  };
}

CriterionResult amalgam_laws() {
  CriterionResult res;
  Checks checks;
  int searched = 0;
  int nontrivial_epicentres = 0;
  int index = 0;
  for (const auto& c : amalgam_battery()) {
    const auto r = amalgamated_coproduct(c.a, c.b, c.ident);
    const std::string tag = "case " + std::to_string(index++);
    checks.expect(center(r.group).equals_derived, tag + ": Z = [G,G]");
    const auto z = epicentre_in_derived(r.group);
    checks.expect(z == expected_amalgam_epicentre(c.a, c.b, c.ident, r), tag + ": epicentre of amalgam");
    if (!z.is_zero()) ++nontrivial_epicentres;
    checks.expect(embedded_intersection(r) == identified_image(r, c.ident), tag + ": copies meet in H");
    if (bounded_order(r.group, 243)) {
      const auto s = central_decomposition_search(r.group, 243, false);
      checks.expect(s.status == SearchStatus::none_found, tag + ": centrally indecomposable");
      ++searched;
    }
  }
  res.passed = checks.passed();
  res.evidence = checks.summary("10 amalgams, " + std::to_string(searched) + " searched exhaustively, " +
                                std::to_string(nontrivial_epicentres) + " with nontrivial epicentre");
  return res;
}

CriterionResult capable_embedding() {
  CriterionResult res;
  Checks checks;
  std::string shapes;
  for (const auto& g : standard_battery(3)) {
    const auto r = build_capable_extension(g);
    const std::string tag = describe(g);
    const bool sharp = !g.is_abelian() && capability_verdict(g).status == CapabilityStatus::capable;
    checks.expect(r.verdict.status == CapabilityStatus::capable &&
                      r.verdict.method == CapabilityMethod::epicentre_trivial,
                  tag + ": G1 capable");
    checks.expect(r.rp.status == RpStatus::member || r.rp.status == RpStatus::member_by_construction,
                  tag + ": G1 in R_p");
    checks.expect(r.embedding_ok, tag + ": G embeds in G1");
    checks.expect(r.bound_claimed == (sharp ? 2 : 3) && r.bound_ok &&
                      r.output.n() <= g.n() + (sharp ? 2 : 3),
                  tag + ": rank bound");
    checks.expect(verify_extension(r).passed, tag + ": report verifies");
    if (g == cyclic(3) || g == heisenberg(3)) {
      checks.expect(r.output.n() == 4, tag + ": bound attained with n = 4");
    }
    if (!shapes.empty()) shapes += ",";
    shapes += std::to_string(r.output.n()) + "/" + std::to_string(r.output.m());
  }
  res.passed = checks.passed();
  res.evidence = checks.summary("G1 (n/m): " + shapes);
  return res;
}

CriterionResult noncapable_embedding() {
  CriterionResult res;
  Checks checks;
  std::string shapes;
  for (const auto& g : standard_battery(3)) {
    const auto r = build_noncapable_extension(g);
    const std::string tag = describe(g);
    const int bound = g.is_abelian() ? 7 : 6;
    checks.expect(r.verdict.status == CapabilityStatus::not_capable &&
                      r.verdict.method == CapabilityMethod::epicentre_nontrivial,
                  tag + ": G2 not capable");
    checks.expect(r.rp.status == RpStatus::member || r.rp.status == RpStatus::member_by_construction,
                  tag + ": G2 in R_p");
    checks.expect(r.identified_in_epicentre, tag + ": identified g in Z*(G2)");
    checks.expect(r.embedding_ok, tag + ": G embeds in G2");
    checks.expect(r.bound_claimed == bound && r.bound_ok && r.output.n() <= g.n() + bound, tag + ": rank bound");
    checks.expect(verify_extension(r).passed, tag + ": report verifies");
    if (g == heisenberg(3)) {
      checks.expect(r.output.n() == 8 && r.output.m() == 17, tag + ": n = 8, m = 17");
    }
    if (!shapes.empty()) shapes += ",";
    shapes += std::to_string(r.output.n()) + "/" + std::to_string(r.output.m());
  }
  res.passed = checks.passed();
  res.evidence = checks.summary("G2 (n/m): " + shapes);
  return res;
}

CriterionResult heineken_nikolova() {
  CriterionResult res;
  Checks checks;
  const auto h3 = heisenberg(3);
  const auto e3 = extraspecial_p5(3);
  const auto hc = nilpotent2_product(h3, cyclic(3)).group;
  const auto h5 = heisenberg(5);
  const std::vector<std::pair<Presentation, Presentation>> cases = {
      {h3, h3}, {h3, e3}, {e3, e3}, {hc, h3}, {h5, h5}};
  int index = 0;
  for (const auto& [a, b] : cases) {
    const auto ident = commutator_to_commutator(a, b);
    const auto r = central_product_identified(a, b, ident);
    const std::string tag = "case " + std::to_string(index++);
    checks.expect(center(r.group).equals_derived, tag + ": Z = [G,G]");
    const auto z = epicentre_in_derived(r.group);
    checks.expect(z.contains(identified_image(r, ident)), tag + ": identified subgroup in Z*");
    checks.expect(capability_verdict(r.group).status == CapabilityStatus::not_capable, tag + ": not capable");
  }
  res.passed = checks.passed();
  res.evidence = checks.summary("5 central products");
  return res;
}

CriterionResult cross_check() {
  CriterionResult res;
  Checks checks;
  const auto c3 = cyclic(3);
  const std::vector<Presentation> groups = {
      heisenberg(3), extraspecial_p5(3),
      nilpotent2_product(c3, elementary_abelian(3, 2)).group.with_label("C_3*2C_3^2"),
      nilpotent2_product(heisenberg(3), c3).group.with_label("heisenberg(3)*2C_3")};
  std::size_t quotients = 0;
  for (const auto& g : groups) {
    const auto r = epicentre_cross_check(g);
    checks.expect(r.passed, describe(g) + ": quotient consistency");
    checks.expect(r.top_quotient_checkable && r.top_quotient_capable, describe(g) + ": G/Z* capable");
    quotients += r.checkable_quotients;
  }
  res.passed = checks.passed();
  res.evidence = checks.summary(std::to_string(quotients) + " checkable quotients");
  return res;
}

CriterionResult cross_module_identity() {
  CriterionResult res;
  Checks checks;
  const auto h = heisenberg(3);
  const auto r = central_product_identified(h, h, centers(h, h));
  checks.expect(r.group == extraspecial_p5(3), "heisenberg(3) o heisenberg(3) = extraspecial_p5(3)");
  checks.expect(write_group(r.group) == write_group(extraspecial_p5(3)), "identical group files");
  res.passed = checks.passed();
  res.evidence = checks.summary("");
  return res;
}

CriterionResult determinism_round_trip() {
  CriterionResult res;
  Checks checks;
  checks.expect(battery_report() == battery_report(), "battery reports byte-identical");
  std::mt19937_64 rng(0x72742eULL);
  for (int t = 0; t < 100; ++t) {
    const Residue p = t % 2 == 0 ? 3 : 5;
    const auto g = random_presentation(rng, p, 4);
    const auto text = write_group(g);
    checks.expect(parse_group(text) == g && write_group(parse_group(text)) == text, "group round-trip");

    const auto a = random_presentation(rng, p, 4);
    const auto b = random_presentation(rng, p, 4);
    const Index k = std::min(a.m(), b.m());
    std::vector<Vector> hs, ks;
    if (k > 0) {
      std::uniform_int_distribution<Index> pick(0, k);
      const Index dim = pick(rng);
      std::uniform_int_distribution<Residue> entry(0, p - 1);
      while (static_cast<Index>(hs.size()) < dim) {
        std::vector<Vector> h2 = hs, k2 = ks;
        Vector hv(a.m()), kv(b.m());
        for (Index x = 0; x < a.m(); ++x) hv(x) = entry(rng);
        for (Index x = 0; x < b.m(); ++x) kv(x) = entry(rng);
        h2.push_back(hv);
        k2.push_back(kv);
        if (Subspace::span(p, a.m(), h2).dim() == static_cast<Index>(h2.size()) &&
            Subspace::span(p, b.m(), k2).dim() == static_cast<Index>(k2.size())) {
          hs = std::move(h2);
          ks = std::move(k2);
        }
      }
    }
    const Identification ident(p, a.m(), b.m(), hs, ks);
    const auto itext = write_identification(ident);
    checks.expect(parse_identification(itext, a, b) == ident, "identification round-trip");

    std::vector<Element> images;
    for (Index x = 0; x < a.n(); ++x) images.push_back(random_element(rng, b));
    const auto f = hom_from_images(a, b, images);
    const auto mtext = write_map(f);
    const auto back = parse_map(mtext, a, b);
    checks.expect(back.images() == f.images() && write_map(back) == mtext, "map round-trip");
  }
  res.passed = checks.passed();
  res.evidence = checks.summary("100 random files of each kind");
  return res;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"group-axioms", 5, group_axioms},
      {"machenry-law", 5, machenry_law},
      {"capability-ground-truths", 5, capability_ground_truths},
      {"amalgam-laws", 120, amalgam_laws},
      {"capable-embedding", 10, capable_embedding},
      {"noncapable-embedding", 10, noncapable_embedding},
      {"central-product-epicentre", 5, heineken_nikolova},
      {"epicentre-cross-check", 120, cross_check},
      {"extraspecial-identity", 1, cross_module_identity},
      {"determinism-round-trip", 10, determinism_round_trip},
  };
  return all;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw Error(ErrorCode::BadIndex, "no acceptance criterion " + std::to_string(id));
  const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.run();
  } catch (const std::exception& ex) {
    r.passed = false;
    r.evidence = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.id = id;
  r.name = c.name;
  r.limit_seconds = c.limit_seconds;
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) out.push_back(run_criterion(id));
  return out;
}

std::string battery_report() {
  std::string out;
  for (const auto& g : standard_battery(3)) {
    out += "# " + describe(g) + "\n";
    Report r;
    add_verdict(r, capability_verdict(g));
    add_shape(r, g);
    add_rp(r, rp_membership(g));
    out += r.render();
    for (auto mode : {ExtensionMode::capable, ExtensionMode::noncapable}) {
      const auto ext = mode == ExtensionMode::capable ? build_capable_extension(g) : build_noncapable_extension(g);
      out += "# extend --mode " + to_string(mode) + "\n";
      out += extension_report(ext).render();
      out += write_group(ext.output);
    }
  }
  return out;
}

std::string render_selftest(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.passed ? "[PASS] " : "[FAIL] ";
    out += std::to_string(r.id) + " " + r.name + ": " + r.evidence + "\n";
  }
  return out;
}

}  // namespace nilp2
