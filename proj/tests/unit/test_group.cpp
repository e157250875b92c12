#include <doctest.h>

#include "helpers.hpp"
#include "nilp2/acceptance.hpp"
#include "nilp2/constructions.hpp"
#include "nilp2/group.hpp"

using namespace nilp2;
using nilp2::test::vec;

namespace {

RawPresentation raw(Residue p, Index n, Index m, std::vector<RawPresentation::Entry> entries) {
  RawPresentation r;
  r.p = p;
  r.n = n;
  r.m = m;
  r.entries = std::move(entries);
  return r;
}

ErrorCode code_of(const RawPresentation& r) {
  try {
    (void)Presentation::validate(r);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("validate accepted invalid data");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("validate: heisenberg, span deficit, even prime") {
  const auto h = Presentation::validate(raw(3, 2, 1, {{1, 0, {1}}}));
  CHECK(h.n() == 2);
  CHECK(h.m() == 1);
  CHECK(h.order_exponent() == 3);
  CHECK(h == heisenberg(3));

  try {
    (void)Presentation::validate(raw(3, 2, 2, {{1, 0, {1, 0}}}));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpanDeficit);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }

  CHECK(code_of(raw(2, 2, 1, {{1, 0, {1}}})) == ErrorCode::NotOddPrime);
  CHECK(code_of(raw(2, 0, 0, {})) == ErrorCode::NotOddPrime);
}

TEST_CASE("validate: index and entry errors") {
  CHECK(code_of(raw(3, 2, 1, {{0, 1, {1}}})) == ErrorCode::BadIndex);
  CHECK(code_of(raw(3, 2, 1, {{1, 1, {1}}})) == ErrorCode::BadIndex);
  CHECK(code_of(raw(3, 2, 1, {{2, 0, {1}}})) == ErrorCode::BadIndex);
  CHECK(code_of(raw(3, 2, 1, {{1, 0, {3}}})) == ErrorCode::EntryOutOfRange);
  CHECK(code_of(raw(3, 2, 1, {{1, 0, {-1}}})) == ErrorCode::EntryOutOfRange);
  CHECK(code_of(raw(3, 2, 1, {{1, 0, {1, 0}}})) == ErrorCode::DimensionMismatch);
  CHECK(code_of(raw(3, 1, 1, {})) == ErrorCode::SpanDeficit);
}

TEST_CASE("trivial and abelian groups validate") {
  const auto t = Presentation::validate(raw(5, 0, 0, {}));
  CHECK(t.is_trivial());
  CHECK(t.identity().is_identity());
  const auto a = Presentation::validate(raw(5, 3, 0, {}));
  CHECK(a.is_abelian());
  CHECK(a.nonzero_pairs().empty());
}

TEST_CASE("multiply: heisenberg collection examples") {
  const auto h = heisenberg(3);
  const auto x1 = h.generator(0);
  const auto x2 = h.generator(1);
  CHECK((h.identity() * x1) == x1);
  CHECK((x1 * h.identity()) == x1);
  CHECK((x1 * x2) == h.element(vec({1, 1}), vec({0})));
  CHECK((x2 * x1) == h.element(vec({1, 1}), vec({1})));
  CHECK((x2 * x1.pow(2)) == h.element(vec({2, 1}), vec({2})));
}

TEST_CASE("multiply rejects elements of different groups") {
  const auto h = heisenberg(3);
  const auto e = extraspecial_p5(3);
  try {
    (void)(h.generator(0) * e.generator(0));
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PresentationMismatch);
  }
  CHECK_THROWS_AS((void)commutator(h.generator(0), e.generator(0)), Error);
}

TEST_CASE("inverse, power and commutator examples") {
  const auto h = heisenberg(3);
  const auto x1 = h.generator(0);
  const auto x2 = h.generator(1);
  CHECK(commutator(x2, x1) == h.element(vec({0, 0}), vec({1})));
  CHECK(commutator(x1, x2) == h.element(vec({0, 0}), vec({2})));
  const auto a = h.element(vec({1, 1}), vec({0}));
  CHECK(a.inverse() == h.element(vec({2, 2}), vec({1})));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(3).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(0).is_identity());
  CHECK(a.pow(4) == a);
  CHECK(a.pow(2) == a * a);
}

TEST_CASE("commutator is the bilinear kappa form") {
  const auto e = extraspecial_p5(5);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_element(rng, e);
    const auto b = random_element(rng, e);
    const auto c = commutator(a, b);
    CHECK(c == a.inverse() * b.inverse() * a * b);
    CHECK(c.v().isZero());
    Vector expect = zero_vector(e.m());
    for (Index j = 0; j < e.n(); ++j)
      for (Index i = 0; i < e.n(); ++i) expect += a.v()(j) * b.v()(i) * e.kappa(j, i);
    CHECK(c.w() == reduce_mod(expect, 5));
  }
  CHECK(e.kappa(0, 1) == vec({4}));
  CHECK(e.kappa(1, 0) == vec({1}));
  CHECK(e.kappa(2, 2) == vec({0}));
}

TEST_CASE("center: heisenberg, abelian, extraspecial") {
  const auto zh = center(heisenberg(3));
  CHECK(zh.radical.is_zero());
  CHECK(zh.equals_derived);

  const auto za = center(elementary_abelian(3, 2));
  CHECK(za.radical == Subspace::full(3, 2));
  CHECK_FALSE(za.equals_derived);

  CHECK(center(extraspecial_p5(3)).equals_derived);

  const auto hc = direct_product(heisenberg(3), cyclic(3)).group;
  const auto zhc = center(hc);
  CHECK(zhc.radical == Subspace::span(3, 3, {vec({0, 0, 1})}));
  CHECK_FALSE(zhc.equals_derived);
}

TEST_CASE("quotient_by_central examples") {
  const auto h = heisenberg(3);
  CHECK(quotient_by_central(h, Subspace(3, 1)).group == h);
  const auto ab = quotient_by_central(h, Subspace::full(3, 1));
  CHECK(ab.group == elementary_abelian(3, 2));
  const auto e = extraspecial_p5(3);
  CHECK(quotient_by_central(e, Subspace::full(3, 1)).group == elementary_abelian(3, 4));
  CHECK_THROWS_AS((void)quotient_by_central(e, Subspace(3, 2)), Error);
}

TEST_CASE("hom_from_images examples") {
  const auto h = heisenberg(3);
  const auto id = identity_map(h);
  REQUIRE(id.consistent());
  CHECK(id.commutator_map() == FpMatrix::identity(3, 1));

  const auto fold = hom_from_images(h, h, {h.generator(0), h.generator(0)});
  REQUIRE(fold.consistent());
  CHECK(fold.commutator_map().is_zero());

  const auto e = extraspecial_p5(3);
  const auto bad = hom_from_images(e, h, {h.generator(0), h.generator(1), h.identity(), h.identity()});
  CHECK_FALSE(bad.consistent());
  try {
    (void)bad.commutator_map();
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InconsistentMap);
  }
  CHECK_THROWS_AS((void)is_monomorphism(bad), Error);
}

TEST_CASE("hom_from_images rejects wrong image counts and groups") {
  const auto h = heisenberg(3);
  CHECK_THROWS_AS((void)hom_from_images(h, h, {h.generator(0)}), Error);
  const auto h5 = heisenberg(5);
  CHECK_THROWS_AS((void)hom_from_images(h, h5, {h5.generator(0), h5.generator(1)}), Error);
}

TEST_CASE("is_monomorphism examples") {
  const auto h = heisenberg(3);
  CHECK(is_monomorphism(identity_map(h)).status == MonoStatus::injective);

  const auto fold = hom_from_images(h, h, {h.generator(0), h.generator(0)});
  const auto r = is_monomorphism(fold);
  CHECK(r.status == MonoStatus::not_injective);
  REQUIRE(r.kernel_witness);
  CHECK_FALSE(r.kernel_witness->is_identity());
  CHECK(fold(*r.kernel_witness).is_identity());
  // The center dies as well.
  CHECK(fold(h.element(vec({0, 0}), vec({1}))).is_identity());

  const auto prod = nilpotent2_product(h, cyclic(3));
  CHECK(is_monomorphism(prod.left).status == MonoStatus::injective);
  CHECK(is_monomorphism(prod.right).status == MonoStatus::injective);
}

TEST_CASE("is_monomorphism finds a kernel element on G^ab") {
  // H x C_3 -> H collapsing the direct factor.
  const auto h = heisenberg(3);
  const auto hz = direct_product(h, cyclic(3)).group;
  const auto f = hom_from_images(hz, h, {h.generator(0), h.generator(1), h.identity()});
  REQUIRE(f.consistent());
  const auto r = is_monomorphism(f);
  CHECK(r.status == MonoStatus::not_injective);
  REQUIRE(r.kernel_witness);
  CHECK(f(*r.kernel_witness).is_identity());
  CHECK(is_monomorphism(f, 1).status == MonoStatus::undetermined);
}

TEST_CASE("is_monomorphism scans a nontrivial abelian kernel") {
  // x3 -> z on H x C_5 kills x3 on G^ab; the kernel element is x3 z^-1.
  const auto h = heisenberg(5);
  const auto g = direct_product(h, cyclic(5)).group;
  const auto z = g.element(vec({0, 0, 0}), vec({1}));
  const auto f = hom_from_images(g, g, {g.generator(0), g.generator(1), z});
  REQUIRE(f.consistent());
  CHECK(f.commutator_map() == FpMatrix::identity(5, 1));
  const auto r = is_monomorphism(f);
  CHECK(r.status == MonoStatus::not_injective);
  REQUIRE(r.kernel_witness);
  CHECK(*r.kernel_witness == g.element(vec({0, 0, 1}), vec({4})));
  CHECK(f(*r.kernel_witness).is_identity());
}

TEST_CASE("compose of canonical embeddings") {
  const auto h = heisenberg(3);
  const auto p1 = nilpotent2_product(h, cyclic(3));
  const auto p2 = direct_product(p1.group, cyclic(3));
  const auto f = compose(p2.left, p1.left);
  REQUIRE(f.consistent());
  CHECK(f.domain() == h);
  CHECK(f.codomain() == p2.group);
  for (Index k = 0; k < h.n(); ++k) CHECK(f.images()[k] == p2.left(p1.left(h.generator(k))));
  CHECK(is_monomorphism(f).status == MonoStatus::injective);
}

TEST_CASE("property: group axioms on random presentations") {
  std::mt19937_64 rng(99);
  for (Residue p : {3, 5, 7}) {
    for (int g_trial = 0; g_trial < 15; ++g_trial) {
      const auto g = random_presentation(rng, p, 5);
      for (int t = 0; t < 100; ++t) {
        const auto a = random_element(rng, g);
        const auto b = random_element(rng, g);
        const auto c = random_element(rng, g);
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * a.inverse()).is_identity());
        CHECK((a.inverse() * a).is_identity());
        CHECK(a.pow(p).is_identity());
        const auto k = std::uniform_int_distribution<int>(-20, 20)(rng);
        Element expect = g.identity();
        for (int s = 0; s < (k < 0 ? -k : k); ++s) expect = expect * a;
        if (k < 0) expect = expect.inverse();
        CHECK(a.pow(k) == expect);
        // Class two: commutators are central.
        const auto z = commutator(a, b);
        CHECK((z * c) == (c * z));
      }
    }
  }
}

TEST_CASE("property: center_equals_derived means no generator is central") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_presentation(rng, 3, 5);
    if (!center(g).equals_derived) continue;
    for (Index i = 0; i < g.n(); ++i) {
      bool found = false;
      for (Index j = 0; j < g.n(); ++j) found = found || !commutator(g.generator(i), g.generator(j)).is_identity();
      CHECK(found);
    }
  }
}

TEST_CASE("property: central quotients give consistent surjective projections") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_presentation(rng, 3, 4);
    const auto subs = enumerate_subspaces(3, g.m());
    const auto& n = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
    const auto q = quotient_by_central(g, n);
    REQUIRE(q.projection.consistent());
    CHECK(q.group.n() == g.n());
    CHECK(q.group.m() == g.m() - n.dim());
    CHECK(rank(q.projection.abelian_map()) == g.n());
    CHECK(rank(q.projection.commutator_map()) == q.group.m());
    const auto again = hom_from_images(g, q.group, q.projection.images());
    CHECK(again.consistent());
  }
}
