#include <doctest.h>

#include "helpers.hpp"
#include "nilp2/acceptance.hpp"
#include "nilp2/capability.hpp"
#include "nilp2/constructions.hpp"
#include "nilp2/products.hpp"

using namespace nilp2;
using nilp2::test::vec;

namespace {

Identification centers(const Presentation& a, const Presentation& b) {
  return Identification(a.p(), a.m(), b.m(), {vec({1})}, {vec({1})});
}

void check_embeddings(const ProductResult& r) {
  REQUIRE(r.left.consistent());
  REQUIRE(r.right.consistent());
  CHECK(is_monomorphism(r.left).status == MonoStatus::injective);
  CHECK(is_monomorphism(r.right).status == MonoStatus::injective);
}

}  // namespace

TEST_CASE("direct product examples") {
  const auto c = direct_product(cyclic(3), cyclic(3));
  CHECK(c.group.n() == 2);
  CHECK(c.group.m() == 0);

  const auto hc = direct_product(heisenberg(3), cyclic(3));
  CHECK(hc.group.n() == 3);
  CHECK(hc.group.m() == 1);
  CHECK(hc.group.constant(2, 0).isZero());
  CHECK(hc.group.constant(2, 1).isZero());

  const auto hh = direct_product(heisenberg(3), heisenberg(3));
  CHECK(hh.group.n() == 4);
  CHECK(hh.group.m() == 2);
  CHECK(hh.group.constant(1, 0) == vec({1, 0}));
  CHECK(hh.group.constant(3, 2) == vec({0, 1}));
  CHECK(hh.group.nonzero_pairs().size() == 2);
  check_embeddings(hh);
}

TEST_CASE("products reject a prime mismatch") {
  try {
    (void)direct_product(heisenberg(3), heisenberg(5));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrimeMismatch);
  }
  CHECK_THROWS_AS((void)nilpotent2_product(cyclic(3), cyclic(5)), Error);
}

TEST_CASE("2-nilpotent product examples") {
  const auto h = nilpotent2_product(cyclic(3), cyclic(3));
  CHECK(h.group == heisenberg(3));

  const auto a = nilpotent2_product(elementary_abelian(3, 2), cyclic(3));
  CHECK(a.group.n() == 3);
  CHECK(a.group.m() == 2);
  CHECK(a.group.order_exponent() == 5);

  const auto hc = nilpotent2_product(heisenberg(3), cyclic(3));
  CHECK(hc.group.n() == 3);
  CHECK(hc.group.m() == 3);
  CHECK(hc.group.order_exponent() == 6);
  // [A,A] first, then tensor coordinates b_1 (x) a_1, b_1 (x) a_2.
  CHECK(hc.group.constant(1, 0) == vec({1, 0, 0}));
  CHECK(hc.group.constant(2, 0) == vec({0, 1, 0}));
  CHECK(hc.group.constant(2, 1) == vec({0, 0, 1}));
  check_embeddings(hc);
  CHECK(hc.group.origin() == Origin::amalgam_of_nontrivial);
}

TEST_CASE("2-nilpotent product with a trivial factor") {
  const auto t = Presentation::validate({3, 0, 0, {}, ""});
  const auto r = nilpotent2_product(heisenberg(3), t);
  CHECK(r.group == heisenberg(3));
  CHECK(r.group.origin() == Origin::unspecified);
}

TEST_CASE("central product examples") {
  const auto h = heisenberg(3);
  const auto e = central_product_identified(h, h, centers(h, h));
  CHECK(e.group.n() == 4);
  CHECK(e.group.m() == 1);
  CHECK(e.group == extraspecial_p5(3));
  check_embeddings(e);

  const auto d = central_product_identified(h, cyclic(3), Identification::empty(h, cyclic(3)));
  CHECK(d.group == direct_product(h, cyclic(3)).group);

  const auto c2 = elementary_abelian(3, 2);
  try {
    (void)central_product_identified(h, c2, Identification(3, 1, 0, {vec({1})}, {Vector(0)}));
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InvalidIdentification);
  }
}

TEST_CASE("identifications are validated") {
  const auto h = heisenberg(3);
  const auto hh = direct_product(h, h).group;
  // Dependent source vectors.
  CHECK_THROWS_AS(Identification(3, 2, 2, {vec({1, 0}), vec({2, 0})}, {vec({1, 0}), vec({0, 1})})
                      .check_against(hh, hh),
                  Error);
  // Length mismatch.
  CHECK_THROWS_AS(Identification(3, 2, 2, {vec({1, 0})}, {vec({1, 0}), vec({0, 1})}).check_against(hh, hh),
                  Error);
  // Zero vector.
  CHECK_THROWS_AS(Identification(3, 1, 1, {vec({0})}, {vec({1})}).check_against(h, h), Error);
  // Wrong ambient size.
  CHECK_THROWS_AS(Identification(3, 2, 1, {vec({1, 0})}, {vec({1})}).check_against(h, h), Error);
  CHECK_NOTHROW(centers(h, h).check_against(h, h));
}

TEST_CASE("amalgamated coproduct examples") {
  const auto h = heisenberg(3);
  const auto hh = amalgamated_coproduct(h, h, centers(h, h));
  CHECK(hh.group.n() == 4);
  CHECK(hh.group.m() == 5);
  CHECK(hh.group.order_exponent() == 9);
  check_embeddings(hh);
  CHECK(hh.group.origin() == Origin::amalgam_of_nontrivial);

  const auto plain = amalgamated_coproduct(h, cyclic(3), Identification::empty(h, cyclic(3)));
  CHECK(plain.group == nilpotent2_product(h, cyclic(3)).group);

  const auto e = extraspecial_p5(3);
  const auto he = amalgamated_coproduct(h, e, centers(h, e));
  CHECK(he.group.n() == 6);
  CHECK(he.group.m() == 9);
  check_embeddings(he);
}

TEST_CASE("amalgamated coproduct rejects a trivial factor") {
  const auto t = Presentation::validate({3, 0, 0, {}, ""});
  try {
    (void)amalgamated_coproduct(heisenberg(3), t, Identification::empty(heisenberg(3), t));
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::TrivialFactor);
  }
}

TEST_CASE("embedded copies meet exactly in the identified subgroup") {
  const auto h = heisenberg(3);
  const auto e = extraspecial_p5(3);
  for (const auto& r : {amalgamated_coproduct(h, e, centers(h, e)), central_product_identified(h, h, centers(h, h)),
                        amalgamated_coproduct(h, h, centers(h, h))}) {
    const Identification id = centers(h, h);
    const auto meet = embedded_intersection(r);
    CHECK(meet.dim() == 1);
    CHECK(meet == identified_image(r, id));
  }
  const auto plain = nilpotent2_product(h, h);
  CHECK(embedded_intersection(plain).is_zero());
}

TEST_CASE("property: product laws on random pairs") {
  std::mt19937_64 rng(314);
  for (Residue p : {3, 5}) {
    for (int t = 0; t < 25; ++t) {
      const auto a = random_presentation(rng, p, 3);
      const auto b = random_presentation(rng, p, 3);
      const auto n2 = nilpotent2_product(a, b);
      CHECK(n2.group.m() - a.m() - b.m() == a.n() * b.n());
      check_embeddings(n2);

      const auto d = direct_product(a, b);
      CHECK(d.group.m() == a.m() + b.m());
      check_embeddings(d);

      // Generators swapped: B *2 A is the same group.
      const auto swapped = nilpotent2_product(b, a).group;
      CHECK(swapped.n() == n2.group.n());
      CHECK(swapped.m() == n2.group.m());
      std::vector<Element> images;
      for (Index k = 0; k < a.n(); ++k) images.push_back(swapped.generator(b.n() + k));
      for (Index k = 0; k < b.n(); ++k) images.push_back(swapped.generator(k));
      const auto perm = hom_from_images(n2.group, swapped, images);
      REQUIRE(perm.consistent());
      CHECK(is_monomorphism(perm).status == MonoStatus::injective);

      if (a.m() == 0 || b.m() == 0) continue;
      const Identification id(p, a.m(), b.m(), {unit_vector(a.m(), 0)}, {unit_vector(b.m(), b.m() - 1)});
      const auto am = amalgamated_coproduct(a, b, id);
      CHECK(am.group.m() == a.m() + b.m() + a.n() * b.n() - 1);
      check_embeddings(am);
      CHECK(center(am.group).equals_derived);
      CHECK(embedded_intersection(am) == identified_image(am, id));
      CHECK(embedded_intersection(am).dim() == 1);

      const auto cp = central_product_identified(a, b, id);
      CHECK(cp.group.m() == a.m() + b.m() - 1);
      check_embeddings(cp);
      CHECK(embedded_intersection(cp) == identified_image(cp, id));
    }
  }
}
