#include <doctest.h>

#include <cstdio>

#include "helpers.hpp"
#include "nilp2/acceptance.hpp"
#include "nilp2/constructions.hpp"
#include "nilp2/io.hpp"
#include "nilp2/report.hpp"

using namespace nilp2;
using nilp2::test::vec;

namespace {

Error parse_error(const std::string& text) {
  try {
    (void)parse_group(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("parse accepted bad input");
  return Error(ErrorCode::Io, "unreachable");
}

}  // namespace

TEST_CASE("parse the heisenberg file") {
  const auto g = parse_group("nilp2 v1\np 3\nn 2\nm 1\nc 2 1 1\n");
  CHECK(g == heisenberg(3));
  CHECK(write_group(g) == "nilp2 v1\np 3\nn 2\nm 1\nc 2 1 1\n");
  CHECK(parse_group(write_group(g)) == g);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto g = parse_group("# a comment\n\nnilp2 v1  # magic\np 3\n\nn 2\nm 1\n  c 2 1 1   # the relation\n");
  CHECK(g == heisenberg(3));
}

TEST_CASE("parse errors carry line numbers") {
  const auto bad_index = parse_error("nilp2 v1\np 3\nn 2\nm 1\nc 1 2 1\n");
  CHECK(bad_index.code() == ErrorCode::BadIndex);
  CHECK(bad_index.line() == 5);

  const auto dup = parse_error("nilp2 v1\np 3\nn 2\nm 1\nc 2 1 1\nc 2 1 2\n");
  CHECK(dup.code() == ErrorCode::ParseError);
  CHECK(dup.line() == 6);

  CHECK(parse_error("nilp2 v2\np 3\nn 2\nm 1\n").code() == ErrorCode::BadMagic);
  CHECK(parse_error("").code() == ErrorCode::BadMagic);
  CHECK(parse_error("nilp2 v1\nn 2\np 3\nm 1\n").code() == ErrorCode::ParseError);
  CHECK(parse_error("nilp2 v1\np 3\nn 2\nm 1\nc 2 1\n").code() == ErrorCode::ParseError);
  CHECK(parse_error("nilp2 v1\np 3\nn 2\nm 1\nc 2 1 x\n").code() == ErrorCode::ParseError);
  CHECK(parse_error("nilp2 v1\np 3\nn 2\nm 1\nq 2 1 1\n").code() == ErrorCode::ParseError);

  const auto range = parse_error("nilp2 v1\np 3\nn 2\nm 1\nc 2 1 3\n");
  CHECK(range.code() == ErrorCode::EntryOutOfRange);
  CHECK(range.line() == 5);

  const auto even = parse_error("nilp2 v1\np 4\nn 2\nm 1\nc 2 1 1\n");
  CHECK(even.code() == ErrorCode::NotOddPrime);
  CHECK(even.line() == 2);

  const auto big = parse_error("nilp2 v1\np 3\nn 3\nm 1\nc 4 1 1\n");
  CHECK(big.code() == ErrorCode::BadIndex);

  CHECK(parse_error("nilp2 v1\np 3\nn 2\nm 2\nc 2 1 1 0\n").code() == ErrorCode::SpanDeficit);
  CHECK(std::string(dup.what()).find("line 6") != std::string::npos);
}

TEST_CASE("identification files") {
  const auto h = heisenberg(3);
  const Identification id(3, 1, 1, {vec({1})}, {vec({1})});
  CHECK(write_identification(id) == "id 1 -> 1\n");
  CHECK(parse_identification("id 1 -> 1\n", h, h) == id);
  CHECK(parse_identification("# nothing\n", h, h).empty());
  CHECK_THROWS_AS((void)parse_identification("id 1 1 -> 1\n", h, h), Error);
  CHECK_THROWS_AS((void)parse_identification("id 1 1\n", h, h), Error);
  CHECK_THROWS_AS((void)parse_identification("id 0 -> 1\n", h, h), Error);
  CHECK_THROWS_AS((void)parse_identification("id 1 -> 1\n", h, cyclic(3)), Error);
}

TEST_CASE("map files") {
  const auto h = heisenberg(3);
  const auto r = nilpotent2_product(h, cyclic(3));
  const auto text = write_map(r.left);
  CHECK(text == "gen 1 -> 1 0 0 | 0 0 0\ngen 2 -> 0 1 0 | 0 0 0\n");
  const auto back = parse_map(text, h, r.group);
  REQUIRE(back.consistent());
  CHECK(back.images() == r.left.images());
  CHECK(back.commutator_map() == r.left.commutator_map());
  CHECK_THROWS_AS((void)parse_map("gen 1 -> 1 0 0 | 0 0 0\n", h, r.group), Error);
  CHECK_THROWS_AS((void)parse_map("gen 1 -> 1 0 | 0 0 0\ngen 2 -> 0 1 0 | 0 0 0\n", h, r.group), Error);
  CHECK_THROWS_AS((void)parse_map("gen 3 -> 1 0 0 | 0 0 0\ngen 2 -> 0 1 0 | 0 0 0\n", h, r.group), Error);

  const auto e = extraspecial_p5(3);
  const auto bad = parse_map(
      "gen 1 -> 1 0 | 0\ngen 2 -> 0 1 | 0\ngen 3 -> 0 0 | 0\ngen 4 -> 0 0 | 0\n", e, h);
  CHECK_FALSE(bad.consistent());
}

TEST_CASE("trivial and abelian groups round-trip") {
  for (const auto& g : {Presentation::validate({3, 0, 0, {}, ""}), elementary_abelian(5, 3)}) {
    CHECK(parse_group(write_group(g)) == g);
  }
  CHECK(write_group(elementary_abelian(5, 2)) == "nilp2 v1\np 5\nn 2\nm 0\n");
}

TEST_CASE("property: round trip on random objects") {
  std::mt19937_64 rng(8080);
  for (int t = 0; t < 100; ++t) {
    const Residue p = t % 2 ? 3 : 5;
    const auto a = random_presentation(rng, p, 4);
    const auto b = random_presentation(rng, p, 4);
    CHECK(parse_group(write_group(a)) == a);
    CHECK(write_group(parse_group(write_group(a))) == write_group(a));

    const auto r = nilpotent2_product(a, b);
    const auto back = parse_map(write_map(r.right), b, r.group);
    CHECK(back.images() == r.right.images());
    CHECK(write_map(back) == write_map(r.right));

    if (a.m() > 0 && b.m() > 0) {
      Vector h = test::random_vector(rng, p, a.m());
      Vector k = test::random_vector(rng, p, b.m());
      h(0) = 1;
      k(0) = 1;
      const Identification id(p, a.m(), b.m(), {h}, {k});
      CHECK(parse_identification(write_identification(id), a, b) == id);
    }
  }
}

TEST_CASE("report rendering") {
  Report r;
  add_shape(r, heisenberg(3));
  add_verdict(r, capability_verdict(heisenberg(3)));
  const auto text = r.render();
  CHECK(text ==
        "verdict = capable\n"
        "method = epicentre_trivial\n"
        "epicentre_dim = 0\n"
        "epicentre_basis = none\n"
        "n = 2\n"
        "m = 1\n"
        "order_exp = 3\n"
        "rp_status = -\n"
        "rp_reasons = -\n"
        "bound_claimed = -\n"
        "bound_actual = -\n"
        "bound_ok = -\n"
        "embedding_ok = -\n");
  CHECK_THROWS((void)r.get("no_such_key"));

  const auto ext = extension_report(build_noncapable_extension(heisenberg(3))).render();
  CHECK(ext.find("bound_claimed = 6\n") != std::string::npos);
  CHECK(ext.find("bound_actual = 6\n") != std::string::npos);
  CHECK(ext.find("bound_ok = true\n") != std::string::npos);
  CHECK(ext.find("verdict = not_capable\n") != std::string::npos);
  CHECK(ext.find("epicentre_dim = 1\n") != std::string::npos);
}

TEST_CASE("file helpers") {
  const std::string path = "nilp2_io_test.grp";
  write_text_file(path, write_group(extraspecial_p5(5)));
  CHECK(load_group(path) == extraspecial_p5(5));
  std::remove(path.c_str());
  try {
    (void)load_group("definitely/not/here.grp");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
