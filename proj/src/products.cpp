#include "nilp2/products.hpp"

namespace nilp2 {

Identification::Identification(Residue p, Index m_source, Index m_target)
    : p_(p), m_source_(m_source), m_target_(m_target) {}

Identification::Identification(Residue p, Index m_source, Index m_target,
                               std::vector<Vector> h_basis, std::vector<Vector> k_basis)
    : p_(p), m_source_(m_source), m_target_(m_target), h_(std::move(h_basis)), k_(std::move(k_basis)) {
  for (auto& v : h_) v = reduce_mod(v, p_);
  for (auto& v : k_) v = reduce_mod(v, p_);
}

Identification Identification::empty(const Presentation& a, const Presentation& b) {
  return Identification(a.p(), a.m(), b.m());
}

Subspace Identification::source_subspace() const { return Subspace::span(p_, m_source_, h_); }
Subspace Identification::target_subspace() const { return Subspace::span(p_, m_target_, k_); }

void Identification::check_against(const Presentation& a, const Presentation& b) const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidIdentification, why); };
  if (p_ != a.p() || p_ != b.p()) fail("identification prime differs from the groups'");
  if (m_source_ != a.m() || m_target_ != b.m()) {
    fail("identification is sized for commutator spaces of dimension " + std::to_string(m_source_) +
         " and " + std::to_string(m_target_) + ", groups have " + std::to_string(a.m()) + " and " +
         std::to_string(b.m()));
  }
  if (h_.size() != k_.size()) fail("H and K bases have different lengths");
  for (const auto& v : h_) {
    if (v.size() != m_source_) fail("H basis vector has the wrong length");
  }
  for (const auto& v : k_) {
    if (v.size() != m_target_) fail("K basis vector has the wrong length");
  }
  if (static_cast<std::size_t>(source_subspace().dim()) != h_.size()) fail("H basis is not linearly independent");
  if (static_cast<std::size_t>(target_subspace().dim()) != k_.size()) fail("K basis is not linearly independent");
}

namespace {

void require_same_prime(const Presentation& a, const Presentation& b) {
  if (a.p() != b.p()) throw Error(ErrorCode::PrimeMismatch, "product of groups over different primes");
}

// x_k |-> x_{offset + k} with w |-> the commutator block starting at
// `w_offset`.
GeneratorMap block_embedding(const Presentation& factor, const Presentation& product,
                             Index offset) {
  std::vector<Element> images;
  for (Index k = 0; k < factor.n(); ++k) images.push_back(product.generator(offset + k));
  return hom_from_images(factor, product, std::move(images));
}

// Block-diagonal constants for A and B, with `extra` trailing zero
// commutator coordinates reserved for cross terms.
Matrix block_constants(const Presentation& a, const Presentation& b, Index extra) {
  const Index n = a.n() + b.n();
  const Index m = a.m() + b.m() + extra;
  Matrix c = Matrix::Zero(Presentation::pair_count(n), m);
  for (Index j = 1; j < a.n(); ++j) {
    for (Index i = 0; i < j; ++i) {
      c.block(Presentation::pair_index(j, i), 0, 1, a.m()) = a.constant(j, i);
    }
  }
  for (Index j = 1; j < b.n(); ++j) {
    for (Index i = 0; i < j; ++i) {
      c.block(Presentation::pair_index(a.n() + j, a.n() + i), a.m(), 1, b.m()) = b.constant(j, i);
    }
  }
  return c;
}

// Kernel {(h, -phi(h), 0)} inside the block commutator space of width m.
Subspace gluing_kernel(const Presentation& a, const Presentation& b,
                       const Identification& ident, Index m) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < ident.size(); ++r) {
    Vector v = zero_vector(m);
    v.segment(0, a.m()) = ident.h_basis()[r];
    v.segment(a.m(), b.m()) = reduce_mod(-ident.k_basis()[r], a.p());
    rows.push_back(std::move(v));
  }
  return Subspace::span(a.p(), m, rows);
}

ProductResult glue(ProductKind kind, const ProductResult& base, const Presentation& a,
                   const Presentation& b, const Identification& ident, Origin origin) {
  const auto q = quotient_by_central(base.group, gluing_kernel(a, b, ident, base.group.m()));
  Presentation g = q.group.with_origin(origin);
  // Re-target the projection at the tagged presentation (entry-identical).
  std::vector<Element> images;
  for (Index k = 0; k < g.n(); ++k) images.push_back(g.generator(k));
  const GeneratorMap proj = hom_from_images(base.group, g, std::move(images));
  return ProductResult{kind, g, compose(proj, base.left), compose(proj, base.right)};
}

}  // namespace

ProductResult direct_product(const Presentation& a, const Presentation& b) {
  require_same_prime(a, b);
  const Presentation g =
      Presentation::from_constants(FpMatrix(a.p(), block_constants(a, b, 0)), a.n() + b.n());
  return ProductResult{ProductKind::direct, g, block_embedding(a, g, 0), block_embedding(b, g, a.n())};
}

ProductResult nilpotent2_product(const Presentation& a, const Presentation& b) {
  require_same_prime(a, b);
  const Index tensor = a.n() * b.n();
  Matrix c = block_constants(a, b, tensor);
  const Index base = a.m() + b.m();
  // [b_j, a_i] |-> coordinate of b_j (x) a_i.
  for (Index j = 0; j < b.n(); ++j) {
    for (Index i = 0; i < a.n(); ++i) {
      c(Presentation::pair_index(a.n() + j, i), base + j * a.n() + i) = 1;
    }
  }
  const Origin origin =
      (!a.is_trivial() && !b.is_trivial()) ? Origin::amalgam_of_nontrivial : Origin::unspecified;
  const Presentation g =
      Presentation::from_constants(FpMatrix(a.p(), c), a.n() + b.n(), {}, origin);
  return ProductResult{ProductKind::nilpotent2, g, block_embedding(a, g, 0),
                       block_embedding(b, g, a.n())};
}

ProductResult central_product_identified(const Presentation& a, const Presentation& b,
                                         const Identification& ident) {
  require_same_prime(a, b);
  ident.check_against(a, b);
  return glue(ProductKind::central, direct_product(a, b), a, b, ident, Origin::unspecified);
}

ProductResult amalgamated_coproduct(const Presentation& a, const Presentation& b,
                                    const Identification& ident) {
  require_same_prime(a, b);
  if (a.is_trivial() || b.is_trivial()) {
    throw Error(ErrorCode::TrivialFactor, "amalgamated coproduct needs nontrivial factors");
  }
  ident.check_against(a, b);
  return glue(ProductKind::amalgam, nilpotent2_product(a, b), a, b, ident,
              Origin::amalgam_of_nontrivial);
}

Subspace embedded_intersection(const ProductResult& r) {
  return intersect(row_space(r.left.commutator_map()), row_space(r.right.commutator_map()));
}

Subspace identified_image(const ProductResult& r, const Identification& ident) {
  return image(ident.source_subspace(), r.left.commutator_map());
}

}  // namespace nilp2
