#ifndef NILP2_PRODUCTS_HPP
#define NILP2_PRODUCTS_HPP

// Constructors for direct, 2-nilpotent, central and amalgamated products.
// A's generators always come first. In the 2-nilpotent product the
// commutator coordinates are [A,A], then [B,B], then one coordinate per
// b_j (x) a_i ordered lexicographically by (j, i).

#include <vector>

#include "nilp2/group.hpp"

namespace nilp2 {

// phi(h[r]) = k[r]: an isomorphism between H <= [A,A] and K <= [B,B],
// both given in commutator coordinates.
class Identification {
 public:
  Identification(Residue p, Index m_source, Index m_target);
  Identification(Residue p, Index m_source, Index m_target,
                 std::vector<Vector> h_basis, std::vector<Vector> k_basis);

  static Identification empty(const Presentation& a, const Presentation& b);

  Residue p() const noexcept { return p_; }
  Index source_dim() const noexcept { return m_source_; }
  Index target_dim() const noexcept { return m_target_; }
  std::size_t size() const noexcept { return h_.size(); }
  bool empty() const noexcept { return h_.empty(); }
  const std::vector<Vector>& h_basis() const noexcept { return h_; }
  const std::vector<Vector>& k_basis() const noexcept { return k_; }

  Subspace source_subspace() const;
  Subspace target_subspace() const;

  // Throws InvalidIdentification unless both lists are independent, equally
  // long and sized for A's and B's commutator spaces.
  void check_against(const Presentation& a, const Presentation& b) const;

  friend bool operator==(const Identification& x, const Identification& y) {
    return x.p_ == y.p_ && x.m_source_ == y.m_source_ && x.m_target_ == y.m_target_ &&
           x.h_ == y.h_ && x.k_ == y.k_;
  }

 private:
  Residue p_;
  Index m_source_;
  Index m_target_;
  std::vector<Vector> h_;
  std::vector<Vector> k_;
};

enum class ProductKind { direct, nilpotent2, central, amalgam };

struct ProductResult {
  ProductKind kind;
  Presentation group;
  GeneratorMap left;   // A -> product
  GeneratorMap right;  // B -> product
};

ProductResult direct_product(const Presentation& a, const Presentation& b);
ProductResult nilpotent2_product(const Presentation& a, const Presentation& b);
ProductResult central_product_identified(const Presentation& a, const Presentation& b,
                                         const Identification& ident);
ProductResult amalgamated_coproduct(const Presentation& a, const Presentation& b,
                                    const Identification& ident);

// Intersection of the two embedded copies. Both copies meet only inside the
// commutator subgroup, so this is a subspace of the product's F_p^m.
Subspace embedded_intersection(const ProductResult& r);

// The identified subgroup as seen inside the product (image of H).
Subspace identified_image(const ProductResult& r, const Identification& ident);

}  // namespace nilp2

#endif  // NILP2_PRODUCTS_HPP
