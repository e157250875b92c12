#ifndef NILP2_GROUP_HPP
#define NILP2_GROUP_HPP

// Groups of nilpotency class at most two and odd prime exponent p.
//
// A presentation fixes generators x_1..x_n representing a basis of G^ab and
// a basis of [G,G] = F_p^m. The structure constant c(j,i), j > i, holds the
// coordinates of [x_j, x_i]. Every element has the unique normal form
//
//   x_1^{v_1} ... x_n^{v_n} * (commutator with coordinates w)
//
// and products are collected by moving higher generators of the left factor
// past lower generators of the right factor:
//
//   (v, w)(v', w') = (v + v', w + w' + delta(v, v')),
//   delta(v, v')   = sum_{j > i} v_j v'_i c(j, i).
//
// Indices are 0-based in the API; the file format is 1-based.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilp2/fp_linalg.hpp"

namespace nilp2 {

inline constexpr std::uint64_t kDefaultMaxOrder = 243;

// Set by the product constructors for groups they build as a 2-nilpotent
// product or amalgamated coproduct of two nontrivial factors. Does not take
// part in equality.
enum class Origin { unspecified, amalgam_of_nontrivial };

// Unvalidated presentation data as read from a file or assembled by hand.
struct RawPresentation {
  struct Entry {
    Index j = 0;  // 0-based, must satisfy j > i
    Index i = 0;
    std::vector<Residue> coords;
  };
  Residue p = 0;
  Index n = 0;
  Index m = 0;
  std::vector<Entry> entries;
  std::string label;
};

class Element;

class Presentation {
 public:
  static Presentation validate(const RawPresentation& raw);

  // `constants` has one row per pair (j, i), j > i, in pair_index order and m
  // columns.
  static Presentation from_constants(const FpMatrix& constants, Index n,
                                     std::string label = {},
                                     Origin origin = Origin::unspecified);

  static Index pair_count(Index n) noexcept { return n * (n - 1) / 2; }
  // (j, i) with j > i, ordered (1,0), (2,0), (2,1), (3,0), ...: lexicographic
  // in (j, i).
  static Index pair_index(Index j, Index i) noexcept { return j * (j - 1) / 2 + i; }

  Residue p() const noexcept { return data_->constants.p(); }
  const PrimeField& field() const noexcept { return data_->constants.field(); }
  Index n() const noexcept { return data_->n; }
  Index m() const noexcept { return data_->constants.cols(); }
  Index order_exponent() const noexcept { return n() + m(); }
  const std::string& label() const noexcept { return data_->label; }
  Origin origin() const noexcept { return data_->origin; }

  bool is_trivial() const noexcept { return n() == 0; }
  bool is_abelian() const noexcept { return m() == 0; }

  const FpMatrix& constants() const noexcept { return data_->constants; }
  Vector constant(Index j, Index i) const;  // c(j, i), j > i
  Vector kappa(Index j, Index i) const;     // coordinates of [x_j, x_i], any j, i

  // Pairs (j, i), j > i, with c(j, i) != 0, lexicographic.
  std::vector<std::pair<Index, Index>> nonzero_pairs() const;

  // delta(v, v') of the collection rule.
  Vector collect(const Vector& v, const Vector& vp) const;
  // The alternating form: coordinates of [x^v, x^u].
  Vector form(const Vector& v, const Vector& u) const;

  Element identity() const;
  Element generator(Index k) const;
  Element element(const Vector& v, const Vector& w) const;

  Presentation with_label(std::string label) const;
  Presentation with_origin(Origin origin) const;

  bool same_object(const Presentation& other) const noexcept { return data_ == other.data_; }

  // Entry-identical: same p, n, m and structure constants.
  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.data_ == b.data_ || (a.n() == b.n() && a.constants() == b.constants());
  }

 private:
  struct Data {
    Index n;
    FpMatrix constants;
    std::string label;
    Origin origin;
  };
  explicit Presentation(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

class Element {
 public:
  const Presentation& group() const noexcept { return group_; }
  const Vector& v() const noexcept { return v_; }
  const Vector& w() const noexcept { return w_; }

  bool is_identity() const;
  bool is_central_candidate() const;  // v == 0

  Element operator*(const Element& rhs) const;
  Element inverse() const;
  Element pow(std::int64_t k) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.group_ == b.group_ && a.v_ == b.v_ && a.w_ == b.w_;
  }

 private:
  friend class Presentation;
  Element(Presentation g, Vector v, Vector w)
      : group_(std::move(g)), v_(std::move(v)), w_(std::move(w)) {}

  Presentation group_;
  Vector v_;
  Vector w_;
};

Element commutator(const Element& a, const Element& b);

// A map given by generator images, together with the linear map it induces
// on commutator coordinates when it extends to a homomorphism.
class GeneratorMap {
 public:
  GeneratorMap(Presentation domain, Presentation codomain,
               std::vector<Element> images, std::optional<FpMatrix> commutator_map);

  const Presentation& domain() const noexcept { return domain_; }
  const Presentation& codomain() const noexcept { return codomain_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  bool consistent() const noexcept { return commutator_map_.has_value(); }

  // m_dom x m_cod; throws InconsistentMap when no homomorphism exists.
  const FpMatrix& commutator_map() const;
  // n_dom x n_cod, the v-parts of the images.
  FpMatrix abelian_map() const;

  Element operator()(const Element& x) const;

 private:
  Presentation domain_;
  Presentation codomain_;
  std::vector<Element> images_;
  std::optional<FpMatrix> commutator_map_;
};

GeneratorMap hom_from_images(const Presentation& domain, const Presentation& codomain,
                             std::vector<Element> images);
GeneratorMap identity_map(const Presentation& g);
// outer after inner.
GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner);

enum class MonoStatus { injective, not_injective, undetermined };

struct MonoResult {
  MonoStatus status = MonoStatus::undetermined;
  std::optional<Element> kernel_witness;  // nontrivial element mapped to e
};

// Injectivity of a consistent map. When the abelianized map is injective
// the answer is read off the two linear parts. Otherwise the candidate
// kernel is scanned over ker(abelian_map), which is exact as long as that
// kernel has at most `cap` elements; above it the status is undetermined.
MonoResult is_monomorphism(const GeneratorMap& f, std::uint64_t cap = kDefaultMaxOrder);

struct CenterInfo {
  Subspace radical;  // image of Z(G) in G^ab
  bool equals_derived = false;
};

CenterInfo center(const Presentation& g);

struct Quotient {
  Presentation group;
  GeneratorMap projection;
};

// G / N for N <= [G,G] given in commutator coordinates.
Quotient quotient_by_central(const Presentation& g, const Subspace& n);

}  // namespace nilp2

#endif  // NILP2_GROUP_HPP
