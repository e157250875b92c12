#include "nilp2/group.hpp"

#include <set>

namespace nilp2 {

Presentation Presentation::validate(const RawPresentation& raw) {
  const PrimeField field(raw.p);
  if (raw.n < 0 || raw.m < 0) {
    throw Error(ErrorCode::BadIndex, "n and m must be nonnegative");
  }
  Matrix c = Matrix::Zero(pair_count(raw.n), raw.m);
  std::set<std::pair<Index, Index>> seen;
  for (const auto& e : raw.entries) {
    if (e.j <= e.i || e.i < 0 || e.j >= raw.n) {
      throw Error(ErrorCode::BadIndex,
                  "structure constant index (" + std::to_string(e.j + 1) + "," +
                      std::to_string(e.i + 1) + ") needs n >= j > i >= 1");
    }
    if (!seen.emplace(e.j, e.i).second) {
      throw Error(ErrorCode::BadIndex, "duplicate structure constant for (" +
                                           std::to_string(e.j + 1) + "," +
                                           std::to_string(e.i + 1) + ")");
    }
    if (static_cast<Index>(e.coords.size()) != raw.m) {
      throw Error(ErrorCode::DimensionMismatch,
                  "structure constant has " + std::to_string(e.coords.size()) +
                      " entries, expected m = " + std::to_string(raw.m));
    }
    for (std::size_t a = 0; a < e.coords.size(); ++a) {
      if (e.coords[a] < 0 || e.coords[a] >= raw.p) {
        throw Error(ErrorCode::EntryOutOfRange,
                    "entry " + std::to_string(e.coords[a]) + " is not in [0, p)");
      }
      c(pair_index(e.j, e.i), static_cast<Index>(a)) = e.coords[a];
    }
  }
  return from_constants(FpMatrix(raw.p, c), raw.n, raw.label);
}

Presentation Presentation::from_constants(const FpMatrix& constants, Index n,
                                          std::string label, Origin origin) {
  if (n < 0 || constants.rows() != pair_count(n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "structure constant table needs one row per pair j > i");
  }
  const Index r = rank(constants);
  if (r != constants.cols()) {
    throw Error(ErrorCode::SpanDeficit,
                "structure constants span a space of dimension " + std::to_string(r) +
                    ", expected m = " + std::to_string(constants.cols()));
  }
  return Presentation(std::make_shared<const Data>(Data{n, constants, std::move(label), origin}));
}

Vector Presentation::constant(Index j, Index i) const {
  if (j <= i || i < 0 || j >= n()) throw Error(ErrorCode::BadIndex, "constant(j, i) needs n > j > i >= 0");
  return constants().row(pair_index(j, i));
}

Vector Presentation::kappa(Index j, Index i) const {
  if (j == i) return zero_vector(m());
  return j > i ? constant(j, i) : reduce_mod(-constant(i, j), p());
}

std::vector<std::pair<Index, Index>> Presentation::nonzero_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index j = 1; j < n(); ++j) {
    for (Index i = 0; i < j; ++i) {
      if ((constants().entries().row(pair_index(j, i)).array() != 0).any()) out.emplace_back(j, i);
    }
  }
  return out;
}

Vector Presentation::collect(const Vector& v, const Vector& vp) const {
  Vector out = zero_vector(m());
  if (m() == 0) return out;
  const Residue q = p();
  const Matrix& c = constants().entries();
  for (Index j = 1; j < n(); ++j) {
    if (v(j) == 0) continue;
    for (Index i = 0; i < j; ++i) {
      const Residue coef = (v(j) * vp(i)) % q;
      if (coef == 0) continue;
      out += coef * c.row(pair_index(j, i));
    }
  }
  return reduce_mod(out, q);
}

Vector Presentation::form(const Vector& v, const Vector& u) const {
  Vector out = zero_vector(m());
  if (m() == 0) return out;
  const Residue q = p();
  const Matrix& c = constants().entries();
  for (Index j = 1; j < n(); ++j) {
    for (Index i = 0; i < j; ++i) {
      const Residue coef = ((v(j) * u(i) - u(j) * v(i)) % q + q) % q;
      if (coef == 0) continue;
      out += coef * c.row(pair_index(j, i));
    }
  }
  return reduce_mod(out, q);
}

Element Presentation::identity() const { return Element(*this, zero_vector(n()), zero_vector(m())); }

Element Presentation::generator(Index k) const {
  if (k < 0 || k >= n()) throw Error(ErrorCode::BadIndex, "generator index out of range");
  return Element(*this, unit_vector(n(), k), zero_vector(m()));
}

Element Presentation::element(const Vector& v, const Vector& w) const {
  if (v.size() != n() || w.size() != m()) {
    throw Error(ErrorCode::DimensionMismatch, "element coordinates do not match (n, m)");
  }
  return Element(*this, reduce_mod(v, p()), reduce_mod(w, p()));
}

Presentation Presentation::with_label(std::string label) const {
  auto d = *data_;
  d.label = std::move(label);
  return Presentation(std::make_shared<const Data>(std::move(d)));
}

Presentation Presentation::with_origin(Origin origin) const {
  auto d = *data_;
  d.origin = origin;
  return Presentation(std::make_shared<const Data>(std::move(d)));
}

bool Element::is_identity() const {
  return (v_.array() == 0).all() && (w_.array() == 0).all();
}

bool Element::is_central_candidate() const { return (v_.array() == 0).all(); }

namespace {

void require_same_group(const Presentation& a, const Presentation& b) {
  if (!(a == b)) throw Error(ErrorCode::PresentationMismatch, "elements belong to different presentations");
}

}  // namespace

Element Element::operator*(const Element& rhs) const {
  require_same_group(group_, rhs.group_);
  const Residue q = group_.p();
  Vector w = reduce_mod(w_ + rhs.w_ + group_.collect(v_, rhs.v_), q);
  return Element(group_, reduce_mod(v_ + rhs.v_, q), std::move(w));
}

Element Element::inverse() const {
  const Residue q = group_.p();
  return Element(group_, reduce_mod(-v_, q), reduce_mod(-w_ + group_.collect(v_, v_), q));
}

Element Element::pow(std::int64_t k) const {
  const Residue q = group_.p();
  // Exponent p: a^k depends only on k mod p, because p divides C(p, 2).
  const Residue kk = ((k % q) + q) % q;
  const Residue binom = (kk * (kk - 1) / 2) % q;
  return Element(group_, reduce_mod(kk * v_, q),
                 reduce_mod(kk * w_ + binom * group_.collect(v_, v_), q));
}

Element commutator(const Element& a, const Element& b) {
  require_same_group(a.group(), b.group());
  const auto& g = a.group();
  return g.element(zero_vector(g.n()), g.form(a.v(), b.v()));
}

GeneratorMap::GeneratorMap(Presentation domain, Presentation codomain,
                           std::vector<Element> images,
                           std::optional<FpMatrix> commutator_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)),
      commutator_map_(std::move(commutator_map)) {}

const FpMatrix& GeneratorMap::commutator_map() const {
  if (!commutator_map_) {
    throw Error(ErrorCode::InconsistentMap, "generator images do not extend to a homomorphism");
  }
  return *commutator_map_;
}

FpMatrix GeneratorMap::abelian_map() const {
  Matrix a(domain_.n(), codomain_.n());
  for (Index k = 0; k < domain_.n(); ++k) a.row(k) = images_[static_cast<std::size_t>(k)].v();
  return FpMatrix(codomain_.p(), a);
}

Element GeneratorMap::operator()(const Element& x) const {
  require_same_group(x.group(), domain_);
  Element out = codomain_.identity();
  for (Index k = 0; k < domain_.n(); ++k) {
    if (x.v()(k) != 0) out = out * images_[static_cast<std::size_t>(k)].pow(x.v()(k));
  }
  const Vector wl = commutator_map().apply(x.w());
  return out * codomain_.element(zero_vector(codomain_.n()), wl);
}

GeneratorMap hom_from_images(const Presentation& domain, const Presentation& codomain,
                             std::vector<Element> images) {
  if (domain.p() != codomain.p()) throw Error(ErrorCode::PrimeMismatch, "homomorphism between groups over different primes");
  if (static_cast<Index>(images.size()) != domain.n()) {
    throw Error(ErrorCode::DimensionMismatch, "need one image per domain generator");
  }
  for (const auto& img : images) require_same_group(img.group(), codomain);

  // L has to send c_dom(j, i) to the coordinates of [img_j, img_i].
  Matrix rhs(Presentation::pair_count(domain.n()), codomain.m());
  for (Index j = 1; j < domain.n(); ++j) {
    for (Index i = 0; i < j; ++i) {
      rhs.row(Presentation::pair_index(j, i)) =
          codomain.form(images[static_cast<std::size_t>(j)].v(), images[static_cast<std::size_t>(i)].v());
    }
  }
  auto l = solve_matrix(domain.constants(), FpMatrix(domain.p(), rhs));
  return GeneratorMap(domain, codomain, std::move(images), std::move(l));
}

GeneratorMap identity_map(const Presentation& g) {
  std::vector<Element> images;
  for (Index k = 0; k < g.n(); ++k) images.push_back(g.generator(k));
  return GeneratorMap(g, g, std::move(images), FpMatrix::identity(g.p(), g.m()));
}

GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner) {
  require_same_group(inner.codomain(), outer.domain());
  std::vector<Element> images;
  for (const auto& img : inner.images()) images.push_back(outer(img));
  return hom_from_images(inner.domain(), outer.codomain(), std::move(images));
}

MonoResult is_monomorphism(const GeneratorMap& f, std::uint64_t cap) {
  const FpMatrix& l = f.commutator_map();
  const auto& dom = f.domain();
  const FpMatrix ker_l = left_null_space(l);
  if (ker_l.rows() > 0) {
    return {MonoStatus::not_injective, dom.element(zero_vector(dom.n()), ker_l.row(0))};
  }
  const FpMatrix ker_a = left_null_space(f.abelian_map());
  if (ker_a.rows() == 0) return {MonoStatus::injective, std::nullopt};

  // Elements (v, w) with v in ker(A) map to the central element
  // (0, q(v) + w L); find v != 0 with -q(v) in the row space of L.
  const Residue p = dom.p();
  std::uint64_t count = 1;
  for (Index k = 0; k < ker_a.rows(); ++k) {
    count *= static_cast<std::uint64_t>(p);
    if (count > cap) return {MonoStatus::undetermined, std::nullopt};
  }
  const FpMatrix lt = l.transpose();
  std::vector<Residue> coef(static_cast<std::size_t>(ker_a.rows()), 0);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (auto& c : coef) {
      c = static_cast<Residue>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
    }
    Vector v = zero_vector(dom.n());
    for (Index k = 0; k < ker_a.rows(); ++k) v += coef[static_cast<std::size_t>(k)] * ker_a.entries().row(k);
    v = reduce_mod(v, p);
    const Element img = f(dom.element(v, zero_vector(dom.m())));
    auto w = solve(lt, reduce_mod(-img.w(), p));
    if (w) return {MonoStatus::not_injective, dom.element(v, *w)};
  }
  return {MonoStatus::injective, std::nullopt};
}

CenterInfo center(const Presentation& g) {
  // Row j is the map x_j |-> ([x_j, x_1], ..., [x_j, x_n]).
  Matrix pairing(g.n(), g.n() * g.m());
  for (Index j = 0; j < g.n(); ++j) {
    for (Index i = 0; i < g.n(); ++i) {
      pairing.block(j, i * g.m(), 1, g.m()) = g.kappa(j, i);
    }
  }
  Subspace radical = Subspace::span(left_null_space(FpMatrix(g.p(), pairing)));
  const bool equals_derived = radical.is_zero();
  return CenterInfo{std::move(radical), equals_derived};
}

Quotient quotient_by_central(const Presentation& g, const Subspace& n) {
  if (n.ambient_dim() != g.m() || n.p() != g.p()) {
    throw Error(ErrorCode::AmbientMismatch, "central subgroup must live in F_p^m");
  }
  const QuotientMap pi(g.m(), n);
  Presentation q = Presentation::from_constants(g.constants() * pi.matrix(), g.n(), g.label());
  std::vector<Element> images;
  for (Index k = 0; k < g.n(); ++k) images.push_back(q.generator(k));
  auto proj = hom_from_images(g, q, std::move(images));
  return Quotient{std::move(q), std::move(proj)};
}

}  // namespace nilp2
