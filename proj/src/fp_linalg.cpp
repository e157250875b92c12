#include "nilp2/fp_linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace nilp2 {

bool is_odd_prime(Residue p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  for (Residue d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Vector zero_vector(Index dim) { return Vector::Zero(dim); }

Vector unit_vector(Index dim, Index k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1;
  return v;
}

PrimeField::PrimeField(Residue p) : p_(p) {
  if (!is_odd_prime(p)) {
    throw Error(ErrorCode::NotOddPrime, std::to_string(p) + " is not an odd prime");
  }
  if (p >= kMaxModulus) {
    throw Error(ErrorCode::ModulusTooLarge,
                std::to_string(p) + " exceeds the supported modulus bound 2^16");
  }
}

Residue PrimeField::inv(Residue a) const {
  a = reduce(a);
  if (a == 0) throw Error(ErrorCode::DimensionMismatch, "inverse of zero in F_p");
  // Fermat: a^(p-2).
  Residue result = 1;
  Residue base = a;
  Residue e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FpMatrix::FpMatrix(Residue p, Index rows, Index cols)
    : field_(p), entries_(Matrix::Zero(rows, cols)) {}

FpMatrix::FpMatrix(Residue p, const Matrix& entries)
    : field_(p), entries_(reduce_mod(entries, p)) {}

FpMatrix FpMatrix::identity(Residue p, Index n) {
  return FpMatrix(p, Matrix::Identity(n, n));
}

FpMatrix FpMatrix::from_rows(Residue p, Index cols, const std::vector<Vector>& rows) {
  Matrix m(static_cast<Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    }
    m.row(static_cast<Index>(r)) = rows[r];
  }
  return FpMatrix(p, m);
}

FpMatrix FpMatrix::transpose() const {
  return FpMatrix(p(), Matrix(entries_.transpose()));
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (p() != rhs.p()) throw Error(ErrorCode::PrimeMismatch, "matrix product over different fields");
  if (cols() != rhs.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  // Entries are < 2^16 so each product is < 2^32; reduce per term to keep
  // long inner dimensions safe.
  Matrix out = Matrix::Zero(rows(), rhs.cols());
  const Residue q = p();
  for (Index i = 0; i < rows(); ++i) {
    for (Index k = 0; k < cols(); ++k) {
      const Residue a = entries_(i, k);
      if (a == 0) continue;
      for (Index j = 0; j < rhs.cols(); ++j) {
        out(i, j) = (out(i, j) + a * rhs.entries_(k, j)) % q;
      }
    }
  }
  return FpMatrix(q, out);
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (p() != rhs.p()) throw Error(ErrorCode::PrimeMismatch, "matrix sum over different fields");
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  }
  return FpMatrix(p(), Matrix(entries_ + rhs.entries_));
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (p() != rhs.p()) throw Error(ErrorCode::PrimeMismatch, "matrix difference over different fields");
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  }
  return FpMatrix(p(), Matrix(entries_ - rhs.entries_));
}

Vector FpMatrix::apply(const Vector& x) const {
  if (x.size() != rows()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from map domain");
  Vector out = Vector::Zero(cols());
  const Residue q = p();
  for (Index k = 0; k < rows(); ++k) {
    const Residue a = ((x(k) % q) + q) % q;
    if (a == 0) continue;
    for (Index j = 0; j < cols(); ++j) out(j) = (out(j) + a * entries_(k, j)) % q;
  }
  return out;
}

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom) {
  if (top.p() != bottom.p()) throw Error(ErrorCode::PrimeMismatch, "vstack over different fields");
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
  Matrix m(top.rows() + bottom.rows(), top.cols());
  m.topRows(top.rows()) = top.entries();
  m.bottomRows(bottom.rows()) = bottom.entries();
  return FpMatrix(top.p(), m);
}

FpMatrix hstack(const FpMatrix& left, const FpMatrix& right) {
  if (left.p() != right.p()) throw Error(ErrorCode::PrimeMismatch, "hstack over different fields");
  if (left.rows() != right.rows()) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
  Matrix m(left.rows(), left.cols() + right.cols());
  m.leftCols(left.cols()) = left.entries();
  m.rightCols(right.cols()) = right.entries();
  return FpMatrix(left.p(), m);
}

namespace {

// In-place Gauss-Jordan; returns pivot columns. Only columns < col_limit
// are eligible as pivots.
std::vector<Index> gauss_jordan(Matrix& m, const PrimeField& f, Index col_limit) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < col_limit && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Residue scale = f.inv(m(row, col));
    for (Index c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Residue factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Echelon echelonize(const FpMatrix& m) {
  Matrix work = m.entries();
  auto pivots = gauss_jordan(work, m.field(), work.cols());
  const Index r = static_cast<Index>(pivots.size());
  return Echelon{FpMatrix(m.p(), work), r, std::move(pivots)};
}

Index rank(const FpMatrix& m) { return echelonize(m).rank; }

std::optional<Vector> solve(const FpMatrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side length differs from row count");
  FpMatrix rhs(a.p(), Matrix(b.transpose()));
  auto x = solve_matrix(a, rhs);
  if (!x) return std::nullopt;
  return Vector(x->entries().col(0).transpose());
}

std::optional<FpMatrix> solve_matrix(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw Error(ErrorCode::PrimeMismatch, "solve over different fields");
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: row count mismatch");
  Matrix work(a.rows(), a.cols() + b.cols());
  work.leftCols(a.cols()) = a.entries();
  work.rightCols(b.cols()) = b.entries();
  auto pivots = gauss_jordan(work, a.field(), a.cols());
  const Index r = static_cast<Index>(pivots.size());
  for (Index row = r; row < work.rows(); ++row) {
    if ((work.row(row).tail(b.cols()).array() != 0).any()) return std::nullopt;
  }
  Matrix x = Matrix::Zero(a.cols(), b.cols());
  for (Index row = 0; row < r; ++row) {
    x.row(pivots[static_cast<std::size_t>(row)]) = work.row(row).tail(b.cols());
  }
  return FpMatrix(a.p(), x);
}

FpMatrix null_space(const FpMatrix& a) {
  const auto e = echelonize(a);
  const Index cols = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector> rows;
  const auto& f = a.field();
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector x = Vector::Zero(cols);
    x(free) = 1;
    for (Index r = 0; r < e.rank; ++r) {
      x(e.pivots[static_cast<std::size_t>(r)]) = f.neg(e.form(r, free));
    }
    rows.push_back(std::move(x));
  }
  return Subspace::span(a.p(), cols, rows).basis();
}

FpMatrix left_null_space(const FpMatrix& a) { return null_space(a.transpose()); }

Subspace::Subspace(Residue p, Index ambient)
    : ambient_(ambient), basis_(p, 0, ambient) {}

Subspace::Subspace(Index ambient, FpMatrix basis, std::vector<Index> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const FpMatrix& rows) {
  auto e = echelonize(rows);
  Matrix basis = e.form.entries().topRows(e.rank);
  return Subspace(rows.cols(), FpMatrix(rows.p(), basis), std::move(e.pivots));
}

Subspace Subspace::span(Residue p, Index ambient, const std::vector<Vector>& rows) {
  return span(FpMatrix::from_rows(p, ambient, rows));
}

Subspace Subspace::full(Residue p, Index ambient) {
  return span(FpMatrix::identity(p, ambient));
}

Vector Subspace::residue_of(const Vector& x) const {
  if (x.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "vector does not live in the subspace's ambient space");
  Vector r = reduce_mod(x, p());
  const auto& f = basis_.field();
  for (Index row = 0; row < dim(); ++row) {
    const Residue coef = r(pivots_[static_cast<std::size_t>(row)]);
    if (coef == 0) continue;
    for (Index c = 0; c < ambient_; ++c) {
      r(c) = f.sub(r(c), f.mul(coef, basis_(row, c)));
    }
  }
  return r;
}

bool Subspace::contains(const Vector& x) const {
  return (residue_of(x).array() == 0).all();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_ || other.p() != p()) {
    throw Error(ErrorCode::AmbientMismatch, "containment across different ambient spaces");
  }
  for (Index r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& x) const {
  if (!contains(x)) throw Error(ErrorCode::AmbientMismatch, "vector is not in the subspace");
  Vector coords(dim());
  const Vector y = reduce_mod(x, p());
  for (Index r = 0; r < dim(); ++r) coords(r) = y(pivots_[static_cast<std::size_t>(r)]);
  return coords;
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p()) {
    throw Error(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace operator+(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return Subspace::span(vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.is_zero() || v.is_zero()) return Subspace(u.p(), u.ambient_dim());
  // y [U; V] = 0 with y = (a, b) gives a U = -b V, a vector of U cap V.
  const FpMatrix relations = left_null_space(vstack(u.basis(), v.basis()));
  if (relations.rows() == 0) return Subspace(u.p(), u.ambient_dim());
  Matrix a = relations.entries().leftCols(u.dim());
  return Subspace::span(FpMatrix(u.p(), a) * u.basis());
}

Subspace image(const Subspace& u, const FpMatrix& m) {
  if (m.rows() != u.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "image: map domain differs from ambient");
  if (u.is_zero()) return Subspace(m.p(), m.cols());
  return Subspace::span(u.basis() * m);
}

Subspace row_space(const FpMatrix& m) { return Subspace::span(m); }

std::vector<Subspace> enumerate_subspaces(Residue p, Index dim) {
  const PrimeField field(p);
  std::vector<Subspace> out;
  std::vector<Index> pivots;
  // Fill every free slot of an echelon pattern: positions (row, col) with
  // col a non-pivot column to the right of the row's pivot.
  auto fill = [&](Index k) {
    Matrix m = Matrix::Zero(k, dim);
    std::vector<std::pair<Index, Index>> slots;
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (Index r = 0; r < k; ++r) {
      is_pivot[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = true;
      m(r, pivots[static_cast<std::size_t>(r)]) = 1;
    }
    for (Index r = 0; r < k; ++r) {
      for (Index c = pivots[static_cast<std::size_t>(r)] + 1; c < dim; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) slots.emplace_back(r, c);
      }
    }
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
      if (s == slots.size()) {
        out.push_back(Subspace::span(FpMatrix(p, m)));
        return;
      }
      for (Residue a = 0; a < p; ++a) {
        m(slots[s].first, slots[s].second) = a;
        rec(s + 1);
      }
      m(slots[s].first, slots[s].second) = 0;
    };
    rec(0);
  };
  for (Index k = 0; k <= dim; ++k) {
    std::function<void(Index)> choose = [&](Index start) {
      if (static_cast<Index>(pivots.size()) == k) {
        fill(k);
        return;
      }
      for (Index c = start; c < dim; ++c) {
        pivots.push_back(c);
        choose(c + 1);
        pivots.pop_back();
      }
    };
    choose(0);
  }
  return out;
}

QuotientMap::QuotientMap(Index ambient, const Subspace& kernel)
    : kernel_(kernel), matrix_(kernel.p(), ambient, ambient - kernel.dim()) {
  if (kernel.ambient_dim() != ambient) {
    throw Error(ErrorCode::AmbientMismatch, "quotient kernel does not live in the given ambient space");
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
  for (Index c : kernel.pivots()) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index c = 0; c < ambient; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) kept_.push_back(c);
  }
  Matrix m(ambient, static_cast<Index>(kept_.size()));
  for (Index a = 0; a < ambient; ++a) {
    const Vector r = kernel.residue_of(unit_vector(ambient, a));
    for (std::size_t t = 0; t < kept_.size(); ++t) m(a, static_cast<Index>(t)) = r(kept_[t]);
  }
  matrix_ = FpMatrix(kernel.p(), m);
}

QuotientMap quotient_map(Index ambient, const Subspace& n) { return QuotientMap(ambient, n); }

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v(i);
  }
  return os.str();
}

std::string format_basis(const Subspace& s) {
  if (s.is_zero()) return "none";
  std::string out;
  for (Index r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    out += format_vector(s.basis().row(r));
  }
  return out;
}

}  // namespace nilp2
