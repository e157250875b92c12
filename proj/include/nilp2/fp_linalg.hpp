#ifndef NILP2_FP_LINALG_HPP
#define NILP2_FP_LINALG_HPP

// Exact dense linear algebra over the prime field F_p.
//
// Storage is Eigen's dense integer matrices; every entry lives in [0, p).
// Vectors are rows and linear maps act from the right: a map F_p^a -> F_p^b
// is an a x b matrix M and x |-> x * M. Subspaces are row spaces kept in
// reduced row echelon form so that equality of subspaces is equality of
// bases.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nilp2/error.hpp"

namespace nilp2 {

using Residue = std::int64_t;
using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Residue, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Residue, 1, Eigen::Dynamic>;

inline constexpr Residue kMaxModulus = Residue{1} << 16;

bool is_odd_prime(Residue p) noexcept;

// Reduce every entry of an integer expression into [0, p).
template <typename Derived>
auto reduce_mod(const Eigen::MatrixBase<Derived>& x, Residue p) {
  using Plain = typename Derived::PlainObject;
  Plain out = x.unaryExpr([p](Residue a) {
    Residue r = a % p;
    return r < 0 ? r + p : r;
  });
  return out;
}

Vector zero_vector(Index dim);
Vector unit_vector(Index dim, Index k);

// Arithmetic in F_p for an odd prime p < 2^16.
class PrimeField {
 public:
  explicit PrimeField(Residue p);

  Residue modulus() const noexcept { return p_; }
  Residue reduce(Residue a) const noexcept {
    Residue r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
  Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }
  Residue neg(Residue a) const noexcept { return reduce(-a); }
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

class FpMatrix {
 public:
  FpMatrix(Residue p, Index rows, Index cols);
  FpMatrix(Residue p, const Matrix& entries);

  static FpMatrix zero(Residue p, Index rows, Index cols) { return {p, rows, cols}; }
  static FpMatrix identity(Residue p, Index n);
  static FpMatrix from_rows(Residue p, Index cols, const std::vector<Vector>& rows);

  const PrimeField& field() const noexcept { return field_; }
  Residue p() const noexcept { return field_.modulus(); }
  Index rows() const noexcept { return entries_.rows(); }
  Index cols() const noexcept { return entries_.cols(); }
  const Matrix& entries() const noexcept { return entries_; }
  Residue operator()(Index r, Index c) const { return entries_(r, c); }
  Vector row(Index r) const { return entries_.row(r); }

  bool is_zero() const { return (entries_.array() == 0).all(); }

  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  Vector apply(const Vector& x) const;  // x * M

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.p() == b.p() && a.rows() == b.rows() && a.cols() == b.cols() &&
           a.entries_ == b.entries_;
  }

 private:
  PrimeField field_;
  Matrix entries_;
};

// [top; bottom] and [left | right].
FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);
FpMatrix hstack(const FpMatrix& left, const FpMatrix& right);

struct Echelon {
  FpMatrix form;              // reduced row echelon form, same shape as input
  Index rank = 0;
  std::vector<Index> pivots;  // pivot column of each of the first `rank` rows
};

Echelon echelonize(const FpMatrix& m);
Index rank(const FpMatrix& m);

// One x with A x = b (b has A.rows() entries), or nullopt if inconsistent.
std::optional<Vector> solve(const FpMatrix& a, const Vector& b);

// One X with A X = B, or nullopt.
std::optional<FpMatrix> solve_matrix(const FpMatrix& a, const FpMatrix& b);

// Echelon basis (as rows) of {x : A x = 0}.
FpMatrix null_space(const FpMatrix& a);
// Echelon basis (as rows) of {y : y A = 0}.
FpMatrix left_null_space(const FpMatrix& a);

class Subspace {
 public:
  Subspace(Residue p, Index ambient);  // the zero subspace

  static Subspace span(const FpMatrix& rows);
  static Subspace span(Residue p, Index ambient, const std::vector<Vector>& rows);
  static Subspace full(Residue p, Index ambient);

  Residue p() const noexcept { return basis_.p(); }
  Index ambient_dim() const noexcept { return ambient_; }
  Index dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const FpMatrix& basis() const noexcept { return basis_; }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }

  // Reduce x against the echelon basis; zero iff x lies in the subspace.
  Vector residue_of(const Vector& x) const;
  bool contains(const Vector& x) const;
  bool contains(const Subspace& other) const;

  // Coordinates of x in the echelon basis; x must be a member.
  Vector coordinates(const Vector& x) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(Index ambient, FpMatrix basis, std::vector<Index> pivots);

  Index ambient_;
  FpMatrix basis_;
  std::vector<Index> pivots_;
};

Subspace operator+(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// Image of a subspace under x |-> x * M.
Subspace image(const Subspace& u, const FpMatrix& m);
// Row space of M.
Subspace row_space(const FpMatrix& m);

// Every subspace of F_p^dim, in order of dimension then echelon pattern.
std::vector<Subspace> enumerate_subspaces(Residue p, Index dim);

// Projection of F_p^ambient onto F_p^(ambient - dim N) with kernel N.
//
// The target coordinates are the non-pivot coordinates of N's echelon
// basis, in increasing order: x is first reduced against N (clearing its
// pivot coordinates) and the remaining coordinates are read off. The map is
// therefore a function of (ambient, N) alone.
class QuotientMap {
 public:
  QuotientMap(Index ambient, const Subspace& kernel);

  Index source_dim() const noexcept { return matrix_.rows(); }
  Index target_dim() const noexcept { return matrix_.cols(); }
  const FpMatrix& matrix() const noexcept { return matrix_; }
  const Subspace& kernel() const noexcept { return kernel_; }
  const std::vector<Index>& kept_coordinates() const noexcept { return kept_; }

  Vector operator()(const Vector& x) const { return matrix_.apply(x); }

 private:
  Subspace kernel_;
  std::vector<Index> kept_;
  FpMatrix matrix_;
};

QuotientMap quotient_map(Index ambient, const Subspace& n);

// "1 0 2" and "1 0 2, 0 1 1" renderings used by reports and files.
std::string format_vector(const Vector& v);
std::string format_basis(const Subspace& s);

}  // namespace nilp2

#endif  // NILP2_FP_LINALG_HPP
