#pragma once

#include <vector>

#include "sl12/rational.hpp"

namespace sl12 {

/// Dense matrix over Rat, row major. Small and transparent on purpose:
/// everything that has to scale is blocked by weight space before it gets
/// here, so rows/cols stay modest.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RatVec row(int r) const;
  void set_row(int r, const RatVec& v);

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVec operator*(const RatVec& v) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rat& c) const;
  bool operator==(const RatMatrix& o) const;
  bool is_zero() const;

  /// A^e, square only.
  RatMatrix power(unsigned e) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scaled(const RatVec& a, const Rat& c);
bool vec_is_zero(const RatVec& a);

struct RrefResult {
  RatMatrix mat;            // canonical reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column per kept row, strictly increasing
  int rank = 0;
};

/// Canonical RREF. Pivot selection: first nonzero column, smallest row index
/// (the result is basis-unique either way; the rule keeps runs reproducible).
RrefResult rref_of(const RatMatrix& m);

int rank_of(const RatMatrix& m);

/// Basis of { v : m v = 0 }, returned as rows. Canonical: one row per free
/// column in increasing column order, free coordinate set to 1.
RatMatrix nullspace_of(const RatMatrix& m);

/// Row-span of a canonical rref basis. `ambient` is the coordinate dimension.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span_of(const std::vector<RatVec>& vectors, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  /// Residual of v after reduction by the basis (zero iff contained).
  RatVec reduce(const RatVec& v) const;

  /// Adds v if independent; returns true if the space grew. Keeps the basis
  /// in canonical rref form throughout.
  bool grow(const RatVec& v);

  Subspace sum(const Subspace& other) const;

  /// Canonical complement representatives of this space over `inside`
  /// (inside must be contained in *this): rows of our rref basis whose pivot
  /// is not a pivot of `inside`.
  std::vector<RatVec> complement_over(const Subspace& inside) const;

 private:
  int ambient_;
  RatMatrix basis_;
  std::vector<int> pivots_;
};

/// Smallest subspace containing `seeds` and invariant under all `operators`
/// (square matrices on the ambient space). Deterministic BFS order.
Subspace closure(const std::vector<RatVec>& seeds, const std::vector<RatMatrix>& operators,
                 int ambient);

/// Sparse matrix (triplets), used for whole-module operators where the dense
/// form would be wasteful. Triplets are kept sorted by (row, col) with unique
/// positions.
class SparseMat {
 public:
  struct Entry {
    int r, c;
    Rat v;
  };

  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return e_; }

  void add(int r, int c, const Rat& v);  // accumulates duplicates
  void finalize();                       // sort + merge + drop zeros

  RatVec apply(const RatVec& x) const;
  SparseMat plus(const SparseMat& o) const;
  SparseMat scaled(const Rat& c) const;
  SparseMat times(const SparseMat& o) const;
  bool is_zero_mat() const;

  /// Dense block rows x cols restricted to index sets (order preserved).
  RatMatrix block(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;

  static SparseMat from_dense(const RatMatrix& m);
  RatMatrix to_dense() const;

 private:
  int rows_, cols_;
  std::vector<Entry> e_;
  bool finalized_ = false;
};

}  // namespace sl12
