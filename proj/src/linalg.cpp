#include "sl12/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sl12 {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, int cols) {
  RatMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("from_rows: ragged input");
    m.set_row(static_cast<int>(i), rows[i]);
  }
  return m;
}

RatVec RatMatrix::row(int r) const {
  RatVec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void RatMatrix::set_row(int r, const RatVec& v) {
  for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matmul: shape mismatch");
  RatMatrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(r, k);
      if (sl12::is_zero(v)) continue;
      for (int c = 0; c < o.cols_; ++c) {
        if (sl12::is_zero(o.at(k, c))) continue;
        m.at(r, c) += v * o.at(k, c);
      }
    }
  return m;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matvec: shape mismatch");
  RatVec y(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (sl12::is_zero(at(r, c)) || sl12::is_zero(v[c])) continue;
      y[r] += at(r, c) * v[c];
    }
  return y;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add: shape mismatch");
  RatMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sub: shape mismatch");
  RatMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
  return m;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool RatMatrix::is_zero() const {
  for (const Rat& v : a_)
    if (!sl12::is_zero(v)) return false;
  return true;
}

RatMatrix RatMatrix::power(unsigned e) const {
  if (rows_ != cols_) throw std::invalid_argument("power: not square");
  RatMatrix acc = identity(rows_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scaled(const RatVec& a, const Rat& c) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool vec_is_zero(const RatVec& a) {
  for (const Rat& v : a)
    if (!is_zero(v)) return false;
  return true;
}

RrefResult rref_of(const RatMatrix& m) {
  std::vector<RatVec> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const int cols = m.cols();

  std::vector<int> pivots;
  int lead_row = 0;
  for (int col = 0; col < cols && lead_row < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = lead_row; r < static_cast<int>(rows.size()); ++r) {
      if (!is_zero(rows[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[lead_row], rows[pivot]);
    Rat inv = 1 / rows[lead_row][col];
    for (int c = col; c < cols; ++c) rows[lead_row][c] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == lead_row || is_zero(rows[r][col])) continue;
      Rat f = rows[r][col];
      for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[lead_row][c];
    }
    pivots.push_back(col);
    ++lead_row;
  }

  RrefResult res;
  res.rank = lead_row;
  res.pivots = std::move(pivots);
  res.mat = RatMatrix(lead_row, cols);
  for (int r = 0; r < lead_row; ++r) res.mat.set_row(r, rows[r]);
  return res;
}

int rank_of(const RatMatrix& m) { return rref_of(m).rank; }

RatMatrix nullspace_of(const RatMatrix& m) {
  RrefResult rr = rref_of(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : rr.pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols);
    v[free_col] = 1;
    for (int r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.mat.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_rows(basis, cols);
}

Subspace Subspace::span_of(const std::vector<RatVec>& vectors, int ambient) {
  Subspace s(ambient);
  for (const RatVec& v : vectors) s.grow(v);
  return s;
}

RatVec Subspace::reduce(const RatVec& v) const {
  RatVec w = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    const Rat& coeff = w[pivots_[r]];
    if (is_zero(coeff)) continue;
    Rat f = coeff;  // pivot entries are 1
    for (int c = 0; c < ambient_; ++c) {
      if (is_zero(basis_.at(r, c))) continue;
      w[c] -= f * basis_.at(r, c);
    }
  }
  return w;
}

bool Subspace::contains(const RatVec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Subspace::grow(const RatVec& v) {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("grow: wrong ambient");
  RatVec w = reduce(v);
  int lead = -1;
  for (int c = 0; c < ambient_; ++c) {
    if (!is_zero(w[c])) {
      lead = c;
      break;
    }
  }
  if (lead < 0) return false;

  Rat inv = 1 / w[lead];
  for (int c = 0; c < ambient_; ++c) w[c] *= inv;

  // back-substitute the new row into the existing basis, then insert it
  // keeping pivot columns increasing: the stored matrix stays in rref.
  std::vector<RatVec> rows;
  rows.reserve(basis_.rows() + 1);
  for (int r = 0; r < basis_.rows(); ++r) {
    RatVec row = basis_.row(r);
    if (!is_zero(row[lead])) {
      Rat f = row[lead];
      for (int c = 0; c < ambient_; ++c) row[c] -= f * w[c];
    }
    rows.push_back(std::move(row));
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  int pos = static_cast<int>(it - pivots_.begin());
  rows.insert(rows.begin() + pos, w);
  pivots_.insert(it, lead);
  basis_ = RatMatrix::from_rows(rows, ambient_);
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (int r = 0; r < other.basis_.rows(); ++r) s.grow(other.basis_.row(r));
  return s;
}

std::vector<RatVec> Subspace::complement_over(const Subspace& inside) const {
  if (!contains(inside)) throw std::invalid_argument("complement_over: not nested");
  std::vector<RatVec> out;
  for (int r = 0; r < basis_.rows(); ++r) {
    bool shared = std::binary_search(inside.pivots_.begin(), inside.pivots_.end(), pivots_[r]);
    if (!shared) out.push_back(basis_.row(r));
  }
  return out;
}

Subspace closure(const std::vector<RatVec>& seeds, const std::vector<RatMatrix>& operators,
                 int ambient) {
  Subspace s(ambient);
  std::vector<RatVec> queue;
  for (const RatVec& v : seeds)
    if (s.grow(v)) queue.push_back(v);
  size_t head = 0;
  while (head < queue.size()) {
    RatVec v = queue[head++];
    for (const RatMatrix& op : operators) {
      RatVec w = op * v;
      if (s.grow(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

void SparseMat::add(int r, int c, const Rat& v) {
  if (is_zero(v)) return;
  e_.push_back({r, c, v});
  finalized_ = false;
}

void SparseMat::finalize() {
  std::sort(e_.begin(), e_.end(), [](const Entry& a, const Entry& b) {
    return a.r != b.r ? a.r < b.r : a.c < b.c;
  });
  std::vector<Entry> merged;
  for (Entry& en : e_) {
    if (!merged.empty() && merged.back().r == en.r && merged.back().c == en.c)
      merged.back().v += en.v;
    else
      merged.push_back(std::move(en));
  }
  e_.clear();
  for (Entry& en : merged)
    if (!is_zero(en.v)) e_.push_back(std::move(en));
  finalized_ = true;
}

RatVec SparseMat::apply(const RatVec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("sparse apply: shape");
  RatVec y(rows_);
  for (const Entry& en : e_) {
    if (is_zero(x[en.c])) continue;
    y[en.r] += en.v * x[en.c];
  }
  return y;
}

SparseMat SparseMat::plus(const SparseMat& o) const {
  SparseMat s(rows_, cols_);
  for (const Entry& en : e_) s.add(en.r, en.c, en.v);
  for (const Entry& en : o.e_) s.add(en.r, en.c, en.v);
  s.finalize();
  return s;
}

SparseMat SparseMat::scaled(const Rat& c) const {
  SparseMat s(rows_, cols_);
  if (!is_zero(c))
    for (const Entry& en : e_) s.add(en.r, en.c, en.v * c);
  s.finalize();
  return s;
}

SparseMat SparseMat::times(const SparseMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("sparse times: shape");
  // bucket the right factor by row so each left entry joins only matching rows
  std::map<int, std::vector<const Entry*>> by_row;
  for (const Entry& en : o.e_) by_row[en.r].push_back(&en);
  SparseMat s(rows_, o.cols_);
  for (const Entry& a : e_) {
    auto it = by_row.find(a.c);
    if (it == by_row.end()) continue;
    for (const Entry* b : it->second) s.add(a.r, b->c, a.v * b->v);
  }
  s.finalize();
  return s;
}

bool SparseMat::is_zero_mat() const {
  for (const Entry& en : e_)
    if (!is_zero(en.v)) return false;
  return true;
}

RatMatrix SparseMat::block(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const {
  std::map<int, int> rpos, cpos;
  for (size_t i = 0; i < row_ids.size(); ++i) rpos[row_ids[i]] = static_cast<int>(i);
  for (size_t i = 0; i < col_ids.size(); ++i) cpos[col_ids[i]] = static_cast<int>(i);
  RatMatrix m(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
  for (const Entry& en : e_) {
    auto ri = rpos.find(en.r);
    auto ci = cpos.find(en.c);
    if (ri == rpos.end() || ci == cpos.end()) continue;
    m.at(ri->second, ci->second) += en.v;
  }
  return m;
}

SparseMat SparseMat::from_dense(const RatMatrix& m) {
  SparseMat s(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!is_zero(m.at(r, c))) s.add(r, c, m.at(r, c));
  s.finalize();
  return s;
}

RatMatrix SparseMat::to_dense() const {
  RatMatrix m(rows_, cols_);
  for (const Entry& en : e_) m.at(en.r, en.c) += en.v;
  return m;
}

}  // namespace sl12
