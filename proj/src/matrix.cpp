#include "hsd/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hsd {

namespace {
void check_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string("ExactMatrix: shape mismatch in ") + op);
}
}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.mut(i, i) = ExactScalar(1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<ExactScalar>& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.mut(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::from_rows(
    std::initializer_list<std::initializer_list<ExactScalar>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  ExactMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ExactMatrix: ragged rows");
    std::size_t j = 0;
    for (const auto& e : row) m.mut(i, j++) = e;
    ++i;
  }
  return m;
}

ExactMatrix ExactMatrix::from_fn(
    std::size_t rows, std::size_t cols,
    const std::function<ExactScalar(std::size_t, std::size_t)>& f) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.mut(r, c) = f(r, c);
  return m;
}

ExactMatrix ExactMatrix::column(const std::vector<ExactScalar>& v) {
  ExactMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.mut(i, 0) = v[i];
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  check_same_shape(*this, o, "+");
  ExactMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  check_same_shape(*this, o, "-");
  ExactMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& m) {
  ExactMatrix r(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("ExactMatrix: shape mismatch in *");
  ExactMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const ExactScalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const ExactScalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        m.mut(i, j) += aik * bkj;
      }
    }
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.mut(c, r) = at(r, c);
  return m;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.mut(c, r) = at(r, c).conj();
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " [";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).str();
  }
  os << "]";
  return os.str();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const ExactScalar& s = a.at(ar, ac);
      if (s.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          if (b.at(br, bc).is_zero()) continue;
          m.mut(ar * b.rows() + br, ac * b.cols() + bc) = s * b.at(br, bc);
        }
    }
  return m;
}

// Row echelon engine shared by rank/nullspace/solve/inverse/determinant.
// Implements the pivot rule documented in matrix.hpp.
class RowReducer {
 public:
  explicit RowReducer(const ExactMatrix& a) : m_(a) {}

  // Forward elimination to reduced row echelon form over the first
  // `limit_cols` columns (the rest are carried along, e.g. an augmented
  // right-hand side). Records pivot columns and the row-swap sign.
  void reduce(std::size_t limit_cols) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < limit_cols && pivot_row < m_.rows(); ++col) {
      std::size_t r = pivot_row;
      while (r < m_.rows() && m_.at(r, col).is_zero()) ++r;
      if (r == m_.rows()) continue;
      if (r != pivot_row) {
        swap_rows(r, pivot_row);
        sign_ = -sign_;
      }
      ExactScalar inv = m_.at(pivot_row, col).inv();
      scale_row(pivot_row, inv);
      pivot_scale_ *= inv;
      for (std::size_t rr = 0; rr < m_.rows(); ++rr) {
        if (rr == pivot_row || m_.at(rr, col).is_zero()) continue;
        add_row(rr, pivot_row, -m_.at(rr, col));
      }
      pivot_cols_.push_back(col);
      ++pivot_row;
    }
  }

  const ExactMatrix& result() const { return m_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
  int sign() const { return sign_; }
  const ExactScalar& pivot_scale() const { return pivot_scale_; }

 private:
  ExactMatrix m_;
  std::vector<std::size_t> pivot_cols_;
  int sign_ = 1;
  ExactScalar pivot_scale_ = ExactScalar(1);  // product of applied row scalings

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m_.cols(); ++c) std::swap(m_.mut(a, c), m_.mut(b, c));
  }
  void scale_row(std::size_t r, const ExactScalar& s) {
    for (std::size_t c = 0; c < m_.cols(); ++c)
      if (!m_.at(r, c).is_zero()) m_.mut(r, c) *= s;
  }
  void add_row(std::size_t dst, std::size_t src, const ExactScalar& s) {
    for (std::size_t c = 0; c < m_.cols(); ++c)
      if (!m_.at(src, c).is_zero()) m_.mut(dst, c) += s * m_.at(src, c);
  }
};

std::size_t rank(const ExactMatrix& a) {
  RowReducer red(a);
  red.reduce(a.cols());
  return red.pivot_cols().size();
}

std::size_t nullity(const ExactMatrix& a) { return a.cols() - rank(a); }

std::vector<ExactMatrix> nullspace(const ExactMatrix& a) {
  RowReducer red(a);
  red.reduce(a.cols());
  const ExactMatrix& r = red.result();
  const auto& pivots = red.pivot_cols();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<ExactMatrix> basis;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<ExactScalar> v(a.cols());
    v[free_col] = ExactScalar(1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      v[pivots[p]] = -r.at(p, free_col);
    basis.push_back(ExactMatrix::column(v));
  }
  return basis;
}

ExactScalar determinant(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: not square");
  if (a.rows() == 0) return ExactScalar(1);
  RowReducer red(a);
  red.reduce(a.cols());
  if (red.pivot_cols().size() < a.rows()) return ExactScalar(0);
  // rref of a nonsingular matrix is I = sign * pivot_scale * (det-preserving ops applied to A)
  ExactScalar det = red.pivot_scale().inv();
  if (red.sign() < 0) det = -det;
  return det;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  ExactMatrix aug = ExactMatrix::from_fn(
      a.rows(), a.cols() + b.cols(), [&](std::size_t r, std::size_t c) {
        return c < a.cols() ? a.at(r, c) : b.at(r, c - a.cols());
      });
  RowReducer red(aug);
  red.reduce(a.cols());
  const ExactMatrix& r = red.result();
  const auto& pivots = red.pivot_cols();
  for (std::size_t row = pivots.size(); row < a.rows(); ++row)
    for (std::size_t c = a.cols(); c < aug.cols(); ++c)
      if (!r.at(row, c).is_zero()) return std::nullopt;  // inconsistent
  // free variables stay zero; pivot variables read off the reduced rows
  std::vector<std::vector<ExactScalar>> vals(a.cols(),
                                             std::vector<ExactScalar>(b.cols()));
  for (std::size_t p = 0; p < pivots.size(); ++p)
    for (std::size_t c = 0; c < b.cols(); ++c) vals[pivots[p]][c] = r.at(p, a.cols() + c);
  return ExactMatrix::from_fn(a.cols(), b.cols(), [&](std::size_t rr, std::size_t cc) {
    return vals[rr][cc];
  });
}

std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: not square");
  // fast path: diagonal matrices invert entrywise (Gram matrices here are diagonal)
  bool diag = true;
  for (std::size_t r = 0; r < a.rows() && diag; ++r)
    for (std::size_t c = 0; c < a.cols() && diag; ++c)
      if (r != c && !a.at(r, c).is_zero()) diag = false;
  if (diag) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a.at(i, i).is_zero()) return std::nullopt;
    return ExactMatrix::from_fn(a.rows(), a.cols(), [&](std::size_t r, std::size_t c) {
      return r == c ? a.at(r, r).inv() : ExactScalar(0);
    });
  }
  // for singular square A, A X = I is inconsistent, so solve reports it
  return solve(a, ExactMatrix::identity(a.rows()));
}

ExactMatrix gram_adjoint(const ExactMatrix& a, const ExactMatrix& g_src,
                         const ExactMatrix& g_dst) {
  if (g_src.rows() != a.cols() || g_dst.rows() != a.rows())
    throw std::invalid_argument("gram_adjoint: Gram shape mismatch");
  auto g_src_inv = inverse(g_src);
  if (!g_src_inv) throw std::invalid_argument("gram_adjoint: singular source Gram (malformed basis)");
  return *g_src_inv * (a.conj_transpose() * g_dst);
}

}  // namespace hsd
