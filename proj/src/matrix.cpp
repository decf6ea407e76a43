#include "exlsa/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exlsa/errors.hpp"

namespace exlsa {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero(const Vector &v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); });
}

Vector &axpy(Vector &y, const Scalar &a, const Vector &x) {
  if (y.size() != x.size())
    throw ShapeMismatch("vector lengths " + std::to_string(y.size()) + " and " + std::to_string(x.size()));
  if (a.is_zero())
    return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero())
      y[i] += a.is_one() ? x[i] : a * x[i];
  return y;
}

Vector operator+(Vector a, const Vector &b) { return axpy(a, Scalar(1), b); }
Vector operator-(Vector a, const Vector &b) { return axpy(a, Scalar(-1), b); }

Vector operator*(const Scalar &c, Vector v) {
  for (auto &x : v)
    if (!x.is_zero())
      x *= c;
  return v;
}

Vector operator-(Vector v) {
  for (auto &x : v)
    x = -x;
  return v;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vector &d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector> &cols) {
  if (cols.empty())
    return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_)
      throw ShapeMismatch("ragged columns");
    for (std::size_t i = 0; i < m.rows_; ++i)
      m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return exlsa::is_zero(data_); }

bool Matrix::is_symmetric() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i)))
        return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero())
        return false;
  return true;
}

Matrix &Matrix::operator+=(const Matrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero())
      data_[i] += o.data_[i];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero())
      data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.rows_)
    throw ShapeMismatch("matrix product " + std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar &x = a(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero())
          c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator*(const Scalar &c, Matrix m) {
  for (auto &x : m.data_)
    if (!x.is_zero())
      x *= c;
  return m;
}

Vector operator*(const Matrix &a, const Vector &v) {
  if (a.cols_ != v.size())
    throw ShapeMismatch("matrix-vector product");
  Vector r(a.rows_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    if (v[j].is_zero())
      continue;
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (!a(i, j).is_zero())
        r[i] += a(i, j) * v[j];
  }
  return r;
}

Scalar bilinear(const Matrix &g, const Vector &x, const Vector &y) {
  if (g.rows() != x.size() || g.cols() != y.size())
    throw ShapeMismatch("bilinear form");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero())
      continue;
    Scalar row;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !g(i, j).is_zero())
        row += g(i, j) * y[j];
    if (!row.is_zero())
      s += x[i] * row;
  }
  return s;
}

Scalar trace_product(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw ShapeMismatch("trace of product");
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !b(k, i).is_zero())
        t += a(i, k) * b(k, i);
  return t;
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

namespace {

std::size_t weight(const Scalar &s) { return s.numerator().size() + s.denominator().size(); }

// Row index >= from with a nonzero entry in column col and the lightest
// such entry, or rows() if the column is zero there.
std::size_t choose_pivot(const Matrix &m, std::size_t from, std::size_t col) {
  std::size_t best = m.rows();
  std::size_t best_w = 0;
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, col).is_zero())
      continue;
    const std::size_t w = weight(m(i, col));
    if (best == m.rows() || w < best_w) {
      best = i;
      best_w = w;
    }
  }
  return best;
}

void swap_rows(Matrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    std::swap(m(a, j), m(b, j));
}

// Bareiss elimination on the first n columns of an n-row matrix. Returns the
// number of row swaps; throws SingularMatrix.
int bareiss(Matrix &m, std::size_t n) {
  int swaps = 0;
  Scalar prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = choose_pivot(m, k, k);
    if (p == m.rows())
      throw SingularMatrix("no pivot in column " + std::to_string(k) + " of " + std::to_string(n) + "x" +
                           std::to_string(n) + " system");
    if (p != k) {
      swap_rows(m, p, k);
      ++swaps;
    }
    const Scalar pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar lead = m(i, k);
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        Scalar v = pivot * m(i, j);
        if (!lead.is_zero() && !m(k, j).is_zero())
          v -= lead * m(k, j);
        m(i, j) = prev.is_one() ? v : v / prev;
      }
      m(i, k) = Scalar();
    }
    prev = pivot;
  }
  return swaps;
}

void require_square(const Matrix &a, const char *what) {
  if (a.rows() != a.cols())
    throw ShapeMismatch(std::string(what) + " needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()));
}

} // namespace

Matrix solve_linear(const Matrix &a, const Matrix &b) {
  require_square(a, "solve_linear");
  if (b.rows() != a.rows())
    throw ShapeMismatch("right-hand side has " + std::to_string(b.rows()) + " rows");
  const std::size_t n = a.rows(), m = b.cols();
  Matrix aug(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < m; ++j)
      aug(i, n + j) = b(i, j);
  }
  bareiss(aug, n);
  Matrix x(n, m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t ii = n; ii-- > 0;) {
      Scalar s = aug(ii, n + c);
      for (std::size_t j = ii + 1; j < n; ++j)
        if (!aug(ii, j).is_zero() && !x(j, c).is_zero())
          s -= aug(ii, j) * x(j, c);
      x(ii, c) = s.is_zero() ? s : s / aug(ii, ii);
    }
  return x;
}

Vector solve_linear(const Matrix &a, const Vector &b) { return solve_linear(a, Matrix::from_columns({b})).column(0); }

Matrix inverse(const Matrix &a) { return solve_linear(a, Matrix::identity(a.rows())); }

Scalar determinant(const Matrix &a) {
  require_square(a, "determinant");
  if (a.rows() == 0)
    return Scalar(1);
  Matrix m = a;
  int swaps = 0;
  try {
    swaps = bareiss(m, m.rows());
  } catch (const SingularMatrix &) {
    return Scalar();
  }
  const Scalar d = m(m.rows() - 1, m.rows() - 1);
  return swaps % 2 ? -d : d;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t p = choose_pivot(m, r, c);
    if (p == m.rows())
      continue;
    swap_rows(m, p, r);
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero())
        m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero())
        continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero())
          m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t rank(const Matrix &a) {
  Matrix m = a;
  return rref(m).size();
}

std::vector<Vector> nullspace(const Matrix &a) {
  Matrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!m(r, f).is_zero())
        v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector solve_sparse(const std::vector<SparseRow> &rows_in, const Vector &rhs_in, std::size_t n) {
  if (rows_in.size() != n || rhs_in.size() != n)
    throw ShapeMismatch("sparse system must be square");
  std::vector<std::map<std::size_t, Scalar>> rows(n);
  std::vector<std::set<std::size_t>> col_rows(n);
  Vector rhs = rhs_in;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto &[c, v] : rows_in[i]) {
      if (c >= n)
        throw ShapeMismatch("column out of range");
      if (v.is_zero())
        continue;
      rows[i][c] += v;
      col_rows[c].insert(i);
    }

  std::vector<bool> done(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> order; // (row, pivot column)
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && (best == n || rows[i].size() < rows[best].size()))
        best = i;
    if (rows[best].empty())
      throw SingularMatrix("sparse system is singular (rank " + std::to_string(step) + " < " + std::to_string(n) +
                           ")");
    // Lightest entry as pivot.
    auto piv = rows[best].begin();
    for (auto it = rows[best].begin(); it != rows[best].end(); ++it)
      if (weight(it->second) < weight(piv->second))
        piv = it;
    const std::size_t pc = piv->first;
    const Scalar inv = piv->second.inverse();
    done[best] = true;
    order.emplace_back(best, pc);
    const auto targets = col_rows[pc];
    for (std::size_t i : targets) {
      if (done[i])
        continue;
      const Scalar f = rows[i][pc] * inv;
      for (const auto &[c, v] : rows[best]) {
        auto &slot = rows[i][c];
        slot -= f * v;
        if (slot.is_zero()) {
          rows[i].erase(c);
          col_rows[c].erase(i);
        } else {
          col_rows[c].insert(i);
        }
      }
      if (!rhs[best].is_zero())
        rhs[i] -= f * rhs[best];
    }
  }
  Vector x(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto [r, pc] = *it;
    Scalar s = rhs[r];
    Scalar p;
    for (const auto &[c, v] : rows[r]) {
      if (c == pc)
        p = v;
      else if (!x[c].is_zero())
        s -= v * x[c];
    }
    x[pc] = s.is_zero() ? s : s / p;
  }
  return x;
}

} // namespace exlsa
