#include "exlsa/exterior.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "exlsa/errors.hpp"

namespace exlsa {

QuadraticSpace::QuadraticSpace(std::vector<std::string> labels, Matrix gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  if (gram_.rows() != labels_.size() || gram_.cols() != labels_.size())
    throw ShapeMismatch("Gram matrix does not match the number of basis labels");
  if (!gram_.is_symmetric())
    throw ShapeMismatch("Gram matrix is not symmetric");
  diagonal_ = gram_.is_diagonal();
  if (diagonal_) {
    for (std::size_t i = 0; i < dim(); ++i)
      if (gram_(i, i).is_zero())
        throw SingularMatrix("isotropic basis vector " + labels_[i]);
  } else if (determinant(gram_).is_zero()) {
    throw SingularMatrix("degenerate Gram matrix");
  }
}

SpacePtr QuadraticSpace::make(std::vector<std::string> labels, Matrix gram) {
  return std::make_shared<const QuadraticSpace>(std::move(labels), std::move(gram));
}

SpacePtr QuadraticSpace::diagonal(std::vector<std::string> labels, const Vector &q) {
  return make(std::move(labels), Matrix::diagonal(q));
}

namespace {

constexpr std::size_t kMaxDim = 12;

struct IndexTables {
  std::array<std::array<std::vector<Mask>, kMaxDim + 1>, kMaxDim + 1> lists;
  std::array<std::vector<std::uint32_t>, kMaxDim + 1> pos;

  IndexTables() {
    for (std::size_t n = 0; n <= kMaxDim; ++n) {
      pos[n].assign(std::size_t{1} << n, 0);
      for (std::size_t p = 0; p <= n; ++p) {
        auto &out = lists[n][p];
        std::vector<int> idx(p);
        // lexicographic enumeration of increasing tuples
        for (std::size_t i = 0; i < p; ++i)
          idx[i] = static_cast<int>(i);
        for (;;) {
          Mask m = 0;
          for (int i : idx)
            m |= Mask{1} << i;
          pos[n][m] = static_cast<std::uint32_t>(out.size());
          out.push_back(m);
          int k = static_cast<int>(p) - 1;
          while (k >= 0 && idx[static_cast<std::size_t>(k)] == static_cast<int>(n - p) + k)
            --k;
          if (k < 0)
            break;
          ++idx[static_cast<std::size_t>(k)];
          for (std::size_t j = static_cast<std::size_t>(k) + 1; j < p; ++j)
            idx[j] = idx[j - 1] + 1;
        }
      }
    }
  }
};

const IndexTables &tables() {
  static const IndexTables t;
  return t;
}

const std::vector<Mask> kEmpty;

void require_dim(std::size_t n) {
  if (n > kMaxDim)
    throw ShapeMismatch("dimension " + std::to_string(n) + " exceeds the supported maximum");
}

} // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

const std::vector<Mask> &multi_indices(std::size_t n, std::size_t p) {
  require_dim(n);
  if (p > n)
    return kEmpty;
  return tables().lists[n][p];
}

std::size_t position(std::size_t n, Mask m) {
  require_dim(n);
  if (m >> n)
    throw ShapeMismatch("multi-index out of range");
  return tables().pos[n][m];
}

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1)
      out.push_back(i);
  return out;
}

Mask mask_of(const std::vector<int> &indices) {
  Mask m = 0;
  for (int i : indices)
    m |= Mask{1} << i;
  return m;
}

int degree_of(Mask m) { return std::popcount(m); }

int shuffle_sign(Mask i, Mask j) {
  if (i & j)
    return 0;
  int inversions = 0;
  for (Mask rest = j; rest; rest &= rest - 1) {
    const int b = std::countr_zero(rest);
    inversions += std::popcount(i >> (b + 1));
  }
  return inversions % 2 ? -1 : 1;
}

int permutation_sign(const std::vector<int> &seq) {
  int s = 1;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b])
        return 0;
      if (seq[a] > seq[b])
        s = -s;
    }
  return s;
}

std::string index_label(Mask m, int offset) {
  const auto idx = indices_of(m);
  const bool wide = !idx.empty() && idx.back() + offset > 9;
  std::string s = "e_{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k)
      s += ",";
    s += std::to_string(idx[k] + offset);
  }
  return s + "}";
}

ExteriorElement::ExteriorElement(SpacePtr space, int degree, bool dual)
    : space_(std::move(space)), degree_(degree), dual_(dual),
      coeffs_(multi_indices(space_->dim(), static_cast<std::size_t>(degree)).size()) {
  if (degree < 0)
    throw DegreeMismatch("negative degree");
}

ExteriorElement::ExteriorElement(SpacePtr space, int degree, Vector coeffs, bool dual)
    : ExteriorElement(std::move(space), degree, dual) {
  if (coeffs.size() != coeffs_.size())
    throw ShapeMismatch("expected " + std::to_string(coeffs_.size()) + " coefficients");
  coeffs_ = std::move(coeffs);
}

ExteriorElement ExteriorElement::basis(SpacePtr space, Mask m) {
  ExteriorElement x(std::move(space), degree_of(m));
  x.set(m, Scalar(1));
  return x;
}

ExteriorElement ExteriorElement::from_vector(SpacePtr space, const Vector &v) {
  return ExteriorElement(std::move(space), 1, v);
}

const Scalar &ExteriorElement::coeff(Mask m) const {
  if (degree_of(m) != degree_)
    throw DegreeMismatch("multi-index degree " + std::to_string(degree_of(m)) + " vs " + std::to_string(degree_));
  return coeffs_[position(space_->dim(), m)];
}

void ExteriorElement::set(Mask m, Scalar c) {
  if (degree_of(m) != degree_)
    throw DegreeMismatch("multi-index degree " + std::to_string(degree_of(m)) + " vs " + std::to_string(degree_));
  coeffs_[position(space_->dim(), m)] = std::move(c);
}

void ExteriorElement::add(Mask m, const Scalar &c) {
  if (degree_of(m) != degree_)
    throw DegreeMismatch("multi-index degree " + std::to_string(degree_of(m)) + " vs " + std::to_string(degree_));
  coeffs_[position(space_->dim(), m)] += c;
}

ExteriorElement &ExteriorElement::operator+=(const ExteriorElement &o) {
  if (o.degree_ != degree_ || o.dual_ != dual_ || o.space_->dim() != space_->dim())
    throw DegreeMismatch("sum of exterior elements of different type");
  axpy(coeffs_, Scalar(1), o.coeffs_);
  return *this;
}

ExteriorElement ExteriorElement::scaled(const Scalar &c) const {
  ExteriorElement r = *this;
  r.coeffs_ = c * r.coeffs_;
  return r;
}

std::vector<std::pair<Mask, Scalar>> ExteriorElement::terms() const {
  std::vector<std::pair<Mask, Scalar>> out;
  const auto &idx = multi_indices(space_->dim(), static_cast<std::size_t>(degree_));
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (!coeffs_[k].is_zero())
      out.emplace_back(idx[k], coeffs_[k]);
  return out;
}

std::string ExteriorElement::to_string() const {
  std::string s;
  for (const auto &[m, c] : terms()) {
    if (!s.empty())
      s += " + ";
    s += "(" + c.to_string() + ")" + index_label(m);
  }
  return s.empty() ? "0" : s;
}

namespace {

Scalar minor_det(const Matrix &g, Mask rows, Mask cols) {
  const auto r = indices_of(rows), c = indices_of(cols);
  Matrix m(r.size(), c.size());
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      m(a, b) = g(static_cast<std::size_t>(r[a]), static_cast<std::size_t>(c[b]));
  return determinant(m);
}

Scalar diagonal_product(const QuadraticSpace &space, Mask m) {
  Scalar p(1);
  for (int i : indices_of(m))
    p *= space.q(static_cast<std::size_t>(i));
  return p;
}

} // namespace

Matrix lambda_gram(const QuadraticSpace &space, int p) {
  const auto &idx = multi_indices(space.dim(), static_cast<std::size_t>(p));
  Matrix g(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (space.is_diagonal()) {
      g(a, a) = diagonal_product(space, idx[a]);
      continue;
    }
    for (std::size_t b = 0; b < idx.size(); ++b)
      g(a, b) = minor_det(space.gram(), idx[a], idx[b]);
  }
  return g;
}

Scalar gram_lambda(const ExteriorElement &x, const ExteriorElement &y) {
  if (x.degree() != y.degree())
    throw DegreeMismatch("B_Lambda of degrees " + std::to_string(x.degree()) + " and " + std::to_string(y.degree()));
  if (x.space()->dim() != y.space()->dim())
    throw ShapeMismatch("B_Lambda across different spaces");
  const auto &space = *x.space();
  if (space.is_diagonal()) {
    Scalar s;
    const auto &idx = multi_indices(space.dim(), static_cast<std::size_t>(x.degree()));
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (!x.coeffs()[k].is_zero() && !y.coeffs()[k].is_zero())
        s += x.coeffs()[k] * y.coeffs()[k] * diagonal_product(space, idx[k]);
    return s;
  }
  return bilinear(lambda_gram(space, x.degree()), x.coeffs(), y.coeffs());
}

ExteriorElement eta(const ExteriorElement &x) {
  if (x.dual())
    throw DegreeMismatch("eta expects a primal element");
  const Matrix g = lambda_gram(*x.space(), x.degree());
  return ExteriorElement(x.space(), x.degree(), g.transpose() * x.coeffs(), true);
}

ExteriorElement eta_inverse(const ExteriorElement &f) {
  if (!f.dual())
    throw DegreeMismatch("eta_inverse expects a functional");
  const auto &space = *f.space();
  if (space.is_diagonal()) {
    ExteriorElement x(f.space(), f.degree());
    for (const auto &[m, c] : f.terms())
      x.set(m, c / diagonal_product(space, m));
    return x;
  }
  const Matrix g = lambda_gram(space, f.degree());
  return ExteriorElement(f.space(), f.degree(), solve_linear(g.transpose(), f.coeffs()));
}

ExteriorElement wedge(const ExteriorElement &x, const ExteriorElement &y) {
  if (x.space()->dim() != y.space()->dim() || x.dual() != y.dual())
    throw ShapeMismatch("wedge across different spaces");
  const std::size_t n = x.space()->dim();
  ExteriorElement r(x.space(), x.degree() + y.degree(), x.dual());
  if (static_cast<std::size_t>(x.degree() + y.degree()) > n)
    return r;
  for (const auto &[mi, ci] : x.terms())
    for (const auto &[mj, cj] : y.terms()) {
      const int s = shuffle_sign(mi, mj);
      if (s == 0)
        continue;
      r.add(mi | mj, s > 0 ? ci * cj : -(ci * cj));
    }
  return r;
}

} // namespace exlsa
