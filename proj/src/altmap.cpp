#include "exlsa/altmap.hpp"

#include <algorithm>
#include <numeric>

#include "exlsa/errors.hpp"

namespace exlsa {

CodomainPtr scalar_codomain() {
  static const CodomainPtr k = make_codomain("k", {"1"}, Matrix::identity(1));
  return k;
}

CodomainPtr codomain_of(const SpacePtr &space, std::string name) {
  return make_codomain(std::move(name), space->labels(), space->gram());
}

CodomainPtr make_codomain(std::string name, std::vector<std::string> labels, Matrix gram) {
  if (gram.rows() != labels.size() || gram.cols() != labels.size())
    throw ShapeMismatch("codomain Gram does not match its labels");
  return std::make_shared<const Codomain>(Codomain{std::move(name), std::move(labels), std::move(gram)});
}

// ---------------------------------------------------------------------------

Pairing::Pairing(CodomainPtr left, CodomainPtr right, CodomainPtr result, std::vector<Entry> entries)
    : left_(std::move(left)), right_(std::move(right)), result_(std::move(result)), by_left_(left_->dim()) {
  for (auto &e : entries) {
    if (e.left >= left_->dim() || e.right >= right_->dim() || e.out >= result_->dim())
      throw ShapeMismatch("pairing entry out of range");
    if (!e.coeff.is_zero())
      by_left_[e.left].push_back(std::move(e));
  }
}

Pairing Pairing::scalar_left(const CodomainPtr &w) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < w->dim(); ++i)
    e.push_back({0, i, i, Scalar(1)});
  return Pairing(scalar_codomain(), w, w, std::move(e));
}

Pairing Pairing::scalar_right(const CodomainPtr &w) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < w->dim(); ++i)
    e.push_back({i, 0, i, Scalar(1)});
  return Pairing(w, scalar_codomain(), w, std::move(e));
}

Pairing Pairing::form(const CodomainPtr &w) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < w->dim(); ++i)
    for (std::size_t j = 0; j < w->dim(); ++j)
      if (!w->gram(i, j).is_zero())
        e.push_back({i, j, 0, w->gram(i, j)});
  return Pairing(w, w, scalar_codomain(), std::move(e));
}

Vector Pairing::apply(const Vector &x, const Vector &y) const {
  if (x.size() != left_->dim() || y.size() != right_->dim())
    throw ShapeMismatch("pairing arguments");
  Vector r(result_->dim());
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero())
      continue;
    for (const auto &e : by_left_[a])
      if (!y[e.right].is_zero())
        r[e.out] += x[a] * e.coeff * y[e.right];
  }
  return r;
}

// ---------------------------------------------------------------------------

AltMap::AltMap(SpacePtr domain, CodomainPtr codomain, int degree)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), degree_(degree) {
  if (degree < 0)
    throw DegreeMismatch("negative degree");
  values_.assign(multi_indices(domain_->dim(), static_cast<std::size_t>(degree)).size(), Vector(codomain_->dim()));
}

AltMap AltMap::from_function(SpacePtr domain, CodomainPtr codomain, int degree,
                             const std::function<Vector(const std::vector<int> &)> &values) {
  AltMap f(std::move(domain), std::move(codomain), degree);
  const auto &idx = multi_indices(f.domain_->dim(), static_cast<std::size_t>(degree));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    Vector v = values(indices_of(idx[k]));
    if (v.size() != f.codomain_->dim())
      throw ShapeMismatch("value has " + std::to_string(v.size()) + " components, codomain " +
                          std::to_string(f.codomain_->dim()));
    f.values_[k] = std::move(v);
  }
  return f;
}

AltMap AltMap::identity(const SpacePtr &domain, const CodomainPtr &codomain) {
  if (codomain->dim() != domain->dim())
    throw ShapeMismatch("identity needs matching dimensions");
  return from_function(domain, codomain, 1,
                       [&](const std::vector<int> &i) { return unit_vector(domain->dim(), static_cast<std::size_t>(i[0])); });
}

const Vector &AltMap::value(Mask m) const {
  if (degree_of(m) != degree_)
    throw ArityMismatch("multi-index of degree " + std::to_string(degree_of(m)) + " for a map of degree " +
                        std::to_string(degree_));
  return values_[position(domain_->dim(), m)];
}

void AltMap::set_value(Mask m, Vector v) {
  if (degree_of(m) != degree_)
    throw ArityMismatch("multi-index of degree " + std::to_string(degree_of(m)) + " for a map of degree " +
                        std::to_string(degree_));
  if (v.size() != codomain_->dim())
    throw ShapeMismatch("value size");
  values_[position(domain_->dim(), m)] = std::move(v);
}

Vector AltMap::at(const std::vector<int> &indices) const {
  if (indices.size() != static_cast<std::size_t>(degree_))
    throw ArityMismatch("expected " + std::to_string(degree_) + " arguments, got " + std::to_string(indices.size()));
  const int s = permutation_sign(indices);
  if (s == 0)
    return Vector(codomain_->dim());
  const Vector &v = value(mask_of(indices));
  return s > 0 ? v : -v;
}

namespace {

// Signed sum over the permutations of 0..p-1 of prod_a args[a][cols[perm[a]]],
// i.e. det of the p x p minor; zero products are pruned early.
void minor_expand(const std::vector<Vector> &args, const std::vector<int> &cols, std::size_t row, std::vector<bool> &used,
                  const Scalar &acc, int sign_parity, Scalar &out) {
  if (row == args.size()) {
    out += sign_parity % 2 ? -acc : acc;
    return;
  }
  int passed = 0; // used columns to the left, for the inversion count
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (used[c]) {
      ++passed;
      continue;
    }
    const Scalar &x = args[row][static_cast<std::size_t>(cols[c])];
    if (!x.is_zero()) {
      used[c] = true;
      // inversions contributed: unused columns to the left of c
      const int inv = static_cast<int>(c) - passed;
      minor_expand(args, cols, row + 1, used, acc * x, sign_parity + inv, out);
      used[c] = false;
    }
  }
}

} // namespace

Vector AltMap::evaluate(const std::vector<Vector> &args) const {
  if (args.size() != static_cast<std::size_t>(degree_))
    throw ArityMismatch("expected " + std::to_string(degree_) + " arguments, got " + std::to_string(args.size()));
  for (const auto &a : args)
    if (a.size() != domain_->dim())
      throw ShapeMismatch("argument is not a domain vector");
  Vector r(codomain_->dim());
  const auto &idx = multi_indices(domain_->dim(), static_cast<std::size_t>(degree_));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (exlsa::is_zero(values_[k]))
      continue;
    std::vector<bool> used(static_cast<std::size_t>(degree_), false);
    Scalar d;
    minor_expand(args, indices_of(idx[k]), 0, used, Scalar(1), 0, d);
    if (!d.is_zero())
      axpy(r, d, values_[k]);
  }
  return r;
}

bool AltMap::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector &v) { return exlsa::is_zero(v); });
}

AltMap AltMap::scaled(const Scalar &c) const {
  AltMap r = *this;
  for (auto &v : r.values_)
    v = c * std::move(v);
  return r;
}

void AltMap::require_same_shape(const AltMap &o) const {
  if (o.degree_ != degree_ || o.domain_->dim() != domain_->dim() || o.codomain_->dim() != codomain_->dim())
    throw ShapeMismatch("alternating maps of different shape (degree " + std::to_string(degree_) + " into " +
                        codomain_->name + " vs degree " + std::to_string(o.degree_) + " into " + o.codomain_->name +
                        ")");
}

AltMap &AltMap::operator+=(const AltMap &o) {
  require_same_shape(o);
  for (std::size_t k = 0; k < values_.size(); ++k)
    axpy(values_[k], Scalar(1), o.values_[k]);
  return *this;
}

AltMap &AltMap::operator-=(const AltMap &o) {
  require_same_shape(o);
  for (std::size_t k = 0; k < values_.size(); ++k)
    axpy(values_[k], Scalar(-1), o.values_[k]);
  return *this;
}

bool operator==(const AltMap &a, const AltMap &b) {
  a.require_same_shape(b);
  return a.values_ == b.values_;
}

std::optional<Scalar> AltMap::ratio_to(const AltMap &other) const {
  require_same_shape(other);
  std::optional<Scalar> c;
  for (std::size_t k = 0; k < values_.size(); ++k)
    for (std::size_t i = 0; i < values_[k].size(); ++i) {
      const Scalar &x = values_[k][i], &y = other.values_[k][i];
      if (y.is_zero()) {
        if (!x.is_zero())
          return std::nullopt;
        continue;
      }
      if (!c)
        c = x / y;
      else if (!(x == *c * y))
        return std::nullopt;
    }
  if (!c)
    return is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  return c;
}

std::string AltMap::dump() const {
  std::string out;
  const auto &idx = multi_indices(domain_->dim(), static_cast<std::size_t>(degree_));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (exlsa::is_zero(values_[k]))
      continue;
    out += index_label(idx[k]) + " -> [";
    for (std::size_t i = 0; i < values_[k].size(); ++i)
      out += (i ? ", " : "") + values_[k][i].to_string();
    out += "]\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

AltMap wedge_rel(const AltMap &f, const AltMap &g, const Pairing &pairing) {
  if (f.domain()->dim() != g.domain()->dim())
    throw ShapeMismatch("wedge of maps on different domains");
  if (f.codomain()->dim() != pairing.left()->dim() || g.codomain()->dim() != pairing.right()->dim())
    throw ShapeMismatch("pairing does not match the codomains (" + f.codomain()->name + ", " + g.codomain()->name +
                        ")");
  const std::size_t n = f.domain()->dim();
  const int p = f.degree(), q = g.degree();
  AltMap r(f.domain(), pairing.result(), p + q);
  for (Mask k : multi_indices(n, static_cast<std::size_t>(p + q))) {
    Vector acc(pairing.result()->dim());
    const auto ks = indices_of(k);
    for (Mask local : multi_indices(ks.size(), static_cast<std::size_t>(p))) {
      Mask i = 0;
      for (int b : indices_of(local))
        i |= Mask{1} << ks[static_cast<std::size_t>(b)];
      const Mask j = k & ~i;
      const Vector &a = f.value(i), &b = g.value(j);
      if (is_zero(a) || is_zero(b))
        continue;
      axpy(acc, Scalar(shuffle_sign(i, j)), pairing.apply(a, b));
    }
    r.set_value(k, std::move(acc));
  }
  return r;
}

AltMap wedge(const AltMap &f, const AltMap &g) {
  static const Pairing product(scalar_codomain(), scalar_codomain(), scalar_codomain(), {{0, 0, 0, Scalar(1)}});
  return wedge_rel(f, g, product);
}

namespace {

// Ordered partitions of the bits of k into blocks of size q.
void partitions(Mask k, int blocks, int q, std::vector<Mask> &current, const std::function<void()> &visit) {
  if (blocks == 0) {
    visit();
    return;
  }
  const auto ks = indices_of(k);
  for (Mask local : multi_indices(ks.size(), static_cast<std::size_t>(q))) {
    Mask b = 0;
    for (int x : indices_of(local))
      b |= Mask{1} << ks[static_cast<std::size_t>(x)];
    current.push_back(b);
    partitions(k & ~b, blocks - 1, q, current, visit);
    current.pop_back();
  }
}

} // namespace

AltMap compose(const AltMap &f, const AltMap &g) {
  if (g.codomain()->dim() != f.domain()->dim())
    throw ShapeMismatch("composition: codomain of the inner map (" + g.codomain()->name +
                        ") is not the domain of the outer map");
  const int p = f.degree(), q = g.degree();
  const std::size_t n = g.domain()->dim();
  AltMap r(g.domain(), f.codomain(), p * q);
  for (Mask k : multi_indices(n, static_cast<std::size_t>(p * q))) {
    Vector acc(f.codomain()->dim());
    std::vector<Mask> blocks;
    partitions(k, p, q, blocks, [&] {
      std::vector<int> flat;
      std::vector<Vector> args;
      for (Mask b : blocks) {
        const Vector &v = g.value(b);
        if (is_zero(v))
          return;
        args.push_back(v);
        for (int x : indices_of(b))
          flat.push_back(x);
      }
      const Vector val = f.evaluate(args);
      if (!is_zero(val))
        axpy(acc, Scalar(permutation_sign(flat)), val);
    });
    r.set_value(k, std::move(acc));
  }
  return r;
}

Scalar b_alt(const AltMap &f, const AltMap &g) {
  if (f.degree() != g.degree() || f.domain()->dim() != g.domain()->dim() ||
      f.codomain()->dim() != g.codomain()->dim())
    throw ShapeMismatch("b_alt of maps of different shape");
  const auto &space = *f.domain();
  const auto &idx = multi_indices(space.dim(), static_cast<std::size_t>(f.degree()));
  const Matrix &cg = f.codomain()->gram;
  Scalar s;
  if (space.is_diagonal()) {
    for (Mask m : idx) {
      const Vector &a = f.value(m), &b = g.value(m);
      if (is_zero(a) || is_zero(b))
        continue;
      Scalar w(1);
      for (int i : indices_of(m))
        w *= space.q(static_cast<std::size_t>(i));
      s += bilinear(cg, a, b) / w;
    }
    return s;
  }
  const Matrix inv = inverse(lambda_gram(space, f.degree()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (!inv(a, b).is_zero())
        s += inv(a, b) * bilinear(cg, f.value(idx[a]), g.value(idx[b]));
  return s;
}

namespace {

Scalar top_value(const AltMap &volume) {
  const std::size_t n = volume.domain()->dim();
  if (static_cast<std::size_t>(volume.degree()) != n || volume.codomain()->dim() != 1)
    throw SingularPairing("volume must be a top-degree scalar form");
  const Scalar v = volume.value(static_cast<Mask>((Mask{1} << n) - 1))[0];
  if (v.is_zero())
    throw SingularPairing("volume form vanishes");
  return v;
}

// The coefficient vector (over the basis alpha = e^I (x) f_a) of
// alpha -> b_alt(alpha, f).
std::vector<Vector> b_alt_functional(const AltMap &f) {
  const auto &space = *f.domain();
  const auto &idx = multi_indices(space.dim(), static_cast<std::size_t>(f.degree()));
  const Matrix &cg = f.codomain()->gram;
  std::vector<Vector> out(idx.size());
  if (space.is_diagonal()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      Scalar w(1);
      for (int i : indices_of(idx[k]))
        w *= space.q(static_cast<std::size_t>(i));
      out[k] = w.inverse() * (cg * f.value(idx[k]));
    }
    return out;
  }
  const Matrix inv = inverse(lambda_gram(space, f.degree()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    out[a] = Vector(cg.rows());
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (!inv(a, b).is_zero())
        axpy(out[a], inv(a, b), cg * f.value(idx[b]));
  }
  return out;
}

} // namespace

AltMap hodge_dual(const AltMap &f, const AltMap &volume) {
  const std::size_t n = f.domain()->dim();
  if (volume.domain()->dim() != n)
    throw ShapeMismatch("volume form lives on another space");
  const Scalar vol = top_value(volume);
  const int p = f.degree();
  AltMap star(f.domain(), f.codomain(), static_cast<int>(n) - p);
  if (static_cast<std::size_t>(p) > n)
    throw DegreeMismatch("degree exceeds dimension");

  const std::size_t d = f.codomain()->dim();
  const Matrix &cg = f.codomain()->gram;
  const auto &rows_idx = multi_indices(n, static_cast<std::size_t>(p));
  const Mask top = static_cast<Mask>((Mask{1} << n) - 1);
  const std::size_t unknowns = rows_idx.size() * d;

  // Row (I, a): (e^I (x) f_a) wedge_B g evaluated on the top tuple, i.e.
  // shuffle_sign(I, J) B(f_a, g(J)) with J the complement; right-hand side
  // b_alt(e^I (x) f_a, f) vol.
  const auto functional = b_alt_functional(f);
  std::vector<SparseRow> rows(unknowns);
  Vector rhs(unknowns);
  for (std::size_t r = 0; r < rows_idx.size(); ++r) {
    const Mask i = rows_idx[r], j = top & ~i;
    const int s = shuffle_sign(i, j);
    const std::size_t col0 = position(n, j) * d;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b)
        if (!cg(a, b).is_zero())
          rows[r * d + a].emplace_back(col0 + b, s > 0 ? cg(a, b) : -cg(a, b));
      rhs[r * d + a] = functional[r][a] * vol;
    }
  }
  Vector x;
  try {
    x = solve_sparse(rows, rhs, unknowns);
  } catch (const SingularMatrix &e) {
    throw SingularPairing(e.what());
  }
  for (Mask j : multi_indices(n, n - static_cast<std::size_t>(p))) {
    const std::size_t c = position(n, j) * d;
    star.set_value(j, Vector(x.begin() + static_cast<std::ptrdiff_t>(c), x.begin() + static_cast<std::ptrdiff_t>(c + d)));
  }
  return star;
}

bool hodge_property_holds(const AltMap &f, const AltMap &star, const AltMap &volume) {
  const std::size_t n = f.domain()->dim();
  const Scalar vol = top_value(volume);
  const Pairing form = Pairing::form(f.codomain());
  const Mask top = static_cast<Mask>((Mask{1} << n) - 1);
  for (Mask i : multi_indices(n, static_cast<std::size_t>(f.degree())))
    for (std::size_t a = 0; a < f.codomain()->dim(); ++a) {
      AltMap alpha(f.domain(), f.codomain(), f.degree());
      alpha.set_value(i, unit_vector(f.codomain()->dim(), a));
      const Scalar lhs = wedge_rel(alpha, star, form).value(top)[0];
      if (!(lhs == b_alt(alpha, f) * vol))
        return false;
    }
  return true;
}

} // namespace exlsa
