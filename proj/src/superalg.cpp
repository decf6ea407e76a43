#include "exlsa/superalg.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "exlsa/errors.hpp"
#include "exlsa/family.hpp"

namespace exlsa {

namespace {

using Accumulator = std::map<std::size_t, Scalar>;

void accumulate(Accumulator &acc, const SparseVector &v, const Scalar &c) {
  for (const auto &[k, x] : v) {
    auto [it, inserted] = acc.try_emplace(k, x * c);
    if (!inserted)
      it->second += x * c;
  }
}

SparseVector flatten(const Accumulator &acc) {
  SparseVector out;
  for (const auto &[k, x] : acc)
    if (!x.is_zero())
      out.emplace_back(k, x);
  return out;
}

SparseVector sparse(const Vector &v, std::size_t offset = 0) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      out.emplace_back(i + offset, v[i]);
  return out;
}

SparseVector scaled(const SparseVector &v, const Scalar &c) {
  Accumulator acc;
  accumulate(acc, v, c);
  return flatten(acc);
}

SparseVector sum(const SparseVector &a, const SparseVector &b, const Scalar &cb = Scalar(1)) {
  Accumulator acc;
  accumulate(acc, a, Scalar(1));
  accumulate(acc, b, cb);
  return flatten(acc);
}

SparseVector basis_vector(std::size_t i) { return {{i, Scalar(1)}}; }

Scalar pairing(const Matrix &form, const SparseVector &x, std::size_t j) {
  Scalar s;
  for (const auto &[k, c] : x)
    if (!form(k, j).is_zero())
      s += c * form(k, j);
  return s;
}

const char *sector_name(int odd_count) {
  static const char *names[] = {"EEE", "EEO", "EOO", "OOO"};
  return names[odd_count];
}

// Runs pred over all basis triples, grouped by the number of odd entries.
template <class Pred> SuperCheck triple_check(const SuperAlgebra &s, Pred pred) {
  SuperCheck r;
  for (int k = 0; k < 4; ++k)
    r.sectors.push_back({sector_name(k), true, 0, std::nullopt});
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto &sec = r.sectors[static_cast<std::size_t>(s.is_odd(i) + s.is_odd(j) + s.is_odd(k))];
        ++sec.triples;
        if (!sec.holds || pred(i, j, k))
          continue;
        sec.holds = false;
        sec.witness = std::array<std::size_t, 3>{i, j, k};
        r.holds = false;
      }
  return r;
}

} // namespace

SparseVector SuperAlgebra::bracket(const SparseVector &x, const SparseVector &y) const {
  Accumulator acc;
  for (const auto &[i, a] : x)
    for (const auto &[j, b] : y)
      accumulate(acc, brackets[i][j], a * b);
  return flatten(acc);
}

SuperAlgebra build_tilde(const QuadLieRep &rep, const AltMap &mu, std::string name, bool force) {
  if (!force && !check_special(rep, mu).holds)
    throw NotSpecial(rep.name() + " is not a special orthogonal representation");
  const std::size_t g = rep.dim(), n = rep.space_dim();
  SuperAlgebra s;
  s.name = std::move(name);
  s.even_dim = g + 3;
  s.odd_dim = 2 * n;
  const std::size_t total = s.dim();
  s.labels = rep.labels();
  for (const char *l : {"h", "e", "f"})
    s.labels.emplace_back(l);
  for (std::size_t v = 0; v < n; ++v)
    for (const char *a : {"f1", "f2"})
      s.labels.push_back(rep.space()->labels()[v] + "(x)" + a);
  s.brackets.assign(total, std::vector<SparseVector>(total));
  auto odd = [&](std::size_t v, std::size_t a) { return s.even_dim + 2 * v + a; };

  // even-even
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      s.brackets[i][j] = sparse(rep.bracket(i, j));
  const auto sl2 = sl2_brackets();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      s.brackets[g + i][g + j] = sparse(sl2[i][j], g);

  // even-odd and odd-even
  const auto &sb = sl2_basis();
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < 2; ++a) {
      const std::size_t p = odd(v, a);
      for (std::size_t x = 0; x < g; ++x) {
        SparseVector r;
        for (std::size_t w = 0; w < n; ++w)
          if (!rep.action(x)(w, v).is_zero())
            r.emplace_back(odd(w, a), rep.action(x)(w, v));
        s.brackets[p][x] = scaled(r, Scalar(-1));
        s.brackets[x][p] = std::move(r);
      }
      for (std::size_t y = 0; y < 3; ++y) {
        SparseVector r;
        for (std::size_t b = 0; b < 2; ++b)
          if (!sb[y](b, a).is_zero())
            r.emplace_back(odd(v, b), sb[y](b, a));
        std::sort(r.begin(), r.end(), [](const auto &l, const auto &rr) { return l.first < rr.first; });
        s.brackets[p][g + y] = scaled(r, Scalar(-1));
        s.brackets[g + y][p] = std::move(r);
      }
    }

  // odd-odd at c = 1: omega(a,b) mu(v,w) + (v,w) mu_s(a,b), K(y, mu_s(a,b)) = omega(y.a, b)
  const Matrix k = sl2_form();
  const Matrix k_inv = inverse(k);
  std::array<std::array<Vector, 2>, 2> mu_s;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Vector rhs(3);
      for (std::size_t y = 0; y < 3; ++y)
        rhs[y] = omega(sb[y] * unit_vector(2, a), unit_vector(2, b));
      mu_s[a][b] = k_inv * rhs;
    }
  const Matrix &gv = rep.space()->gram();
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      const Vector m = mu.at({static_cast<int>(v), static_cast<int>(w)});
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
          const Scalar om = omega_matrix()(a, b);
          s.brackets[odd(v, a)][odd(w, b)] = sum(scaled(sparse(m), om), sparse(gv(v, w) * mu_s[a][b], g));
        }
    }

  s.form = Matrix(total, total);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      s.form(i, j) = rep.form()(i, j);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      s.form(g + i, g + j) = k(i, j);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          s.form(odd(v, a), odd(w, b)) = gv(v, w) * omega_matrix()(a, b);

  // B({p,q}, z) = B(p, [q,z]): the first equation with a nonzero left side fixes c
  for (std::size_t p = s.even_dim; p < total; ++p)
    for (std::size_t q = s.even_dim; q < total; ++q)
      for (std::size_t z = 0; z < s.even_dim; ++z) {
        const Scalar lhs = pairing(s.form, s.brackets[p][q], z);
        if (lhs.is_zero())
          continue;
        Scalar rhs;
        for (const auto &[r, c] : s.brackets[q][z])
          rhs += c * s.form(p, r);
        s.odd_constant = rhs / lhs;
        goto solved;
      }
solved:
  if (!(s.odd_constant == Scalar(1)))
    for (std::size_t p = s.even_dim; p < total; ++p)
      for (std::size_t q = s.even_dim; q < total; ++q)
        s.brackets[p][q] = scaled(s.brackets[p][q], s.odd_constant);
  return s;
}

SuperCheck super_jacobi_check(const SuperAlgebra &s) {
  return triple_check(s, [&](std::size_t i, std::size_t j, std::size_t k) {
    const SparseVector x = basis_vector(i), y = basis_vector(j), z = basis_vector(k);
    const SparseVector lhs = s.bracket(x, s.brackets[j][k]);
    const Scalar sign = s.is_odd(i) && s.is_odd(j) ? Scalar(-1) : Scalar(1);
    const SparseVector rhs = sum(s.bracket(s.brackets[i][j], z), s.bracket(y, s.brackets[i][k]), sign);
    return lhs == rhs;
  });
}

SuperCheck form_invariance_check(const SuperAlgebra &s) { return form_invariance_check(s, s.form); }

SuperCheck form_invariance_check(const SuperAlgebra &s, const Matrix &form) {
  return triple_check(s, [&](std::size_t i, std::size_t j, std::size_t k) {
    Scalar rhs;
    for (const auto &[r, c] : s.brackets[j][k])
      rhs += c * form(i, r);
    return pairing(form, s.brackets[i][j], k) == rhs;
  });
}

Matrix perturbed_form(const SuperAlgebra &s) {
  Matrix f = s.form;
  const std::size_t g = s.even_dim - 3;
  for (std::size_t i = g; i < s.even_dim; ++i)
    for (std::size_t j = g; j < s.even_dim; ++j)
      f(i, j) = Scalar(2) * f(i, j);
  return f;
}

bool super_symmetry_holds(const SuperAlgebra &s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Scalar sign = s.is_odd(i) && s.is_odd(j) ? Scalar(1) : Scalar(-1);
      if (!(s.brackets[i][j] == scaled(s.brackets[j][i], sign)))
        return false;
    }
  return true;
}

std::string SuperCheck::witness_text(const SuperAlgebra &s) const {
  for (const auto &sec : sectors)
    if (sec.witness) {
      const auto &w = *sec.witness;
      return sec.sector + " (" + s.labels[w[0]] + ", " + s.labels[w[1]] + ", " + s.labels[w[2]] + ")";
    }
  return "";
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::ordered_json;

std::string tables_text(const SuperAlgebra &s) {
  std::string t;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      for (const auto &[k, c] : s.brackets[i][j])
        t += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ":" + c.to_string() + ";";
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.form(i, j).is_zero())
        t += std::to_string(i) + "," + std::to_string(j) + ":" + s.form(i, j).to_string() + ";";
  return t;
}

// FNV-1a, 64 bit
std::string checksum(const std::string &text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json sector_json(const SuperCheck &c) {
  ordered_json o = ordered_json::object();
  o["holds"] = c.holds;
  for (const auto &sec : c.sectors)
    o[sec.sector] = sec.holds ? "holds" : "fails";
  return o;
}

} // namespace

std::string export_json(const SuperAlgebra &s, const std::optional<std::pair<SuperCheck, SuperCheck>> &checks) {
  ordered_json j;
  j["name"] = s.name;
  j["even_dim"] = s.even_dim;
  j["odd_dim"] = s.odd_dim;
  j["labels"] = s.labels;
  ordered_json br = ordered_json::array();
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if (s.brackets[a][b].empty())
        continue;
      ordered_json terms = ordered_json::array();
      for (const auto &[k, c] : s.brackets[a][b])
        terms.push_back({k, c.to_string()});
      br.push_back({a, b, terms});
    }
  j["brackets"] = br;
  ordered_json form = ordered_json::array();
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b)
      if (!s.form(a, b).is_zero())
        form.push_back({a, b, s.form(a, b).to_string()});
  j["form"] = form;
  j["bindings"] = ordered_json::object();
  for (const auto &[k, v] : s.bindings)
    j["bindings"][k] = v;
  ordered_json digest;
  digest["checksum"] = checksum(tables_text(s));
  digest["odd_constant"] = s.odd_constant.to_string();
  if (checks) {
    digest["super_jacobi"] = sector_json(checks->first);
    digest["form_invariance"] = sector_json(checks->second);
  }
  j["digest"] = digest;
  return j.dump(2) + "\n";
}

void write_json(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw IOError("cannot open " + path + " for writing");
  out << text;
  if (!out)
    throw IOError("write to " + path + " failed");
}

SuperAlgebra parse_json(const std::string &text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SuperAlgebra s;
    s.name = j.at("name").get<std::string>();
    s.even_dim = j.at("even_dim").get<std::size_t>();
    s.odd_dim = j.at("odd_dim").get<std::size_t>();
    s.labels = j.at("labels").get<std::vector<std::string>>();
    if (s.labels.size() != s.dim())
      throw ParseError("label count does not match the dimensions");
    const std::size_t n = s.dim();
    s.brackets.assign(n, std::vector<SparseVector>(n));
    for (const auto &e : j.at("brackets")) {
      auto &slot = s.brackets.at(e.at(0).get<std::size_t>()).at(e.at(1).get<std::size_t>());
      for (const auto &t : e.at(2)) {
        const auto k = t.at(0).get<std::size_t>();
        if (k >= n)
          throw ParseError("bracket index out of range");
        slot.emplace_back(k, parse_scalar(t.at(1).get<std::string>()));
      }
    }
    s.form = Matrix(n, n);
    for (const auto &e : j.at("form")) {
      const auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
      if (a >= n || b >= n)
        throw ParseError("form index out of range");
      s.form(a, b) = parse_scalar(e.at(2).get<std::string>());
    }
    for (const auto &[k, v] : j.at("bindings").items())
      s.bindings[k] = v.get<std::string>();
    s.odd_constant = parse_scalar(j.at("digest").at("odd_constant").get<std::string>());
    return s;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("bad structure-constant document: ") + e.what());
  } catch (const std::out_of_range &e) {
    throw ParseError(std::string("index out of range: ") + e.what());
  }
}

} // namespace exlsa
