#include "qg/quasigroup.hpp"

#include <algorithm>

#include "qg/error.hpp"

namespace qg {

const Parastrophy Parastrophy::e{{0, 1, 2}};
const Parastrophy Parastrophy::s12{{1, 0, 2}};
const Parastrophy Parastrophy::s13{{2, 1, 0}};
const Parastrophy Parastrophy::s23{{0, 2, 1}};
const Parastrophy Parastrophy::s123{{1, 2, 0}};  // 1->2, 2->3, 3->1
const Parastrophy Parastrophy::s132{{2, 0, 1}};  // 1->3, 3->2, 2->1

const std::array<Parastrophy, 6>& Parastrophy::all() {
  static const std::array<Parastrophy, 6> a{e, s12, s13, s23, s123, s132};
  return a;
}

Parastrophy Parastrophy::parse(std::string_view name) {
  std::string s(name);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == '(' || c == ')' || c == ' '; }),
          s.end());
  if (s == "e" || s == "eps" || s == "1") return e;
  if (s == "12") return s12;
  if (s == "13") return s13;
  if (s == "23") return s23;
  if (s == "123") return s123;
  if (s == "132") return s132;
  throw ParseError("unknown parastrophy '" + std::string(name) + "'");
}

Parastrophy Parastrophy::inverse() const {
  std::array<unsigned, 3> inv{};
  for (unsigned i = 0; i < 3; ++i) inv[map_[i]] = i;
  return Parastrophy(inv);
}

std::string Parastrophy::name() const {
  if (*this == e) return "e";
  if (*this == s12) return "12";
  if (*this == s13) return "13";
  if (*this == s23) return "23";
  if (*this == s123) return "123";
  return "132";
}

Parastrophy compose(const Parastrophy& s, const Parastrophy& t) {
  std::array<unsigned, 3> m{};
  for (unsigned i = 1; i <= 3; ++i) m[i - 1] = s.apply(t.apply(i)) - 1;
  return Parastrophy(m);
}

Quasigroup Quasigroup::validate(unsigned n, const std::vector<std::vector<unsigned>>& grid) {
  if (n == 0 || grid.size() != n)
    throw Error("table must have n rows");
  Quasigroup q;
  q.n_ = n;
  q.table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (unsigned x = 0; x < n; ++x) {
    if (grid[x].size() != n)
      throw RowNotPermutation(x);
    std::vector<bool> seen(n, false);
    for (unsigned y = 0; y < n; ++y) {
      unsigned v = grid[x][y];
      if (v >= n || seen[v])
        throw RowNotPermutation(x);
      seen[v] = true;
      q.table_[x * n + y] = v;
    }
  }
  for (unsigned y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (unsigned x = 0; x < n; ++x) {
      unsigned v = q.table_[x * n + y];
      if (seen[v])
        throw ColumnNotPermutation(y);
      seen[v] = true;
    }
  }
  q.ldiv_.assign(q.table_.size(), 0);
  q.rdiv_.assign(q.table_.size(), 0);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      unsigned z = q.table_[x * n + y];
      q.ldiv_[x * n + z] = y;  // x \ z = y
      q.rdiv_[z * n + y] = x;  // z / y = x
    }
  return q;
}

Quasigroup Quasigroup::cyclic(unsigned n) {
  std::vector<std::vector<unsigned>> grid(n, std::vector<unsigned>(n));
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      grid[x][y] = (x + y) % n;
  return validate(n, grid);
}

Perm Quasigroup::left_translation(unsigned a) const {
  std::vector<unsigned> img(n_);
  for (unsigned x = 0; x < n_; ++x) img[x] = at(a, x);
  return Perm(std::move(img));
}

Perm Quasigroup::right_translation(unsigned a) const {
  std::vector<unsigned> img(n_);
  for (unsigned x = 0; x < n_; ++x) img[x] = at(x, a);
  return Perm(std::move(img));
}

Perm Quasigroup::middle_translation(unsigned a) const {
  std::vector<unsigned> img(n_);
  for (unsigned x = 0; x < n_; ++x) img[x] = ldiv(x, a);  // x * img = a
  return Perm(std::move(img));
}

Perm Quasigroup::translation(TranslationKind kind, unsigned a) const {
  switch (kind) {
    case TranslationKind::left: return left_translation(a);
    case TranslationKind::right: return right_translation(a);
    default: return middle_translation(a);
  }
}

LocalMaps Quasigroup::local_maps() const {
  LocalMaps lm;
  lm.e.resize(n_);
  lm.f.resize(n_);
  lm.s.resize(n_);
  for (unsigned x = 0; x < n_; ++x) {
    lm.e[x] = ldiv(x, x);
    lm.f[x] = rdiv(x, x);
    lm.s[x] = at(x, x);
  }
  auto constant = [&](const std::vector<unsigned>& v) {
    return std::all_of(v.begin(), v.end(), [&](unsigned w) { return w == v[0]; });
  };
  auto is_id = [&](const std::vector<unsigned>& v) {
    for (unsigned x = 0; x < n_; ++x)
      if (v[x] != x) return false;
    return true;
  };
  lm.left_loop = constant(lm.f);
  lm.right_loop = constant(lm.e);
  lm.unipotent = constant(lm.s);
  lm.idempotent = is_id(lm.e) && is_id(lm.f) && is_id(lm.s);
  return lm;
}

std::optional<unsigned> Quasigroup::left_identity() const {
  for (unsigned c = 0; c < n_; ++c) {
    bool ok = true;
    for (unsigned x = 0; x < n_ && ok; ++x) ok = at(c, x) == x;
    if (ok) return c;
  }
  return std::nullopt;
}

std::optional<unsigned> Quasigroup::right_identity() const {
  for (unsigned c = 0; c < n_; ++c) {
    bool ok = true;
    for (unsigned x = 0; x < n_ && ok; ++x) ok = at(x, c) == x;
    if (ok) return c;
  }
  return std::nullopt;
}

std::optional<unsigned> Quasigroup::identity() const {
  auto l = left_identity();
  if (l && right_identity() == l) return l;
  return std::nullopt;
}

bool Quasigroup::is_commutative() const {
  for (unsigned x = 0; x < n_; ++x)
    for (unsigned y = x + 1; y < n_; ++y)
      if (at(x, y) != at(y, x)) return false;
  return true;
}

bool Quasigroup::is_associative() const {
  for (unsigned x = 0; x < n_; ++x)
    for (unsigned y = 0; y < n_; ++y)
      for (unsigned z = 0; z < n_; ++z)
        if (at(at(x, y), z) != at(x, at(y, z))) return false;
  return true;
}

// A^sigma(x_{sigma 1}, x_{sigma 2}) = x_{sigma 3} whenever x1*x2 = x3.
Quasigroup Quasigroup::parastrophe(const Parastrophy& sigma) const {
  std::vector<std::vector<unsigned>> grid(n_, std::vector<unsigned>(n_));
  for (unsigned x1 = 0; x1 < n_; ++x1)
    for (unsigned x2 = 0; x2 < n_; ++x2) {
      std::array<unsigned, 3> t{x1, x2, at(x1, x2)};
      grid[t[sigma.apply(1) - 1]][t[sigma.apply(2) - 1]] = t[sigma.apply(3) - 1];
    }
  return validate(n_, grid);
}

std::vector<std::vector<unsigned>> Quasigroup::rows() const {
  std::vector<std::vector<unsigned>> out(n_, std::vector<unsigned>(n_));
  for (unsigned x = 0; x < n_; ++x)
    for (unsigned y = 0; y < n_; ++y) out[x][y] = at(x, y);
  return out;
}

bool tau_property(const std::vector<Perm>& perms) {
  if (perms.empty())
    throw SizeMismatch("empty permutation set");
  unsigned degree = perms[0].degree();
  for (const Perm& p : perms)
    if (p.degree() != degree)
      throw DegreeMismatch(degree, p.degree());
  if (perms.size() != degree)
    throw SizeMismatch("set of " + std::to_string(perms.size()) +
                       " permutations on a set of size " + std::to_string(degree));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      if (i == j) continue;
      if (!compose(perms[i], perms[j].inverse()).fixed_point_free())
        return false;
    }
  return true;
}

bool simply_transitive(const std::vector<Perm>& perms) {
  if (perms.empty()) return false;
  unsigned degree = perms[0].degree();
  for (unsigned x = 0; x < degree; ++x)
    for (unsigned y = 0; y < degree; ++y) {
      std::size_t count = 0;
      for (const Perm& p : perms)
        if (p[x] == y) ++count;
      if (count != 1) return false;
    }
  return true;
}

}  // namespace qg
