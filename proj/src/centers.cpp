#include "qg/centers.hpp"

#include <algorithm>
#include <set>

#include "qg/error.hpp"
#include "qg/isotopy.hpp"

namespace qg {

ACenter::ACenter(NucleusSide side, unsigned degree, std::vector<Isotopy> elements)
    : side_(side), degree_(degree), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

PermGroup ACenter::component(unsigned position) const {
  if (position == epsilon_position(side_))
    throw EpsilonPosition();
  std::vector<Perm> ps;
  ps.reserve(elements_.size());
  for (const Isotopy& t : elements_)
    ps.push_back(t.component(position));
  return PermGroup(degree_, std::move(ps));
}

ACenter a_center(const AutotopyGroup& avt, NucleusSide side) {
  NucleusSide first, second;
  switch (side) {
    case NucleusSide::left: first = NucleusSide::right; second = NucleusSide::middle; break;
    case NucleusSide::right: first = NucleusSide::left; second = NucleusSide::middle; break;
    default: first = NucleusSide::left; second = NucleusSide::right; break;
  }
  ANucleus na = a_nucleus(avt, first);
  ANucleus nb = a_nucleus(avt, second);
  ANucleus own = a_nucleus(avt, side);

  std::set<Isotopy> product;
  for (const Isotopy& s : na.elements())
    for (const Isotopy& t : nb.elements())
      product.insert(then(s, t));

  bool product_subgroup = true;
  for (const Isotopy& s : product) {
    if (!product.count(s.inverse())) { product_subgroup = false; break; }
    for (const Isotopy& t : product)
      if (!product.count(then(s, t))) { product_subgroup = false; break; }
    if (!product_subgroup) break;
  }

  std::vector<Isotopy> picked;
  for (const Isotopy& t : product)
    if (own.contains(t))
      picked.push_back(t);
  ACenter z(side, avt.degree(), std::move(picked));
  z.set_product_was_subgroup(product_subgroup);
  return z;
}

ACenter a_center(const Quasigroup& q, NucleusSide side, unsigned max_n) {
  return a_center(autotopy_group(q, max_n), side);
}

std::vector<unsigned> loop_center(const Quasigroup& q) {
  if (!q.is_loop())
    throw NotALoop();
  unsigned n = q.order();
  auto nl = garrison_nucleus(q, NucleusSide::left);
  auto nr = garrison_nucleus(q, NucleusSide::right);
  auto nm = garrison_nucleus(q, NucleusSide::middle);
  auto in = [](const std::vector<unsigned>& v, unsigned a) {
    return std::find(v.begin(), v.end(), a) != v.end();
  };
  std::vector<unsigned> out;
  for (unsigned a = 0; a < n; ++a) {
    if (!in(nl, a) || !in(nr, a) || !in(nm, a)) continue;
    bool commutes = true;
    for (unsigned x = 0; x < n && commutes; ++x)
      commutes = q.at(a, x) == q.at(x, a);
    if (commutes) out.push_back(a);
  }
  return out;
}

bool is_group_isotope(const Quasigroup& q) {
  return lp_isotope(q, LpKind::loop, 0, 0).is_associative();
}

bool is_abelian_group_isotope(const Quasigroup& q) {
  Quasigroup loop = lp_isotope(q, LpKind::loop, 0, 0);
  return loop.is_associative() && loop.is_commutative();
}

bool is_a_nuclear(const Quasigroup& q, unsigned max_n) {
  AutotopyGroup avt = autotopy_group(q, max_n);
  ANucleus nl = a_nucleus(avt, NucleusSide::left);
  return nl.component(1).action_profile().transitive;
}

bool is_a_central(const Quasigroup& q, unsigned max_n) {
  ACenter zl = a_center(q, NucleusSide::left, max_n);
  return zl.component(1).action_profile().transitive;
}

bool identity_check(const Quasigroup& q, IdentityKind kind, const std::vector<Perm>& perms) {
  unsigned n = q.order();
  bool permuted = kind == IdentityKind::permutation_medial ||
                  kind == IdentityKind::permutation_paramedial;
  std::vector<Perm> a = perms;
  if (permuted) {
    if (a.size() != 8)
      throw Error("permutation identity needs eight permutations");
    for (const Perm& p : a)
      if (p.degree() != n)
        throw DegreeMismatch(n, p.degree());
  } else {
    a.assign(8, Perm::identity(n));
  }
  bool medial = kind == IdentityKind::medial || kind == IdentityKind::permutation_medial;
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      for (unsigned u = 0; u < n; ++u)
        for (unsigned v = 0; v < n; ++v) {
          unsigned lhs = q.at(a[0][q.at(a[1][x], a[2][y])], a[3][q.at(a[4][u], a[5][v])]);
          unsigned rhs = medial ? q.at(a[6][q.at(x, u)], a[7][q.at(y, v)])
                                : q.at(a[6][q.at(v, y)], a[7][q.at(u, x)]);
          if (lhs != rhs) return false;
        }
  return true;
}

SemidirectCheck semidirect_structure_check(const Quasigroup& q, unsigned max_n) {
  if (!q.is_loop())
    throw NotALoop();
  SemidirectCheck out;
  AutotopyGroup avt = autotopy_group(q, max_n);
  ANucleus nl = a_nucleus(avt, NucleusSide::left);
  ANucleus nr = a_nucleus(avt, NucleusSide::right);
  ANucleus nm = a_nucleus(avt, NucleusSide::middle);

  Isotopy id = Isotopy::identity(q.order());
  auto trivial_meet = [&](const ANucleus& a, const ANucleus& b, const char* label) {
    for (const Isotopy& t : a.elements())
      if (t != id && b.contains(t))
        out.failed.push_back(std::string("nontrivial intersection ") + label);
  };
  trivial_meet(nl, nr, "Nl ^ Nr");
  trivial_meet(nl, nm, "Nl ^ Nm");
  trivial_meet(nr, nm, "Nr ^ Nm");

  // Paired components commute elementwise.
  auto commute = [&](const PermGroup& g, const PermGroup& h, const char* label) {
    for (const Perm& mu : g.elements())
      for (const Perm& nu : h.elements())
        if (compose(mu, nu) != compose(nu, mu)) {
          out.failed.push_back(std::string("noncommuting pair ") + label);
          return;
        }
  };
  commute(nl.component(1), nm.component(1), "1Nl vs 1Nm");
  commute(nr.component(2), nm.component(2), "2Nr vs 2Nm");
  commute(nl.component(3), nr.component(3), "3Nl vs 3Nr");

  // (Nl * Nr) meets Aut trivially.
  for (const Isotopy& s : nl.elements())
    for (const Isotopy& t : nr.elements()) {
      Isotopy prod = then(s, t);
      if (prod.alpha == prod.beta && prod.beta == prod.gamma && !prod.is_identity())
        out.failed.push_back("nucleus product meets Aut nontrivially");
    }

  std::size_t aut = 0;
  for (const Isotopy& t : avt.elements())
    if (t.alpha == t.beta && t.beta == t.gamma) ++aut;
  std::size_t h = nl.order() * nr.order() * aut;
  if (h == 0 || avt.order() % h != 0)
    out.failed.push_back("|Nl|*|Nr|*|Aut| does not divide |Avt|");
  return out;
}

}  // namespace qg
