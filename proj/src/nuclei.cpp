#include "qg/nuclei.hpp"

#include <algorithm>

#include "qg/error.hpp"

namespace qg {

std::string side_name(NucleusSide side) {
  switch (side) {
    case NucleusSide::left: return "left";
    case NucleusSide::right: return "right";
    default: return "middle";
  }
}

unsigned epsilon_position(NucleusSide side) {
  switch (side) {
    case NucleusSide::left: return 2;
    case NucleusSide::right: return 1;
    default: return 3;
  }
}

ANucleus::ANucleus(NucleusSide side, unsigned degree, std::vector<Isotopy> elements)
    : side_(side), degree_(degree), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  unsigned eps = epsilon_position(side_);
  for (const Isotopy& t : elements_)
    if (!t.component(eps).is_identity())
      throw Error("nucleus element has a non-identity component in the epsilon position");
}

bool ANucleus::contains(const Isotopy& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

PermGroup ANucleus::component(unsigned position) const {
  if (position == epsilon_position(side_))
    throw EpsilonPosition();
  std::vector<Perm> ps;
  ps.reserve(elements_.size());
  for (const Isotopy& t : elements_)
    ps.push_back(t.component(position));
  return PermGroup(degree_, std::move(ps));
}

std::pair<unsigned, unsigned> ANucleus::component_positions() const {
  switch (side_) {
    case NucleusSide::left: return {1, 3};
    case NucleusSide::right: return {2, 3};
    default: return {1, 2};
  }
}

ANucleus a_nucleus(const AutotopyGroup& avt, NucleusSide side) {
  unsigned eps = epsilon_position(side);
  std::vector<Isotopy> picked;
  for (const Isotopy& t : avt.elements())
    if (t.component(eps).is_identity())
      picked.push_back(t);
  return ANucleus(side, avt.degree(), std::move(picked));
}

ANucleus a_nucleus(const Quasigroup& q, NucleusSide side, unsigned max_n) {
  return a_nucleus(autotopy_group(q, max_n), side);
}

std::vector<unsigned> garrison_nucleus(const Quasigroup& q, NucleusSide side) {
  unsigned n = q.order();
  std::vector<unsigned> out;
  for (unsigned a = 0; a < n; ++a) {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x)
      for (unsigned y = 0; y < n && ok; ++y) {
        switch (side) {
          case NucleusSide::left: ok = q.at(q.at(a, x), y) == q.at(a, q.at(x, y)); break;
          case NucleusSide::right: ok = q.at(q.at(x, y), a) == q.at(x, q.at(y, a)); break;
          default: ok = q.at(q.at(x, a), y) == q.at(x, q.at(a, y)); break;
        }
      }
    if (ok) out.push_back(a);
  }
  return out;
}

PermGroup translation_centralizer(const Quasigroup& q, TranslationKind kind) {
  unsigned n = q.order();
  std::vector<Perm> translations;
  translations.reserve(n);
  for (unsigned a = 0; a < n; ++a)
    translations.push_back(q.translation(kind, a));

  std::vector<Perm> found;
  for (unsigned c = 0; c < n; ++c) {
    // psi(0) = c pins psi: move 0 to any z through a translation and chase
    // the commutation relation psi(w 0) = w(c).
    std::vector<unsigned> img(n, n);
    bool ok = true;
    for (unsigned a = 0; a < n && ok; ++a) {
      unsigned z = translations[a][0];
      unsigned v = translations[a][c];
      if (img[z] == n)
        img[z] = v;
      else
        ok = img[z] == v;
    }
    if (!ok) continue;
    for (unsigned x = 0; x < n && ok; ++x) ok = img[x] != n;
    if (!ok) continue;
    std::vector<bool> used(n, false);
    for (unsigned v : img) {
      if (used[v]) { ok = false; break; }
      used[v] = true;
    }
    if (!ok) continue;
    Perm psi{std::move(img)};
    for (const Perm& w : translations) {
      if (compose(psi, w) != compose(w, psi)) { ok = false; break; }
    }
    if (ok) found.push_back(std::move(psi));
  }
  return PermGroup(n, std::move(found));
}

MultiplicationGroups multiplication_groups(const Quasigroup& q, std::size_t cap) {
  unsigned n = q.order();
  if (cap == 0) cap = factorial(n);
  std::vector<Perm> ls, rs, ps;
  for (unsigned a = 0; a < n; ++a) {
    ls.push_back(q.left_translation(a));
    rs.push_back(q.right_translation(a));
    ps.push_back(q.middle_translation(a));
  }
  MultiplicationGroups mg;
  mg.lm = generate_group(ls, cap);
  mg.rm = generate_group(rs, cap);
  mg.pm = generate_group(ps, cap);
  // A one-sided group that already saturates S_n forces the supergroups.
  std::size_t full = factorial(n);
  if (mg.lm && mg.lm->order() == full && full <= cap) {
    mg.m = mg.lm;
    mg.fm = mg.lm;
    return mg;
  }
  std::vector<Perm> lr = ls;
  lr.insert(lr.end(), rs.begin(), rs.end());
  mg.m = generate_group(lr, cap);
  if (mg.m && mg.m->order() == full && full <= cap) {
    mg.fm = mg.m;
    return mg;
  }
  std::vector<Perm> lrp = lr;
  lrp.insert(lrp.end(), ps.begin(), ps.end());
  mg.fm = generate_group(lrp, cap);
  return mg;
}

namespace {

bool same_group(const PermGroup& a, const PermGroup& b) { return a.elements() == b.elements(); }

}  // namespace

NucleusIsomorphismCheck nucleus_isomorphism_check(const Quasigroup& q, unsigned max_n) {
  NucleusIsomorphismCheck out;
  unsigned n = q.order();
  AutotopyGroup avt = autotopy_group(q, max_n);

  // Per-element pairing: the non-epsilon components determine each other by
  // conjugation with any translation of the matching kind.
  ANucleus check_nl = a_nucleus(avt, NucleusSide::left);
  for (const Isotopy& t : check_nl.elements())
    for (unsigned c = 0; c < n; ++c) {
      Perm rc = q.right_translation(c);
      if (t.gamma != compose(rc, compose(t.alpha, rc.inverse())))
        out.failed.push_back("left: gamma != R_c alpha R_c^-1 at c=" + std::to_string(c));
    }
  ANucleus check_nr = a_nucleus(avt, NucleusSide::right);
  for (const Isotopy& t : check_nr.elements())
    for (unsigned c = 0; c < n; ++c) {
      Perm lc = q.left_translation(c);
      if (t.gamma != compose(lc, compose(t.beta, lc.inverse())))
        out.failed.push_back("right: gamma != L_c beta L_c^-1 at c=" + std::to_string(c));
    }
  ANucleus check_nm = a_nucleus(avt, NucleusSide::middle);
  for (const Isotopy& t : check_nm.elements())
    for (unsigned c = 0; c < n; ++c) {
      Perm pc = q.middle_translation(c);
      if (t.beta != compose(pc, compose(t.alpha, pc.inverse())))
        out.failed.push_back("middle: beta != P_c alpha P_c^-1 at c=" + std::to_string(c));
    }

  // Table-3 component correspondences for the parastrophes with trivial
  // isotopy: sigma = (12) swaps left and right nuclei componentwise; sigma =
  // (23) trades left against middle.
  {
    AutotopyGroup avt12 = autotopy_group(q.parastrophe(Parastrophy::s12), max_n);
    ANucleus l12 = a_nucleus(avt12, NucleusSide::left);
    ANucleus r = a_nucleus(avt, NucleusSide::right);
    if (!same_group(l12.component(1), r.component(2)))
      out.failed.push_back("(12): 1Nl(parastrophe) != 2Nr");
    if (!same_group(l12.component(3), r.component(3)))
      out.failed.push_back("(12): 3Nl(parastrophe) != 3Nr");
    ANucleus m12 = a_nucleus(avt12, NucleusSide::middle);
    ANucleus m = a_nucleus(avt, NucleusSide::middle);
    if (!same_group(m12.component(1), m.component(2)))
      out.failed.push_back("(12): 1Nm(parastrophe) != 2Nm");
  }
  {
    AutotopyGroup avt23 = autotopy_group(q.parastrophe(Parastrophy::s23), max_n);
    ANucleus l23 = a_nucleus(avt23, NucleusSide::left);
    ANucleus m = a_nucleus(avt, NucleusSide::middle);
    if (!same_group(l23.component(1), m.component(1)))
      out.failed.push_back("(23): 1Nl(parastrophe) != 1Nm");
    if (!same_group(l23.component(3), m.component(2)))
      out.failed.push_back("(23): 3Nl(parastrophe) != 2Nm");
    ANucleus m23 = a_nucleus(avt23, NucleusSide::middle);
    ANucleus l = a_nucleus(avt, NucleusSide::left);
    if (!same_group(m23.component(1), l.component(1)))
      out.failed.push_back("(23): 1Nm(parastrophe) != 1Nl");
  }

  return out;
}

}  // namespace qg
