#include "qg/inverse.hpp"

#include <algorithm>
#include <set>

#include "qg/congruence.hpp"
#include "qg/error.hpp"
#include "qg/nuclei.hpp"

namespace qg {

InverseFamily parse_inverse_family(const std::string& name) {
  if (name == "lambda") return InverseFamily::lambda;
  if (name == "rho") return InverseFamily::rho;
  if (name == "mu") return InverseFamily::mu;
  if (name == "abc") return InverseFamily::abc;
  if (name == "rst") return InverseFamily::rst;
  if (name == "m" || name == "m_inverse") return InverseFamily::m_inverse;
  if (name == "wip") return InverseFamily::wip;
  if (name == "ci") return InverseFamily::ci;
  throw ParseError("unknown inverse family '" + name + "'");
}

std::string inverse_family_name(InverseFamily family) {
  switch (family) {
    case InverseFamily::lambda: return "lambda";
    case InverseFamily::rho: return "rho";
    case InverseFamily::mu: return "mu";
    case InverseFamily::abc: return "abc";
    case InverseFamily::rst: return "rst";
    case InverseFamily::m_inverse: return "m";
    case InverseFamily::wip: return "wip";
    default: return "ci";
  }
}

InverseWitness InverseWitness::triple(InverseFamily family, Perm p1, Perm p2, Perm p3) {
  if (family != InverseFamily::lambda && family != InverseFamily::rho &&
      family != InverseFamily::mu && family != InverseFamily::abc)
    throw Error("triple witness requires a lambda/rho/mu/abc family");
  if (p1.degree() != p2.degree() || p1.degree() != p3.degree())
    throw DegreeMismatch(p1.degree(), p2.degree());
  InverseWitness w;
  w.family = family;
  w.perms = {std::move(p1), std::move(p2), std::move(p3)};
  return w;
}

InverseWitness InverseWitness::with_j(InverseFamily family, Perm j, long r, long s, long t) {
  InverseWitness w;
  w.family = family;
  w.perms = {std::move(j)};
  switch (family) {
    case InverseFamily::rst: w.r = r; w.s = s; w.t = t; break;
    case InverseFamily::m_inverse: w.r = r; w.s = r + 1; w.t = r; break;
    case InverseFamily::wip: w.r = 1; w.s = 0; w.t = 1; break;
    case InverseFamily::ci: w.r = 0; w.s = 1; w.t = 0; break;
    default: throw Error("J witness requires an rst/m/wip/ci family");
  }
  return w;
}

std::vector<Perm> InverseWitness::effective_triple() const {
  if (perms.size() == 3) return perms;
  const Perm& j = perms[0];
  return {power(j, r), power(j, s), power(j, t)};
}

unsigned InverseWitness::degree() const {
  return perms.empty() ? 0 : perms[0].degree();
}

std::string InverseWitness::to_string() const {
  std::string s = inverse_family_name(family) + ":";
  if (perms.size() == 1) {
    s += " J=" + perms[0].to_string();
    if (family == InverseFamily::rst)
      s += " (r,s,t)=(" + std::to_string(r) + "," + std::to_string(this->s) + "," +
           std::to_string(t) + ")";
    if (family == InverseFamily::m_inverse) s += " m=" + std::to_string(r);
  } else {
    for (const Perm& p : perms) s += " " + p.to_string();
  }
  return s;
}

bool check_witness(const Quasigroup& q, const InverseWitness& w) {
  if (w.degree() != q.order())
    throw DegreeMismatch(q.order(), w.degree());
  unsigned n = q.order();
  switch (w.family) {
    case InverseFamily::lambda: {
      const Perm &l1 = w.perms[0], &l2 = w.perms[1], &l3 = w.perms[2];
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
          if (q.at(l1[x], l2[q.at(x, y)]) != l3[y]) return false;
      return true;
    }
    case InverseFamily::rho: {
      const Perm &r1 = w.perms[0], &r2 = w.perms[1], &r3 = w.perms[2];
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
          if (q.at(r1[q.at(x, y)], r2[y]) != r3[x]) return false;
      return true;
    }
    case InverseFamily::mu: {
      const Perm &m1 = w.perms[0], &m2 = w.perms[1], &m3 = w.perms[2];
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
          if (q.at(m1[y], m2[x]) != m3[q.at(x, y)]) return false;
      return true;
    }
    default: {
      std::vector<Perm> abg = w.effective_triple();
      const Perm &a = abg[0], &b = abg[1], &c = abg[2];
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
          if (q.at(a[q.at(x, y)], b[x]) != c[y]) return false;
      return true;
    }
  }
}

Isostrophy witness_isostrophy(unsigned degree, const InverseWitness& w) {
  if (w.degree() != degree)
    throw DegreeMismatch(degree, w.degree());
  // Each identity asserts that a component-permuted image of every product
  // triple is again a product triple; translating to the
  // parastrophe-then-isotopy record reindexes the maps by the parastrophy.
  switch (w.family) {
    case InverseFamily::lambda:
      // (x, z, y) triple shape: sigma = (23), components (l1, l3, l2).
      return Isostrophy(Parastrophy::s23, Isotopy(w.perms[0], w.perms[2], w.perms[1]));
    case InverseFamily::rho:
      // sigma = (13), components (r3, r2, r1).
      return Isostrophy(Parastrophy::s13, Isotopy(w.perms[2], w.perms[1], w.perms[0]));
    case InverseFamily::mu:
      // sigma = (12), components (m2, m1, m3).
      return Isostrophy(Parastrophy::s12, Isotopy(w.perms[1], w.perms[0], w.perms[2]));
    default: {
      // abc-shaped families: sigma = (123), components (b, c, a).
      std::vector<Perm> abg = w.effective_triple();
      return Isostrophy(Parastrophy::s123, Isotopy(abg[1], abg[2], abg[0]));
    }
  }
}

bool autostrophy_bridge(const Quasigroup& q, const InverseWitness& w) {
  return apply_isostrophy(q, witness_isostrophy(q.order(), w)) == q;
}

SpecialFamily parse_special_family(const std::string& name) {
  if (name == "lip") return SpecialFamily::lip;
  if (name == "rip") return SpecialFamily::rip;
  if (name == "ip") return SpecialFamily::ip;
  if (name == "wip") return SpecialFamily::wip;
  if (name == "ci") return SpecialFamily::ci;
  if (name == "ts") return SpecialFamily::ts;
  throw ParseError("unknown special family '" + name + "'");
}

std::string special_family_name(SpecialFamily family) {
  switch (family) {
    case SpecialFamily::lip: return "lip";
    case SpecialFamily::rip: return "rip";
    case SpecialFamily::ip: return "ip";
    case SpecialFamily::wip: return "wip";
    case SpecialFamily::ci: return "ci";
    default: return "ts";
  }
}

namespace {

// lambda(x) is the element whose left translation inverts L_x.
std::optional<Perm> pointwise_lip_map(const Quasigroup& q) {
  unsigned n = q.order();
  std::vector<unsigned> img(n, n);
  for (unsigned x = 0; x < n; ++x) {
    Perm target = q.left_translation(x).inverse();
    for (unsigned w = 0; w < n; ++w)
      if (q.left_translation(w) == target) {
        img[x] = w;
        break;
      }
    if (img[x] == n) return std::nullopt;
  }
  std::vector<bool> used(n, false);
  for (unsigned v : img) {
    if (used[v]) return std::nullopt;
    used[v] = true;
  }
  return Perm(std::move(img));
}

std::optional<Perm> pointwise_rip_map(const Quasigroup& q) {
  unsigned n = q.order();
  std::vector<unsigned> img(n, n);
  for (unsigned y = 0; y < n; ++y) {
    Perm target = q.right_translation(y).inverse();
    for (unsigned w = 0; w < n; ++w)
      if (q.right_translation(w) == target) {
        img[y] = w;
        break;
      }
    if (img[y] == n) return std::nullopt;
  }
  std::vector<bool> used(n, false);
  for (unsigned v : img) {
    if (used[v]) return std::nullopt;
    used[v] = true;
  }
  return Perm(std::move(img));
}

}  // namespace

std::optional<InverseWitness> detect_special(const Quasigroup& q, SpecialFamily family) {
  unsigned n = q.order();
  Perm e = Perm::identity(n);
  switch (family) {
    case SpecialFamily::lip: {
      auto lam = pointwise_lip_map(q);
      if (!lam) return std::nullopt;
      InverseWitness w = InverseWitness::triple(InverseFamily::lambda, *lam, e, e);
      if (check_witness(q, w)) return w;
      return std::nullopt;
    }
    case SpecialFamily::rip: {
      auto rho = pointwise_rip_map(q);
      if (!rho) return std::nullopt;
      InverseWitness w = InverseWitness::triple(InverseFamily::rho, e, *rho, e);
      if (check_witness(q, w)) return w;
      return std::nullopt;
    }
    case SpecialFamily::ip: {
      if (detect_special(q, SpecialFamily::lip) && detect_special(q, SpecialFamily::rip))
        return detect_special(q, SpecialFamily::lip);
      return std::nullopt;
    }
    case SpecialFamily::ci: {
      auto id = q.identity();
      if (!id) throw NotALoop();
      std::vector<unsigned> img(n);
      for (unsigned x = 0; x < n; ++x) img[x] = q.ldiv(x, *id);  // x * Jx = 1
      std::vector<bool> used(n, false);
      for (unsigned v : img) {
        if (used[v]) return std::nullopt;
        used[v] = true;
      }
      InverseWitness w = InverseWitness::with_j(InverseFamily::ci, Perm(std::move(img)));
      if (check_witness(q, w)) return w;
      return std::nullopt;
    }
    case SpecialFamily::wip: {
      auto id = q.identity();
      if (!id) throw NotALoop();
      // J(x*1)*x = J(1) pins J(x) = R_x^-1(J(1)); try every seed.
      for (unsigned seed = 0; seed < n; ++seed) {
        std::vector<unsigned> img(n);
        bool perm_ok = true;
        std::vector<bool> used(n, false);
        for (unsigned x = 0; x < n; ++x) {
          img[x] = q.rdiv(seed, x);  // img[x] * x = seed
          if (used[img[x]]) { perm_ok = false; break; }
          used[img[x]] = true;
        }
        if (!perm_ok) continue;
        InverseWitness w = InverseWitness::with_j(InverseFamily::wip, Perm(std::move(img)));
        if (check_witness(q, w)) return w;
      }
      return std::nullopt;
    }
    default: {  // ts
      if (!q.is_commutative()) return std::nullopt;
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
          if (q.at(x, q.at(x, y)) != y) return std::nullopt;
      // x*(x*y) = y and commutativity make J = identity a CI witness.
      return InverseWitness::with_j(InverseFamily::ci, e);
    }
  }
}

namespace {

bool groups_equal(const PermGroup& a, const PermGroup& b) { return a.elements() == b.elements(); }

PermGroup conj(const Perm& left, const PermGroup& g, const Perm& right) {
  std::vector<Perm> out;
  out.reserve(g.order());
  for (const Perm& p : g.elements())
    out.push_back(compose(left, compose(p, right)));
  return PermGroup(g.degree(), std::move(out));
}

}  // namespace

NucleusCoincidenceReport nucleus_coincidence_check(const Quasigroup& q, const InverseWitness& w,
                                                   unsigned max_n) {
  if (!check_witness(q, w))
    throw WitnessInvalid("witness does not hold on this quasigroup");
  NucleusCoincidenceReport rep;
  AutotopyGroup avt = autotopy_group(q, max_n);
  ANucleus nl = a_nucleus(avt, NucleusSide::left);
  ANucleus nr = a_nucleus(avt, NucleusSide::right);
  ANucleus nm = a_nucleus(avt, NucleusSide::middle);

  auto expect = [&](bool ok, const std::string& label) {
    (ok ? rep.checked : rep.failed).push_back(label);
  };

  // Conjugating Avt by the witness autostrophy S = (sigma, (s1,s2,s3)) sends
  // the autotopy (t1,t2,t3) to (u1,u2,u3) with u_i = s_i^-1 t_{sigma(i)} s_i,
  // and fixes Avt setwise.  So the nucleus with identity in position p lands
  // on the nucleus with identity in position sigma^-1(p), component j going
  // to position i = sigma^-1(j) conjugated by s_i.
  Isostrophy strophe = witness_isostrophy(q.order(), w);
  const Parastrophy sigma = strophe.sigma;
  auto side_of_eps = [](unsigned pos) {
    return pos == 2 ? NucleusSide::left : (pos == 1 ? NucleusSide::right : NucleusSide::middle);
  };
  auto nucleus_of = [&](NucleusSide s) -> const ANucleus& {
    return s == NucleusSide::left ? nl : (s == NucleusSide::right ? nr : nm);
  };
  Parastrophy sigma_inv = sigma.inverse();
  for (NucleusSide source : {NucleusSide::left, NucleusSide::right, NucleusSide::middle}) {
    unsigned p = epsilon_position(source);
    NucleusSide target = side_of_eps(sigma_inv.apply(p));
    auto [j1, j2] = nucleus_of(source).component_positions();
    for (unsigned j : {j1, j2}) {
      unsigned i = sigma_inv.apply(j);
      const Perm& s_i = strophe.t.component(i);
      bool ok = groups_equal(nucleus_of(target).component(i),
                             conj(s_i.inverse(), nucleus_of(source).component(j), s_i));
      expect(ok, std::to_string(i) + "N" + side_name(target).substr(0, 1) + " = s" +
                     std::to_string(i) + "^-1 " + std::to_string(j) + "N" +
                     side_name(source).substr(0, 1) + " s" + std::to_string(i));
    }
  }

  // Loop cases: Garrison nucleus coincidence, plus normality when claimed.
  if (q.is_loop()) {
    auto gl = garrison_nucleus(q, NucleusSide::left);
    auto gr = garrison_nucleus(q, NucleusSide::right);
    auto gm = garrison_nucleus(q, NucleusSide::middle);
    bool coincide = false, claims_normal = false;
    if (w.perms.size() == 1 || w.family == InverseFamily::abc ||
        w.family == InverseFamily::rst || w.family == InverseFamily::m_inverse ||
        w.family == InverseFamily::wip || w.family == InverseFamily::ci) {
      std::vector<Perm> abg = w.effective_triple();
      bool a_id = abg[0].is_identity(), b_id = abg[1].is_identity(), c_id = abg[2].is_identity();
      bool a_binv = abg[0] == abg[1].inverse();
      bool c_ainv = abg[2] == abg[0].inverse();
      bool c_binv = abg[2] == abg[1].inverse();
      if (a_id || b_id || c_id || a_binv || c_ainv || c_binv)
        coincide = true;
      claims_normal = a_id || c_id || a_binv || c_binv;
      // m-inverse with J = I_r also coincides (Theorem on m-inverse loops);
      // that instance satisfies the c_ainv shape test above only when the
      // exponents line up, so test it directly.
      if (!coincide && (w.family == InverseFamily::m_inverse || w.family == InverseFamily::rst)) {
        auto ci_w = detect_special(q, SpecialFamily::ci);
        if (ci_w && w.perms[0] == ci_w->perms[0]) coincide = true;
      }
    }
    if (coincide) {
      expect(gl == gr && gr == gm, "Nl = Nr = Nm");
      if (claims_normal && gl == gr && gr == gm && !gl.empty()) {
        // Coset partition of the common nucleus must be a normal congruence.
        std::set<std::set<unsigned>> cosets;
        for (unsigned x = 0; x < q.order(); ++x) {
          std::set<unsigned> cs;
          for (unsigned v : gl) cs.insert(q.at(x, v));
          cosets.insert(std::move(cs));
        }
        std::vector<std::vector<unsigned>> blocks;
        for (const auto& cs : cosets) blocks.emplace_back(cs.begin(), cs.end());
        bool normal = false;
        try {
          Partition p(q.order(), std::move(blocks));
          normal = congruence_check(q, p, CongruenceMode::normal);
        } catch (const Error&) {
          normal = false;
        }
        expect(normal, "nucleus coset congruence is normal");
      }
    }
  }
  return rep;
}

}  // namespace qg
