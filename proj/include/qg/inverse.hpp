#ifndef QG_INVERSE_HPP
#define QG_INVERSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qg/autotopy.hpp"
#include "qg/isotopy.hpp"
#include "qg/perm.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

// Inverse-property families, each a permutation identity:
//   lambda:    l1 x * l2 (x*y) = l3 y
//   rho:       r1 (x*y) * r2 y = r3 x
//   abc:       a (x*y) * b x = c y
//   mu:        m1 y * m2 x = m3 (x*y)
//   rst:       J^r (x*y) * J^s x = J^t y
//   m_inverse: J^m (x*y) * J^(m+1) x = J^m y
//   wip:       J (x*y) * x = J y
//   ci:        (x*y) * J x = y
enum class InverseFamily { lambda, rho, mu, abc, rst, m_inverse, wip, ci };

InverseFamily parse_inverse_family(const std::string& name);
std::string inverse_family_name(InverseFamily family);

struct InverseWitness {
  InverseFamily family = InverseFamily::ci;
  std::vector<Perm> perms;  // triple (lambda/rho/mu/abc) or single J (rst/m/wip/ci)
  long r = 0, s = 0, t = 0;  // exponents; m_inverse uses r as m

  static InverseWitness triple(InverseFamily family, Perm p1, Perm p2, Perm p3);
  static InverseWitness with_j(InverseFamily family, Perm j, long r = 0, long s = 0, long t = 0);

  // The witness reduced to the three maps (a, b, c) of a (123)-autostrophe
  // shape; lambda/rho/mu keep their own shapes.
  std::vector<Perm> effective_triple() const;

  unsigned degree() const;
  std::string to_string() const;
};

// Direct n^2 scan of the family's defining identity.
bool check_witness(const Quasigroup& q, const InverseWitness& w);

// The autostrophy route: builds the isostrophy whose fixed points are
// exactly the quasigroups satisfying the identity, then tests
// apply_isostrophy(q, s) == q.  Agrees with check_witness by construction
// of the translation between the two formulations.
bool autostrophy_bridge(const Quasigroup& q, const InverseWitness& w);
Isostrophy witness_isostrophy(unsigned degree, const InverseWitness& w);

enum class SpecialFamily { lip, rip, ip, wip, ci, ts };

SpecialFamily parse_special_family(const std::string& name);
std::string special_family_name(SpecialFamily family);

// Canonical-witness detection:
//   lip: pointwise lambda with L_{lambda x} = L_x^-1, as a lambda-witness
//        (lambda, e, e); rip dually with R; ip requires both.
//   ci (loop): J x = right inverse of x;  wip (loop): J pinned by J(1).
//   ts: commutativity plus x*(x*y) = y.
// Families needing an identity element throw NotALoop.
std::optional<InverseWitness> detect_special(const Quasigroup& q, SpecialFamily family);

struct NucleusCoincidenceReport {
  std::vector<std::string> checked;  // human-readable relations that held
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

// Conjugation relations between A-nucleus component groups forced by the
// witness' autostrophy (six relations for the abc family, the family-specific
// ones for lambda/rho/mu), plus Garrison nucleus coincidence and normality
// in the loop cases that claim them.  Throws WitnessInvalid unless
// check_witness(q, w) holds.
NucleusCoincidenceReport nucleus_coincidence_check(const Quasigroup& q, const InverseWitness& w,
                                                   unsigned max_n = kDefaultAutotopySearchBound);

}  // namespace qg

#endif
