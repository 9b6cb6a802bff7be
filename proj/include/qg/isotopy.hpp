#ifndef QG_ISOTOPY_HPP
#define QG_ISOTOPY_HPP

#include <string>
#include <vector>

#include "qg/perm.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

// An isotopy (alpha, beta, gamma): transports x*y to gamma^-1(alpha x * beta y).
struct Isotopy {
  Perm alpha, beta, gamma;

  Isotopy() = default;
  Isotopy(Perm a, Perm b, Perm c);  // throws DegreeMismatch

  static Isotopy identity(unsigned degree);

  unsigned degree() const { return alpha.degree(); }
  bool is_identity() const;
  Isotopy inverse() const;
  const Perm& component(unsigned i) const;  // 1-based

  auto operator<=>(const Isotopy&) const = default;
  std::string to_string() const;
};

// then(t, s): apply t to the quasigroup first, then s.
// apply_isotopy(apply_isotopy(q, t), s) == apply_isotopy(q, then(t, s)).
Isotopy then(const Isotopy& t, const Isotopy& s);

// conjugate(t, s) = t^-1 s t (apply t^-1, then s, then t).
Isotopy conjugate(const Isotopy& t, const Isotopy& s);

Quasigroup apply_isotopy(const Quasigroup& q, const Isotopy& t);

// Parastrophy followed by isotopy.
struct Isostrophy {
  Parastrophy sigma;
  Isotopy t;

  Isostrophy() = default;
  Isostrophy(Parastrophy s, Isotopy iso) : sigma(s), t(std::move(iso)) {}

  static Isostrophy identity(unsigned degree);

  unsigned degree() const { return t.degree(); }
  bool is_identity() const { return sigma == Parastrophy::e && t.is_identity(); }

  auto operator<=>(const Isostrophy&) const = default;
  std::string to_string() const;
};

Quasigroup apply_isostrophy(const Quasigroup& q, const Isostrophy& s);

// Sequential composition: apply s1 first, then s2.  The defining contract is
// apply_isostrophy(apply_isostrophy(q, s1), s2) ==
// apply_isostrophy(q, compose_isostrophy(s1, s2)) for every q.
Isostrophy compose_isostrophy(const Isostrophy& s1, const Isostrophy& s2);

Isostrophy invert_isostrophy(const Isostrophy& s);

enum class LpKind { loop, unipotent_right, unipotent_left };

// The three canonical loop-producing isotopies of Theorem LP_ISOT_AND_ANALOGS:
//   loop:            (R_a^-1, L_b^-1, e)      -> loop with identity b*a
//   unipotent_right: (e, P_a, R_b)            -> unipotent right loop
//   unipotent_left:  (P_a^-1, e, L_b)         -> unipotent left loop
Isotopy lp_isotopy(const Quasigroup& q, LpKind kind, unsigned a, unsigned b);
Quasigroup lp_isotope(const Quasigroup& q, LpKind kind, unsigned a, unsigned b);

struct TransportCheck {
  std::string lemma;  // which translation-transport case applied
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

// Verifies the translation-transport equalities for a one-component isotopy
// or an LP-shaped isotopy; throws UnsupportedShape otherwise.
TransportCheck transport_check(const Quasigroup& q, const Isotopy& t);

}  // namespace qg

#endif
