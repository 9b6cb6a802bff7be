#ifndef QG_CENTERS_HPP
#define QG_CENTERS_HPP

#include <string>
#include <vector>

#include "qg/autotopy.hpp"
#include "qg/nuclei.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

// The side's A-center: the setwise product of the two complementary
// A-nuclei inside Avt, intersected with the side's own nucleus.  Always an
// abelian subgroup of Avt (the complementary nuclei are normal, so the
// product set is a subgroup).
class ACenter {
public:
  ACenter() = default;
  ACenter(NucleusSide side, unsigned degree, std::vector<Isotopy> elements);

  NucleusSide side() const { return side_; }
  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Isotopy>& elements() const { return elements_; }

  PermGroup component(unsigned position) const;  // throws EpsilonPosition
  bool product_was_subgroup() const { return product_subgroup_; }
  void set_product_was_subgroup(bool v) { product_subgroup_ = v; }

private:
  NucleusSide side_ = NucleusSide::left;
  unsigned degree_ = 0;
  bool product_subgroup_ = true;
  std::vector<Isotopy> elements_;
};

ACenter a_center(const AutotopyGroup& avt, NucleusSide side);
ACenter a_center(const Quasigroup& q, NucleusSide side,
                 unsigned max_n = kDefaultAutotopySearchBound);

// Bruck center of a loop: N_l ∩ N_r ∩ N_m ∩ {commuting elements}.
// Throws NotALoop without a two-sided identity.
std::vector<unsigned> loop_center(const Quasigroup& q);

// One LP probe: a loop isotopic to a group is itself a group, so q is a
// group isotope iff its (0,0) LP-isotope is associative.
bool is_group_isotope(const Quasigroup& q);
bool is_abelian_group_isotope(const Quasigroup& q);

// Transitivity of the A-nucleus / A-center component actions.  These agree
// with the two oracles above on every quasigroup; the report layer flags a
// mismatch as an internal inconsistency.
bool is_a_nuclear(const Quasigroup& q, unsigned max_n = kDefaultAutotopySearchBound);
bool is_a_central(const Quasigroup& q, unsigned max_n = kDefaultAutotopySearchBound);

enum class IdentityKind { medial, paramedial, permutation_medial, permutation_paramedial };

// Brute-force evaluation over all (x, y, u, v).  The permutation variants
// take eight maps a1..a8:
//   medial      a1(a2 x * a3 y) * a4(a5 u * a6 v) = a7(x*u) * a8(y*v)
//   paramedial  a1(a2 x * a3 y) * a4(a5 u * a6 v) = a7(v*y) * a8(u*x)
bool identity_check(const Quasigroup& q, IdentityKind kind,
                    const std::vector<Perm>& perms = {});

struct SemidirectCheck {
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

// Loop structure checks behind (N_l x N_r) : Aut(Q) -> Avt(Q): pairwise
// trivial nucleus intersections, commuting paired components, trivial
// intersection of the nucleus product with Aut, and the order divisibility
// |N_l|*|N_r|*|Aut| | |Avt|.
SemidirectCheck semidirect_structure_check(const Quasigroup& q,
                                           unsigned max_n = kDefaultAutotopySearchBound);

}  // namespace qg

#endif
