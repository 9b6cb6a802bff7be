#ifndef QG_NUCLEI_HPP
#define QG_NUCLEI_HPP

#include <optional>
#include <string>
#include <vector>

#include "qg/autotopy.hpp"
#include "qg/perm_group.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

enum class NucleusSide { left, right, middle };

std::string side_name(NucleusSide side);

// Position (1..3) that carries the identity permutation for a side:
// left (alpha, e, gamma) -> 2, right (e, beta, gamma) -> 1,
// middle (alpha, beta, e) -> 3.
unsigned epsilon_position(NucleusSide side);

// The side's A-nucleus: all autotopies with the identity map in the side's
// fixed position.  A normal subgroup of Avt(q).
class ANucleus {
public:
  ANucleus() = default;
  ANucleus(NucleusSide side, unsigned degree, std::vector<Isotopy> elements);

  NucleusSide side() const { return side_; }
  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Isotopy>& elements() const { return elements_; }
  bool contains(const Isotopy& t) const;

  // Projection of the nucleus to a non-epsilon position.
  PermGroup component(unsigned position) const;  // throws EpsilonPosition
  // The two non-epsilon positions, ascending.
  std::pair<unsigned, unsigned> component_positions() const;

private:
  NucleusSide side_ = NucleusSide::left;
  unsigned degree_ = 0;
  std::vector<Isotopy> elements_;
};

ANucleus a_nucleus(const AutotopyGroup& avt, NucleusSide side);
ANucleus a_nucleus(const Quasigroup& q, NucleusSide side,
                   unsigned max_n = kDefaultAutotopySearchBound);

// Garrison nucleus by the direct bracketing identity, independent of Avt:
//   left:   (a*x)*y = a*(x*y)
//   right:  (x*y)*a = x*(y*a)
//   middle: (x*a)*y = x*(a*y)
std::vector<unsigned> garrison_nucleus(const Quasigroup& q, NucleusSide side);

// All psi commuting with every translation of the kind.  Each candidate is
// pinned by psi(0) (the translation set is transitive), so only n are tried.
PermGroup translation_centralizer(const Quasigroup& q, TranslationKind kind);

struct MultiplicationGroups {
  std::optional<PermGroup> lm, rm, pm, m, fm;  // nullopt when the cap was hit
};

MultiplicationGroups multiplication_groups(const Quasigroup& q, std::size_t cap = 0);

struct NucleusIsomorphismCheck {
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

// Verifies the per-element conjugation identities gamma = R_c alpha R_c^-1
// (left), gamma = L_c beta L_c^-1 (right), beta = P_c alpha P_c^-1 (middle)
// for all c, plus the Table-3 component correspondences of the parastrophes
// taken with trivial isotopy.
NucleusIsomorphismCheck nucleus_isomorphism_check(const Quasigroup& q,
                                                  unsigned max_n = kDefaultAutotopySearchBound);

}  // namespace qg

#endif
