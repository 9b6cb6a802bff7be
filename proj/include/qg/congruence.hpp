#ifndef QG_CONGRUENCE_HPP
#define QG_CONGRUENCE_HPP

#include <map>
#include <string>
#include <vector>

#include "qg/autotopy.hpp"
#include "qg/nuclei.hpp"
#include "qg/partition.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

enum class CongruenceMode {
  left_stable,
  right_stable,
  middle_stable,
  left_cancel,
  right_cancel,
  middle_cancel,
  normal,
};

CongruenceMode parse_congruence_mode(const std::string& name);
std::string congruence_mode_name(CongruenceMode mode);

// Direct quantifier evaluation of the defining implication.  The middle
// modes quantify over both P_z and P_z^-1; `normal` is the conjunction of
// left/right stability and cancellativity.
bool congruence_check(const Quasigroup& q, const Partition& p, CongruenceMode mode);

struct RelationProductCheck {
  // mode name -> (direct verdict, relation-product verdict)
  std::map<std::string, std::pair<bool, bool>> verdicts;
  bool consistent() const;
};

// Second oracle: translations as binary relations with the right-record
// product.  theta stable under the family iff theta.w subset w.theta for
// every translation w; cancellative iff the reverse inclusion holds.
RelationProductCheck relation_product_check(const Quasigroup& q, const Partition& p);

// Orbit partition of an A-nucleus component group.
Partition nucleus_equivalence(const PermGroup& component);

struct NucleusEquivalenceReport {
  std::string label;  // "1Nl", "3Nl", ...
  Partition partition;
  std::map<std::string, bool> modes;  // per CongruenceMode verdict
  bool normal = false;
};

struct GarrisonCosetReport {
  std::string side;
  std::vector<unsigned> nucleus;
  bool left_cosets_partition = false;   // {a*N} pairwise equal-or-disjoint
  bool right_cosets_partition = false;  // {N*a}
  bool two_sided = false;               // a*N = N*a for every a
  bool normal_congruence = false;       // coset partition passes `normal`
  // First witness of a*N != N*a, if any: (a, a*N, N*a).
  std::vector<unsigned> witness_a_n, witness_n_a;
  unsigned witness = 0;
  bool has_witness = false;
};

struct NormalityReport {
  std::vector<NucleusEquivalenceReport> equivalences;
  std::vector<GarrisonCosetReport> garrison;
  std::vector<std::string> pairing_failures;  // reciprocal-normality implications
};

// Modes held by each of the six nucleus equivalences, Garrison coset
// behavior in (one-sided) loops, and the reciprocal pairing implications
// between conjugate-matched component pairs.
NormalityReport normality_report(const Quasigroup& q,
                                 unsigned max_n = kDefaultAutotopySearchBound);

}  // namespace qg

#endif
