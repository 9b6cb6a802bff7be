#ifndef QG_AUTOTOPY_HPP
#define QG_AUTOTOPY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qg/isotopy.hpp"
#include "qg/perm_group.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

inline constexpr unsigned kDefaultAutotopySearchBound = 8;

bool is_autotopy(const Quasigroup& q, const Isotopy& t);

// The full autotopy group of q, as a sorted list of triples.  Products are
// componentwise, so the triple (e,e,e) is the identity and orders are lcms
// of component orders.
class AutotopyGroup {
public:
  AutotopyGroup() = default;
  AutotopyGroup(unsigned degree, std::vector<Isotopy> elements);  // sorts, dedups

  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Isotopy>& elements() const { return elements_; }
  bool contains(const Isotopy& t) const;
  bool is_group() const;

  GroupFingerprint fingerprint() const;

  // Projection to one component position (1, 2 or 3).
  PermGroup component(unsigned position) const;

  bool operator==(const AutotopyGroup&) const = default;

private:
  unsigned degree_ = 0;
  std::vector<Isotopy> elements_;
};

// Complete autotopy group via LP-reduction to a loop plus seeded propagation
// search in the loop.  Throws SearchBoundExceeded when q.order() > max_n.
AutotopyGroup autotopy_group(const Quasigroup& q,
                             unsigned max_n = kDefaultAutotopySearchBound);

// Slow oracle: LP-reduction plus full enumeration of gamma in S_n.  Same
// contract; intended for cross-checking the pruned search at small n.
AutotopyGroup autotopy_group_plain(const Quasigroup& q,
                                   unsigned max_n = 6);

// The automorphism group Aut(q): autotopies with equal components.
PermGroup automorphism_group(const Quasigroup& q,
                             unsigned max_n = kDefaultAutotopySearchBound);

// Unique completion of two components to an autotopy: p1 and p2 occupy the
// two positions other than `position`, in increasing position order.
// Returns nullopt when no completion exists; throws Error if two distinct
// completions appear (a theorem violation).
std::optional<Isotopy> third_from_two(const Quasigroup& q, unsigned position,
                                      const Perm& p1, const Perm& p2);

// Leakh extension: the unique autotopy whose component i equals p and whose
// component j maps a to b.  Completed by filtering the enumerated group.
std::optional<Isotopy> leakh_extend(const Quasigroup& q, unsigned i, const Perm& p,
                                    unsigned j, unsigned a, unsigned b,
                                    unsigned max_n = kDefaultAutotopySearchBound);

// Elementwise t^-1 s t; equals the autotopy group of apply_isotopy(q, t).
AutotopyGroup conjugate_group(const AutotopyGroup& avt, const Isotopy& t);

}  // namespace qg

#endif
