#ifndef QG_PERM_GROUP_HPP
#define QG_PERM_GROUP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qg/partition.hpp"
#include "qg/perm.hpp"

namespace qg {

// Structure descriptor of a finite group: order, abelian flag and the
// multiset of element orders.  This separates all groups of order <= 16 up
// to isomorphism except the pair Q8 x Z2 / Z4 : Z4 at order 16, which share
// (16, nonabelian, {1:1, 2:3, 4:12}).
struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = true;
  std::map<unsigned, std::size_t> element_orders;  // order -> count

  bool has_element_of_order(unsigned k) const { return element_orders.count(k) != 0; }
  std::string to_string() const;
  // Best-effort name for small groups ("Z3", "A4", ...); empty when unknown.
  std::string name_hint() const;
  bool operator==(const GroupFingerprint&) const = default;
};

struct ActionProfile {
  bool free = false;        // only the identity has a fixed point
  bool transitive = false;  // a single orbit
  std::map<std::size_t, std::size_t> orbit_sizes;  // size -> count
};

// An explicitly enumerated permutation group: every element is stored,
// sorted.  Suitable for the small groups this library deals in (degree <= 8,
// orders up to 8!).
class PermGroup {
public:
  PermGroup() = default;

  // Wraps a set that is already known (or required) to be a group; sorts and
  // dedups.  Use is_group() in tests to verify closure axioms.
  PermGroup(unsigned degree, std::vector<Perm> elements);

  static PermGroup trivial(unsigned degree);

  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains(const Perm& p) const;

  bool is_group() const;  // identity, closure, inverses, uniform degree
  bool is_abelian() const;

  GroupFingerprint fingerprint() const;
  Partition orbits() const;
  ActionProfile action_profile() const;

  bool operator==(const PermGroup&) const = default;

private:
  unsigned degree_ = 0;
  std::vector<Perm> elements_;
};

// Breadth-first closure of gens under composition and inversion.  Returns
// nullopt when the closure grows past cap; the caller decides whether that
// means skip or fail.  cap defaults to degree! when zero.
std::optional<PermGroup> generate_group(const std::vector<Perm>& gens, std::size_t cap = 0);

std::size_t factorial(unsigned n);

}  // namespace qg

#endif
