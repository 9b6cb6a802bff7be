#include "qg/perm_group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_set>

#include "qg/error.hpp"

namespace qg {

std::size_t factorial(unsigned n) {
  std::size_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string GroupFingerprint::to_string() const {
  std::string s = "order " + std::to_string(order);
  s += abelian ? ", abelian, orders {" : ", nonabelian, orders {";
  bool first = true;
  for (auto [ord, cnt] : element_orders) {
    if (!first) s += ", ";
    s += std::to_string(ord) + ":" + std::to_string(cnt);
    first = false;
  }
  s += "}";
  std::string name = name_hint();
  if (!name.empty()) s += " [" + name + "]";
  return s;
}

std::string GroupFingerprint::name_hint() const {
  auto cyclic = [this]() { return has_element_of_order(static_cast<unsigned>(order)); };
  switch (order) {
    case 1: return "1";
    case 2: return "Z2";
    case 3: return "Z3";
    case 4: return cyclic() ? "Z4" : "Z2^2";
    case 5: return "Z5";
    case 6: return abelian ? "Z6" : "S3";
    case 7: return "Z7";
    case 8:
      if (abelian) {
        if (cyclic()) return "Z8";
        return has_element_of_order(4) ? "Z4xZ2" : "Z2^3";
      }
      return has_element_of_order(2) && element_orders.at(2) == 5 ? "D4" : "Q8";
    case 9: return cyclic() ? "Z9" : "Z3^2";
    case 12:
      if (abelian) return cyclic() ? "Z12" : "Z6xZ2";
      if (!has_element_of_order(6)) return "A4";
      return has_element_of_order(4) ? "Dic3" : "D6";
    default:
      if (abelian && cyclic()) return "Z" + std::to_string(order);
      return "";
  }
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> elements)
    : degree_(degree), elements_(std::move(elements)) {
  for (const Perm& p : elements_)
    if (p.degree() != degree_)
      throw DegreeMismatch(degree_, p.degree());
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

PermGroup PermGroup::trivial(unsigned degree) {
  return PermGroup(degree, {Perm::identity(degree)});
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_group() const {
  if (elements_.empty()) return false;
  if (!contains(Perm::identity(degree_))) return false;
  for (const Perm& p : elements_) {
    if (p.degree() != degree_) return false;
    if (!contains(p.inverse())) return false;
    for (const Perm& q : elements_)
      if (!contains(compose(p, q))) return false;
  }
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j)
      if (compose(elements_[i], elements_[j]) != compose(elements_[j], elements_[i]))
        return false;
  return true;
}

GroupFingerprint PermGroup::fingerprint() const {
  GroupFingerprint fp;
  fp.order = order();
  fp.abelian = is_abelian();
  for (const Perm& p : elements_)
    ++fp.element_orders[p.order()];
  return fp;
}

Partition PermGroup::orbits() const {
  std::vector<int> orbit_id(degree_, -1);
  std::vector<std::vector<unsigned>> blocks;
  for (unsigned x = 0; x < degree_; ++x) {
    if (orbit_id[x] >= 0) continue;
    std::vector<unsigned> block;
    std::deque<unsigned> work{x};
    orbit_id[x] = static_cast<int>(blocks.size());
    while (!work.empty()) {
      unsigned y = work.front();
      work.pop_front();
      block.push_back(y);
      for (const Perm& p : elements_) {
        unsigned z = p[y];
        if (orbit_id[z] < 0) {
          orbit_id[z] = orbit_id[x];
          work.push_back(z);
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  return Partition(degree_, std::move(blocks));
}

ActionProfile PermGroup::action_profile() const {
  ActionProfile ap;
  ap.free = true;
  for (const Perm& p : elements_) {
    if (p.is_identity()) continue;
    for (unsigned x = 0; x < degree_; ++x)
      if (p[x] == x) {
        ap.free = false;
        break;
      }
    if (!ap.free) break;
  }
  Partition orb = orbits();
  ap.transitive = orb.blocks().size() == 1;
  for (const auto& b : orb.blocks())
    ++ap.orbit_sizes[b.size()];
  return ap;
}

namespace {

// Packs a small-degree permutation into one integer for hashed closure.
std::uint64_t pack(const Perm& p) {
  std::uint64_t key = 0;
  for (unsigned x = 0; x < p.degree(); ++x)
    key = key << 8 | p[x];
  return key;
}

}  // namespace

std::optional<PermGroup> generate_group(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty())
    throw Error("generate_group needs at least one generator");
  unsigned degree = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch(degree, g.degree());
  if (cap == 0) cap = factorial(degree);

  std::vector<Perm> closure_gens = gens;
  for (const Perm& g : gens)
    closure_gens.push_back(g.inverse());

  std::deque<Perm> work{Perm::identity(degree)};
  std::vector<Perm> elements;

  if (degree <= 8) {
    std::unordered_set<std::uint64_t> seen{pack(work.front())};
    while (!work.empty()) {
      Perm p = std::move(work.front());
      work.pop_front();
      for (const Perm& g : closure_gens) {
        Perm q = compose(g, p);
        if (seen.insert(pack(q)).second) {
          if (seen.size() > cap) return std::nullopt;
          work.push_back(std::move(q));
        }
      }
      elements.push_back(std::move(p));
    }
    return PermGroup(degree, std::move(elements));
  }

  std::set<Perm> seen{work.front()};
  while (!work.empty()) {
    Perm p = std::move(work.front());
    work.pop_front();
    for (const Perm& g : closure_gens) {
      Perm q = compose(g, p);
      if (seen.insert(q).second) {
        if (seen.size() > cap) return std::nullopt;
        work.push_back(std::move(q));
      }
    }
    elements.push_back(std::move(p));
  }
  return PermGroup(degree, std::move(elements));
}

}  // namespace qg
