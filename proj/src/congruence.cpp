#include "qg/congruence.hpp"

#include <algorithm>
#include <set>

#include "qg/error.hpp"

namespace qg {

CongruenceMode parse_congruence_mode(const std::string& name) {
  if (name == "left_stable") return CongruenceMode::left_stable;
  if (name == "right_stable") return CongruenceMode::right_stable;
  if (name == "middle_stable") return CongruenceMode::middle_stable;
  if (name == "left_cancel") return CongruenceMode::left_cancel;
  if (name == "right_cancel") return CongruenceMode::right_cancel;
  if (name == "middle_cancel") return CongruenceMode::middle_cancel;
  if (name == "normal") return CongruenceMode::normal;
  throw ParseError("unknown congruence mode '" + name + "'");
}

std::string congruence_mode_name(CongruenceMode mode) {
  switch (mode) {
    case CongruenceMode::left_stable: return "left_stable";
    case CongruenceMode::right_stable: return "right_stable";
    case CongruenceMode::middle_stable: return "middle_stable";
    case CongruenceMode::left_cancel: return "left_cancel";
    case CongruenceMode::right_cancel: return "right_cancel";
    case CongruenceMode::middle_cancel: return "middle_cancel";
    default: return "normal";
  }
}

namespace {

// theta stable under every permutation of the family: x ~ y => w(x) ~ w(y).
bool stable_under(const Partition& p, const std::vector<Perm>& family) {
  unsigned n = p.size();
  for (const Perm& w : family)
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = x + 1; y < n; ++y)
        if (p.related(x, y) && !p.related(w[x], w[y]))
          return false;
  return true;
}

// Cancellative: w(x) ~ w(y) => x ~ y.
bool cancellative_under(const Partition& p, const std::vector<Perm>& family) {
  unsigned n = p.size();
  for (const Perm& w : family)
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = x + 1; y < n; ++y)
        if (p.related(w[x], w[y]) && !p.related(x, y))
          return false;
  return true;
}

std::vector<Perm> family(const Quasigroup& q, TranslationKind kind, bool with_inverses) {
  std::vector<Perm> out;
  for (unsigned a = 0; a < q.order(); ++a) {
    out.push_back(q.translation(kind, a));
    if (with_inverses)
      out.push_back(out.back().inverse());
  }
  return out;
}

}  // namespace

bool congruence_check(const Quasigroup& q, const Partition& p, CongruenceMode mode) {
  if (p.size() != q.order())
    throw SizeMismatch("partition size " + std::to_string(p.size()) +
                       " differs from order " + std::to_string(q.order()));
  switch (mode) {
    case CongruenceMode::left_stable:
      return stable_under(p, family(q, TranslationKind::left, false));
    case CongruenceMode::right_stable:
      return stable_under(p, family(q, TranslationKind::right, false));
    case CongruenceMode::middle_stable:
      return stable_under(p, family(q, TranslationKind::middle, true));
    case CongruenceMode::left_cancel:
      return cancellative_under(p, family(q, TranslationKind::left, false));
    case CongruenceMode::right_cancel:
      return cancellative_under(p, family(q, TranslationKind::right, false));
    case CongruenceMode::middle_cancel:
      return cancellative_under(p, family(q, TranslationKind::middle, true));
    case CongruenceMode::normal:
      return congruence_check(q, p, CongruenceMode::left_stable) &&
             congruence_check(q, p, CongruenceMode::right_stable) &&
             congruence_check(q, p, CongruenceMode::left_cancel) &&
             congruence_check(q, p, CongruenceMode::right_cancel);
  }
  return false;
}

namespace {

using Relation = std::set<std::pair<unsigned, unsigned>>;

Relation partition_relation(const Partition& p) {
  Relation r;
  for (unsigned x = 0; x < p.size(); ++x)
    for (unsigned y = 0; y < p.size(); ++y)
      if (p.related(x, y)) r.insert({x, y});
  return r;
}

Relation perm_relation(const Perm& w) {
  Relation r;
  for (unsigned x = 0; x < w.degree(); ++x)
    r.insert({x, w[x]});
  return r;
}

// Right-record product of binary relations: (a,b) in r*s iff some c has
// (a,c) in r and (c,b) in s.
Relation rel_product(const Relation& r, const Relation& s) {
  Relation out;
  for (auto [a, c1] : r)
    for (auto [c2, b] : s)
      if (c1 == c2) out.insert({a, b});
  return out;
}

bool rel_subset(const Relation& r, const Relation& s) {
  return std::includes(s.begin(), s.end(), r.begin(), r.end());
}

}  // namespace

bool RelationProductCheck::consistent() const {
  for (const auto& [name, pair] : verdicts)
    if (pair.first != pair.second) return false;
  return true;
}

RelationProductCheck relation_product_check(const Quasigroup& q, const Partition& p) {
  if (p.size() != q.order())
    throw SizeMismatch("partition size differs from order");
  RelationProductCheck out;
  Relation theta = partition_relation(p);

  struct Case {
    CongruenceMode mode;
    TranslationKind kind;
    bool cancel;
  };
  const Case cases[] = {
      {CongruenceMode::left_stable, TranslationKind::left, false},
      {CongruenceMode::right_stable, TranslationKind::right, false},
      {CongruenceMode::middle_stable, TranslationKind::middle, false},
      {CongruenceMode::left_cancel, TranslationKind::left, true},
      {CongruenceMode::right_cancel, TranslationKind::right, true},
      {CongruenceMode::middle_cancel, TranslationKind::middle, true},
  };
  for (const Case& c : cases) {
    bool rel_ok = true;
    for (unsigned a = 0; a < q.order(); ++a) {
      Relation w = perm_relation(q.translation(c.kind, a));
      // Stability: theta.w subset of w.theta; cancellativity: the converse.
      bool incl = c.cancel ? rel_subset(rel_product(w, theta), rel_product(theta, w))
                           : rel_subset(rel_product(theta, w), rel_product(w, theta));
      if (!incl) { rel_ok = false; break; }
    }
    // The direct middle modes quantify over P and P^-1; stability under a
    // permutation of a finite set already forces stability under its
    // inverse, so the two readings agree.
    bool direct = congruence_check(q, p, c.mode);
    out.verdicts[congruence_mode_name(c.mode)] = {direct, rel_ok};
  }
  return out;
}

Partition nucleus_equivalence(const PermGroup& component) {
  return component.orbits();
}

namespace {

// Reciprocal pairing between the orbit partitions of a matched component
// pair, forced by the conjugation gamma = R_c alpha R_c^-1 (and its L/P
// analogues): the first partition pushes forward to the second under every
// translation, and the second cancels back to the first.
void check_pairing(const Quasigroup& q, const Partition& first, const Partition& second,
                   NucleusSide side, std::vector<std::string>& failures) {
  unsigned n = q.order();
  std::size_t before = failures.size();
  auto fail = [&](const std::string& what) {
    if (failures.size() < before + 8)
      failures.push_back(side_name(side) + " pairing: " + what);
  };
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c) {
        switch (side) {
          case NucleusSide::left:
            if (first.related(a, b) && !second.related(q.at(a, c), q.at(b, c)))
              fail("a~b but ac !~ bc");
            if (second.related(q.at(a, c), q.at(b, c)) && !first.related(a, b))
              fail("ac~bc but a !~ b");
            break;
          case NucleusSide::right:
            if (first.related(a, b) && !second.related(q.at(c, a), q.at(c, b)))
              fail("a~b but ca !~ cb");
            if (second.related(q.at(c, a), q.at(c, b)) && !first.related(a, b))
              fail("ca~cb but a !~ b");
            break;
          default: {
            Perm pc = q.middle_translation(c);
            if (first.related(a, b) && !second.related(pc[a], pc[b]))
              fail("a~b but Pa !~ Pb");
            if (second.related(pc[a], pc[b]) && !first.related(a, b))
              fail("Pa~Pb but a !~ b");
            break;
          }
        }
      }
}

GarrisonCosetReport garrison_cosets(const Quasigroup& q, NucleusSide side) {
  GarrisonCosetReport rep;
  rep.side = side_name(side);
  rep.nucleus = garrison_nucleus(q, side);
  unsigned n = q.order();
  const auto& nuc = rep.nucleus;
  if (nuc.empty()) return rep;

  auto coset = [&](unsigned a, bool left) {
    std::set<unsigned> s;
    for (unsigned m : nuc) s.insert(left ? q.at(a, m) : q.at(m, a));
    return s;
  };
  auto partitions = [&](bool left) {
    std::vector<std::set<unsigned>> cosets;
    for (unsigned a = 0; a < n; ++a) cosets.push_back(coset(a, left));
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = a + 1; b < n; ++b) {
        std::vector<unsigned> meet;
        std::set_intersection(cosets[a].begin(), cosets[a].end(), cosets[b].begin(),
                              cosets[b].end(), std::back_inserter(meet));
        if (!meet.empty() && cosets[a] != cosets[b]) return false;
      }
    return true;
  };
  rep.left_cosets_partition = partitions(true);
  rep.right_cosets_partition = partitions(false);

  rep.two_sided = true;
  for (unsigned a = 0; a < n; ++a) {
    auto l = coset(a, true), r = coset(a, false);
    if (l != r) {
      rep.two_sided = false;
      rep.has_witness = true;
      rep.witness = a;
      rep.witness_a_n.assign(l.begin(), l.end());
      rep.witness_n_a.assign(r.begin(), r.end());
      break;
    }
  }

  if (rep.left_cosets_partition) {
    std::set<std::set<unsigned>> distinct;
    for (unsigned a = 0; a < n; ++a) distinct.insert(coset(a, true));
    std::vector<std::vector<unsigned>> blocks;
    for (const auto& s : distinct) blocks.emplace_back(s.begin(), s.end());
    try {
      Partition p(n, std::move(blocks));
      rep.normal_congruence = congruence_check(q, p, CongruenceMode::normal);
    } catch (const Error&) {
      rep.normal_congruence = false;
    }
  }
  return rep;
}

}  // namespace

NormalityReport normality_report(const Quasigroup& q, unsigned max_n) {
  NormalityReport rep;
  AutotopyGroup avt = autotopy_group(q, max_n);

  struct Item {
    const char* label;
    NucleusSide side;
    unsigned position;
  };
  const Item items[] = {
      {"1Nl", NucleusSide::left, 1},   {"3Nl", NucleusSide::left, 3},
      {"2Nr", NucleusSide::right, 2},  {"3Nr", NucleusSide::right, 3},
      {"1Nm", NucleusSide::middle, 1}, {"2Nm", NucleusSide::middle, 2},
  };
  for (const Item& item : items) {
    NucleusEquivalenceReport r;
    r.label = item.label;
    r.partition = nucleus_equivalence(a_nucleus(avt, item.side).component(item.position));
    for (CongruenceMode mode :
         {CongruenceMode::left_stable, CongruenceMode::right_stable,
          CongruenceMode::middle_stable, CongruenceMode::left_cancel,
          CongruenceMode::right_cancel, CongruenceMode::middle_cancel,
          CongruenceMode::normal})
      r.modes[congruence_mode_name(mode)] = congruence_check(q, r.partition, mode);
    r.normal = r.modes["normal"];
    rep.equivalences.push_back(std::move(r));
  }

  check_pairing(q, rep.equivalences[0].partition, rep.equivalences[1].partition,
                NucleusSide::left, rep.pairing_failures);
  check_pairing(q, rep.equivalences[2].partition, rep.equivalences[3].partition,
                NucleusSide::right, rep.pairing_failures);
  check_pairing(q, rep.equivalences[4].partition, rep.equivalences[5].partition,
                NucleusSide::middle, rep.pairing_failures);

  LocalMaps lm = q.local_maps();
  if (lm.left_loop || lm.right_loop || q.is_loop()) {
    for (NucleusSide side : {NucleusSide::left, NucleusSide::right, NucleusSide::middle})
      rep.garrison.push_back(garrison_cosets(q, side));
  }
  return rep;
}

}  // namespace qg
