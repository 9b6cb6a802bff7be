#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qg/error.hpp"
#include "qg/nuclei.hpp"

using namespace qg;

TEST_CASE("the order-6 loop's middle nucleus data") {
  Quasigroup q = fixtures::paper6();
  AutotopyGroup avt = autotopy_group(q);

  ANucleus nm = a_nucleus(avt, NucleusSide::middle);
  CHECK(nm.order() == 2);
  Perm r1 = Perm::parse(6, "(0 1)(2 4)(3 5)");
  Perm l1i = Perm::parse(6, "(0 1)(2 3)(4 5)");
  CHECK(nm.contains(Isotopy::identity(6)));
  CHECK(nm.contains(Isotopy(r1, l1i, Perm::identity(6))));

  PermGroup c1 = nm.component(1);
  CHECK(c1.elements() == std::vector<Perm>{Perm::identity(6), r1});
  PermGroup c2 = nm.component(2);
  CHECK(c2.elements() == std::vector<Perm>{Perm::identity(6), l1i});

  CHECK(c1.orbits() == Partition(6, {{0, 1}, {2, 4}, {3, 5}}));
  CHECK(c2.orbits() == Partition(6, {{0, 1}, {2, 3}, {4, 5}}));

  CHECK(garrison_nucleus(q, NucleusSide::middle) == std::vector<unsigned>{0, 1});

  CHECK_THROWS_AS(nm.component(3), EpsilonPosition);
}

TEST_CASE("left nucleus of a group is all translations") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  ANucleus nl = a_nucleus(z3, NucleusSide::left);
  CHECK(nl.order() == 3);
  for (unsigned a = 0; a < 3; ++a) {
    Perm la = z3.left_translation(a);
    CHECK(nl.contains(Isotopy(la, Perm::identity(3), la)));
  }
  auto garrison = garrison_nucleus(z3, NucleusSide::left);
  CHECK(garrison.size() == 3);  // associativity

  CHECK(garrison_nucleus(fixtures::paper5(), NucleusSide::left) ==
        std::vector<unsigned>{0});  // identity only
}

TEST_CASE("every A-nucleus contains the identity triple and is normal in Avt") {
  fixtures::LatinSquareGen gen(107);
  for (int it = 0; it < 12; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    AutotopyGroup avt = autotopy_group(q);
    for (NucleusSide side : {NucleusSide::left, NucleusSide::right, NucleusSide::middle}) {
      ANucleus nuc = a_nucleus(avt, side);
      CHECK(nuc.contains(Isotopy::identity(n)));
      CHECK(nuc.order() <= n);
      auto [p1, p2] = nuc.component_positions();
      CHECK(nuc.component(p1).order() == nuc.order());
      CHECK(nuc.component(p2).order() == nuc.order());
      CHECK(n % nuc.component(p1).order() == 0);

      // Normality: conjugation by random autotopies stays inside.
      for (int k = 0; k < 5; ++k) {
        const Isotopy& t = avt.elements()[gen.pick(static_cast<unsigned>(avt.order()))];
        for (const Isotopy& s : nuc.elements())
          CHECK(nuc.contains(conjugate(t, s)));
      }

      // Free action with all orbit sizes equal to the group order.
      for (unsigned pos : {p1, p2}) {
        ActionProfile ap = nuc.component(pos).action_profile();
        CHECK(ap.free);
        for (const auto& [size, count] : ap.orbit_sizes)
          CHECK(size == nuc.order());
      }
    }
  }
}

TEST_CASE("pairwise nucleus intersections are trivial") {
  fixtures::LatinSquareGen gen(109);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    AutotopyGroup avt = autotopy_group(q);
    ANucleus nl = a_nucleus(avt, NucleusSide::left);
    ANucleus nr = a_nucleus(avt, NucleusSide::right);
    ANucleus nm = a_nucleus(avt, NucleusSide::middle);
    auto meet_trivial = [&](const ANucleus& a, const ANucleus& b) {
      for (const Isotopy& t : a.elements())
        if (b.contains(t) && !t.is_identity()) return false;
      return true;
    };
    CHECK(meet_trivial(nl, nr));
    CHECK(meet_trivial(nl, nm));
    CHECK(meet_trivial(nr, nm));
  }
}

TEST_CASE("left-nuclear elements satisfy the local-identity relation") {
  // alpha f(x) * x = gamma x for every (alpha, e, gamma) in the left nucleus.
  fixtures::LatinSquareGen gen(113);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    LocalMaps lm = q.local_maps();
    ANucleus nl = a_nucleus(q, NucleusSide::left);
    for (const Isotopy& t : nl.elements())
      for (unsigned x = 0; x < n; ++x)
        CHECK(q.at(t.alpha[lm.f[x]], x) == t.gamma[x]);
  }
}

TEST_CASE("garrison bridge: nucleus = orbit of the identity") {
  fixtures::LatinSquareGen gen(127);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup loop = lp_isotope(gen.random(n), LpKind::loop, gen.pick(n), gen.pick(n));
    unsigned e = *loop.identity();
    AutotopyGroup avt = autotopy_group(loop);

    auto orbit_of_identity = [&](const PermGroup& g) {
      std::set<unsigned> orb;
      for (const Perm& p : g.elements()) orb.insert(p[e]);
      return std::vector<unsigned>(orb.begin(), orb.end());
    };
    CHECK(garrison_nucleus(loop, NucleusSide::left) ==
          orbit_of_identity(a_nucleus(avt, NucleusSide::left).component(1)));
    CHECK(garrison_nucleus(loop, NucleusSide::right) ==
          orbit_of_identity(a_nucleus(avt, NucleusSide::right).component(2)));
    CHECK(garrison_nucleus(loop, NucleusSide::middle) ==
          orbit_of_identity(a_nucleus(avt, NucleusSide::middle).component(1)));
  }
}

TEST_CASE("translation centralizers") {
  CHECK(translation_centralizer(Quasigroup::validate(1, {{0}}), TranslationKind::left)
            .order() == 1);

  Quasigroup z3 = Quasigroup::cyclic(3);
  PermGroup c = translation_centralizer(z3, TranslationKind::right);
  CHECK(c.order() == 3);
  for (unsigned a = 0; a < 3; ++a)
    CHECK(c.contains(z3.left_translation(a)));

  // In a (right) loop the right-translation centralizer is the first
  // component group of the left A-nucleus.
  Quasigroup p6 = fixtures::paper6();
  PermGroup cr = translation_centralizer(p6, TranslationKind::right);
  CHECK(cr == a_nucleus(p6, NucleusSide::left).component(1));

  fixtures::LatinSquareGen gen(131);
  for (int it = 0; it < 8; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup loop = lp_isotope(gen.random(n), LpKind::loop, gen.pick(n), gen.pick(n));
    AutotopyGroup avt = autotopy_group(loop);
    CHECK(translation_centralizer(loop, TranslationKind::right) ==
          a_nucleus(avt, NucleusSide::left).component(1));
    CHECK(translation_centralizer(loop, TranslationKind::left) ==
          a_nucleus(avt, NucleusSide::right).component(2));
  }
}

TEST_CASE("multiplication groups") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  MultiplicationGroups mg = multiplication_groups(z3);
  REQUIRE(mg.lm.has_value());
  REQUIRE(mg.rm.has_value());
  REQUIRE(mg.m.has_value());
  CHECK(mg.lm->order() == 3);
  CHECK(mg.rm->order() == 3);
  CHECK(mg.m->order() == 3);

  MultiplicationGroups one = multiplication_groups(Quasigroup::validate(1, {{0}}));
  CHECK(one.fm->order() == 1);

  Quasigroup p6 = fixtures::paper6();
  MultiplicationGroups pg = multiplication_groups(p6);
  REQUIRE(pg.lm.has_value());
  REQUIRE(pg.fm.has_value());
  CHECK(pg.lm->is_group());
  CHECK(pg.fm->order() % pg.lm->order() == 0);  // LM <= FM

  // A tiny cap forces the skip signal.
  MultiplicationGroups capped = multiplication_groups(p6, 6);
  CHECK(!capped.lm.has_value());
}

TEST_CASE("nucleus isomorphism identities hold") {
  CHECK(nucleus_isomorphism_check(Quasigroup::cyclic(3)).ok());
  CHECK(nucleus_isomorphism_check(fixtures::paper6()).ok());
  fixtures::LatinSquareGen gen(137);
  for (int it = 0; it < 6; ++it)
    CHECK(nucleus_isomorphism_check(gen.random(2 + gen.pick(4))).ok());
}

TEST_CASE("table-3 component conjugation under (12) and (23) isostrophes") {
  fixtures::LatinSquareGen gen(139);
  auto conj = [](const Perm& c, const PermGroup& g) {
    std::vector<Perm> out;
    Perm ci = c.inverse();
    for (const Perm& p : g.elements()) out.push_back(compose(ci, compose(p, c)));
    return PermGroup(g.degree(), std::move(out));
  };
  for (int it = 0; it < 12; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    Isotopy t(gen.random_perm(n), gen.random_perm(n), gen.random_perm(n));
    AutotopyGroup avt = autotopy_group(q);
    ANucleus nl = a_nucleus(avt, NucleusSide::left);
    ANucleus nr = a_nucleus(avt, NucleusSide::right);
    ANucleus nm = a_nucleus(avt, NucleusSide::middle);

    {
      Quasigroup img = apply_isostrophy(q, Isostrophy(Parastrophy::s12, t));
      AutotopyGroup avt2 = autotopy_group(img);
      CHECK(a_nucleus(avt2, NucleusSide::left).component(1) ==
            conj(t.alpha, nr.component(2)));
      CHECK(a_nucleus(avt2, NucleusSide::left).component(3) ==
            conj(t.gamma, nr.component(3)));
      CHECK(a_nucleus(avt2, NucleusSide::right).component(2) ==
            conj(t.beta, nl.component(1)));
      CHECK(a_nucleus(avt2, NucleusSide::right).component(3) ==
            conj(t.gamma, nl.component(3)));
      CHECK(a_nucleus(avt2, NucleusSide::middle).component(1) ==
            conj(t.alpha, nm.component(2)));
      CHECK(a_nucleus(avt2, NucleusSide::middle).component(2) ==
            conj(t.beta, nm.component(1)));
    }
    {
      Quasigroup img = apply_isostrophy(q, Isostrophy(Parastrophy::s23, t));
      AutotopyGroup avt2 = autotopy_group(img);
      CHECK(a_nucleus(avt2, NucleusSide::left).component(1) ==
            conj(t.alpha, nm.component(1)));
      CHECK(a_nucleus(avt2, NucleusSide::left).component(3) ==
            conj(t.gamma, nm.component(2)));
      CHECK(a_nucleus(avt2, NucleusSide::right).component(2) ==
            conj(t.beta, nr.component(3)));
      CHECK(a_nucleus(avt2, NucleusSide::right).component(3) ==
            conj(t.gamma, nr.component(2)));
      CHECK(a_nucleus(avt2, NucleusSide::middle).component(1) ==
            conj(t.alpha, nl.component(1)));
      CHECK(a_nucleus(avt2, NucleusSide::middle).component(2) ==
            conj(t.beta, nl.component(3)));
    }
  }
}

TEST_CASE("coincidence of paired components tracks normalizer containment") {
  // 1Nl = 3Nl iff RM normalizes 1Nl; per-element coincidence iff RM
  // centralizes it.  Verified as implications on instances.
  fixtures::LatinSquareGen gen(229);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    AutotopyGroup avt = autotopy_group(q);
    MultiplicationGroups mg = multiplication_groups(q);
    REQUIRE(mg.rm.has_value());

    ANucleus nl = a_nucleus(avt, NucleusSide::left);
    PermGroup c1 = nl.component(1), c3 = nl.component(3);
    bool coincide = c1 == c3;
    bool normalizes = true;
    for (const Perm& w : mg.rm->elements()) {
      Perm wi = w.inverse();
      for (const Perm& p : c1.elements())
        if (!c1.contains(compose(wi, compose(p, w)))) { normalizes = false; break; }
      if (!normalizes) break;
    }
    CHECK(coincide == normalizes);

    bool elementwise = true;
    for (const Isotopy& t : nl.elements())
      if (t.alpha != t.gamma) { elementwise = false; break; }
    bool centralizes = true;
    for (const Perm& w : mg.rm->elements()) {
      for (const Perm& p : c1.elements())
        if (compose(w, p) != compose(p, w)) { centralizes = false; break; }
      if (!centralizes) break;
    }
    CHECK(elementwise == centralizes);
  }
}

TEST_CASE("Garrison nuclei of loops are closed under the operation") {
  fixtures::LatinSquareGen gen(251);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(5);
    Quasigroup loop = lp_isotope(gen.random(n), LpKind::loop, gen.pick(n), gen.pick(n));
    for (NucleusSide side : {NucleusSide::left, NucleusSide::right, NucleusSide::middle}) {
      auto nuc = garrison_nucleus(loop, side);
      REQUIRE(!nuc.empty());  // loops always contain the identity
      std::set<unsigned> members(nuc.begin(), nuc.end());
      CHECK(members.count(*loop.identity()) == 1);
      for (unsigned a : nuc)
        for (unsigned b : nuc)
          CHECK(members.count(loop.at(a, b)) == 1);
    }
  }
}

TEST_CASE("nucleus component projections are groups") {
  fixtures::LatinSquareGen gen(277);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(4);
    AutotopyGroup avt = autotopy_group(gen.random(n));
    for (NucleusSide side : {NucleusSide::left, NucleusSide::right, NucleusSide::middle}) {
      ANucleus nuc = a_nucleus(avt, side);
      auto [p1, p2] = nuc.component_positions();
      CHECK(nuc.component(p1).is_group());
      CHECK(nuc.component(p2).is_group());
    }
    for (unsigned pos : {1u, 2u, 3u})
      CHECK(avt.component(pos).is_group());
  }
}

TEST_CASE("the R_k-isotope forces equal first and third left components") {
  // In (Q,*) = (Q,.)(e,e,R_k), every left-nuclear autotopy (a,e,g) of the
  // base becomes (a,e,a): the paired third component R_k^-1 g R_k equals a.
  fixtures::LatinSquareGen gen(281);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    unsigned k = gen.pick(n);
    Perm e = Perm::identity(n);
    Quasigroup star = apply_isotopy(q, Isotopy(e, e, q.right_translation(k)));
    ANucleus nl = a_nucleus(star, NucleusSide::left);
    for (const Isotopy& t : nl.elements())
      CHECK(t.alpha == t.gamma);
    CHECK(nl.order() == a_nucleus(q, NucleusSide::left).order());
  }
}
