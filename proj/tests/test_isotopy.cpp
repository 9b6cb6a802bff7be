#include <doctest.h>

#include "fixtures.hpp"
#include "qg/error.hpp"
#include "qg/isotopy.hpp"

using namespace qg;

namespace {

Isostrophy random_isostrophy(fixtures::LatinSquareGen& gen, unsigned n) {
  Parastrophy sigma = Parastrophy::all()[gen.pick(6)];
  return Isostrophy(sigma,
                    Isotopy(gen.random_perm(n), gen.random_perm(n), gen.random_perm(n)));
}

}  // namespace

TEST_CASE("apply_isotopy basics") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  CHECK(apply_isotopy(z3, Isotopy::identity(3)) == z3);

  // alpha = +1 shift: table of (x+1)+y.
  Isotopy t(Perm::parse(3, "(0 1 2)"), Perm::identity(3), Perm::identity(3));
  Quasigroup shifted = apply_isotopy(z3, t);
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y)
      CHECK(shifted.at(x, y) == (x + 1 + y) % 3);

  Quasigroup p6 = fixtures::paper6();
  Isotopy lp(p6.right_translation(0).inverse(), p6.left_translation(0).inverse(),
             Perm::identity(6));
  CHECK(apply_isotopy(p6, lp) == p6);  // 0 is the identity, so both parts are trivial

  CHECK_THROWS_AS(apply_isotopy(z3, Isotopy::identity(4)), DegreeMismatch);
}

TEST_CASE("apply_isostrophy basics") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  CHECK(apply_isostrophy(z3, Isostrophy::identity(3)) == z3);

  Isostrophy transpose(Parastrophy::s12, Isotopy::identity(3));
  Quasigroup t = apply_isostrophy(z3, transpose);
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y)
      CHECK(t.at(x, y) == z3.at(y, x));

  Isostrophy s13(Parastrophy::s13, Isotopy::identity(3));
  Quasigroup d = apply_isostrophy(z3, s13);
  for (unsigned z = 0; z < 3; ++z)
    for (unsigned y = 0; y < 3; ++y)
      CHECK(d.at(z, y) == (z + 3 - y) % 3);
}

TEST_CASE("compose_isostrophy coheres with sequential application") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  fixtures::LatinSquareGen gen(53);

  Isostrophy id = Isostrophy::identity(3);
  Isostrophy s = random_isostrophy(gen, 3);
  CHECK(compose_isostrophy(s, id) == s);
  CHECK(compose_isostrophy(id, s) == s);

  Isostrophy sw(Parastrophy::s12, Isotopy::identity(3));
  CHECK(compose_isostrophy(sw, sw) == id);

  for (int it = 0; it < 100; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    Isostrophy s1 = random_isostrophy(gen, n);
    Isostrophy s2 = random_isostrophy(gen, n);
    CHECK(apply_isostrophy(apply_isostrophy(q, s1), s2) ==
          apply_isostrophy(q, compose_isostrophy(s1, s2)));
  }
}

TEST_CASE("invert_isostrophy round-trips") {
  fixtures::LatinSquareGen gen(59);
  Isostrophy id3 = Isostrophy::identity(3);
  CHECK(invert_isostrophy(id3) == id3);

  // sigma = e case: plain componentwise inverses.
  Isotopy t(gen.random_perm(4), gen.random_perm(4), gen.random_perm(4));
  Isostrophy s(Parastrophy::e, t);
  Isostrophy si = invert_isostrophy(s);
  CHECK(si.t.alpha == t.alpha.inverse());
  CHECK(si.t.beta == t.beta.inverse());
  CHECK(si.t.gamma == t.gamma.inverse());

  for (int it = 0; it < 60; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    Isostrophy s1 = random_isostrophy(gen, n);
    Isostrophy inv = invert_isostrophy(s1);
    Isostrophy idn = Isostrophy::identity(n);
    CHECK(compose_isostrophy(s1, inv) == idn);
    CHECK(compose_isostrophy(inv, s1) == idn);
    CHECK(apply_isostrophy(apply_isostrophy(q, s1), inv) == q);
  }
}

TEST_CASE("isostrophies form a group (associativity on random triples)") {
  fixtures::LatinSquareGen gen(61);
  for (int it = 0; it < 40; ++it) {
    unsigned n = 2 + gen.pick(4);
    Isostrophy a = random_isostrophy(gen, n);
    Isostrophy b = random_isostrophy(gen, n);
    Isostrophy c = random_isostrophy(gen, n);
    CHECK(compose_isostrophy(compose_isostrophy(a, b), c) ==
          compose_isostrophy(a, compose_isostrophy(b, c)));
  }
}

TEST_CASE("lp_isotope produces the advertised loops") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  CHECK(lp_isotope(z3, LpKind::loop, 0, 0) == z3);

  Quasigroup l11 = lp_isotope(z3, LpKind::loop, 1, 1);
  CHECK(l11.identity() == 2u);  // b*a = 1+1

  Quasigroup ur = lp_isotope(z3, LpKind::unipotent_right, 0, 0);
  LocalMaps lm = ur.local_maps();
  CHECK(lm.unipotent);
  CHECK(ur.right_identity().has_value());

  Quasigroup ul = lp_isotope(z3, LpKind::unipotent_left, 0, 0);
  CHECK(ul.local_maps().unipotent);
  CHECK(ul.left_identity().has_value());

  fixtures::LatinSquareGen gen(67);
  for (int it = 0; it < 30; ++it) {
    unsigned n = 2 + gen.pick(5);
    Quasigroup q = gen.random(n);
    unsigned a = gen.pick(n), b = gen.pick(n);
    Quasigroup loop = lp_isotope(q, LpKind::loop, a, b);
    CHECK(loop.identity() == q.at(b, a));
    CHECK(lp_isotope(q, LpKind::unipotent_right, a, b).local_maps().unipotent);
    CHECK(lp_isotope(q, LpKind::unipotent_left, a, b).local_maps().unipotent);
  }
}

TEST_CASE("one-component isotopes: the six loop-producing special cases") {
  fixtures::LatinSquareGen gen(71);
  for (int it = 0; it < 15; ++it) {
    unsigned n = 2 + gen.pick(5);
    Quasigroup q = gen.random(n);
    unsigned a = gen.pick(n);
    Perm e = Perm::identity(n);

    CHECK(apply_isotopy(q, Isotopy(q.right_translation(a).inverse(), e, e))
              .right_identity()
              .has_value());
    CHECK(apply_isotopy(q, Isotopy(q.middle_translation(a).inverse(), e, e))
              .local_maps()
              .unipotent);
    CHECK(apply_isotopy(q, Isotopy(e, q.left_translation(a).inverse(), e))
              .left_identity()
              .has_value());
    CHECK(apply_isotopy(q, Isotopy(e, q.middle_translation(a), e)).local_maps().unipotent);
    CHECK(apply_isotopy(q, Isotopy(e, e, q.left_translation(a))).left_identity().has_value());
    CHECK(apply_isotopy(q, Isotopy(e, e, q.right_translation(a))).right_identity().has_value());
  }
}

TEST_CASE("transport_check covers the translation lemmas") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  fixtures::LatinSquareGen gen(73);

  CHECK(transport_check(z3, Isotopy::identity(3)).lemma == "trivial");

  for (int it = 0; it < 12; ++it) {
    unsigned n = 2 + gen.pick(5);
    Quasigroup q = gen.random(n);
    Perm e = Perm::identity(n);
    Perm p = gen.random_perm(n);
    if (p.is_identity()) continue;

    TransportCheck a = transport_check(q, Isotopy(p, e, e));
    CHECK(a.lemma == "one-component alpha");
    CHECK(a.ok());
    TransportCheck b = transport_check(q, Isotopy(e, p, e));
    CHECK(b.lemma == "one-component beta");
    CHECK(b.ok());
    TransportCheck c = transport_check(q, Isotopy(e, e, p));
    CHECK(c.lemma == "one-component gamma");
    CHECK(c.ok());

    unsigned x = gen.pick(n), y = gen.pick(n);
    TransportCheck lp = transport_check(q, lp_isotopy(q, LpKind::loop, x, y));
    CHECK(lp.ok());
    TransportCheck upr = transport_check(q, lp_isotopy(q, LpKind::unipotent_right, x, y));
    CHECK(upr.ok());
    TransportCheck upl = transport_check(q, lp_isotopy(q, LpKind::unipotent_left, x, y));
    CHECK(upl.ok());
  }

  Quasigroup p6 = fixtures::paper6();
  TransportCheck tc = transport_check(p6, lp_isotopy(p6, LpKind::loop, 1, 1));
  CHECK(tc.lemma == "LP loop");
  CHECK(tc.ok());

  fixtures::LatinSquareGen g2(79);
  Isotopy odd(g2.random_perm(4), g2.random_perm(4), g2.random_perm(4));
  Quasigroup q4 = g2.random(4);
  bool shaped = true;
  try {
    transport_check(q4, odd);
  } catch (const UnsupportedShape&) {
    shaped = false;
  }
  // A random full triple is almost never a supported shape; either outcome
  // type-checks, the call just must not mislabel it as trivial.
  if (shaped) CHECK(transport_check(q4, odd).lemma != "trivial");
}
