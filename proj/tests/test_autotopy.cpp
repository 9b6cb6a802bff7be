#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "qg/autotopy.hpp"
#include "qg/error.hpp"

using namespace qg;

namespace {

// Independent oracle: every (alpha, beta) pair in S_n x S_n, third component
// forced pointwise.  Only for n <= 4.
std::vector<Isotopy> pair_enumeration_oracle(const Quasigroup& q) {
  unsigned n = q.order();
  std::vector<Perm> all;
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = i;
  do {
    all.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  std::vector<Isotopy> found;
  for (const Perm& alpha : all)
    for (const Perm& beta : all)
      if (auto t = third_from_two(q, 3, alpha, beta))
        found.push_back(*t);
  return found;
}

}  // namespace

TEST_CASE("is_autotopy") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  CHECK(is_autotopy(z3, Isotopy::identity(3)));
  Perm l1 = z3.left_translation(1);
  CHECK(is_autotopy(z3, Isotopy(l1, Perm::identity(3), l1)));

  Quasigroup p6 = fixtures::paper6();
  Perm r1 = p6.right_translation(1);
  Perm l1i = p6.left_translation(1).inverse();
  CHECK(is_autotopy(p6, Isotopy(r1, l1i, Perm::identity(6))));
  CHECK(!is_autotopy(p6, Isotopy(r1, Perm::identity(6), Perm::identity(6))));
}

TEST_CASE("autotopy group sizes match the worked examples") {
  CHECK(autotopy_group(Quasigroup::validate(1, {{0}})).order() == 1);
  CHECK(autotopy_group(Quasigroup::cyclic(3)).order() == 18);
  CHECK(autotopy_group(fixtures::z2xz2()).order() == 96);  // 4! * 4

  AutotopyGroup avt5 = autotopy_group(fixtures::paper5());
  CHECK(avt5.order() == 12);
  GroupFingerprint fp = avt5.fingerprint();
  CHECK(!fp.abelian);
  CHECK(!fp.has_element_of_order(6));
  CHECK(fp.name_hint() == "A4");

  CHECK(automorphism_group(fixtures::paper5()).order() == 1);
}

TEST_CASE("autotopy group really is a group and divides n! * n") {
  fixtures::LatinSquareGen gen(83);
  for (int it = 0; it < 25; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    AutotopyGroup avt = autotopy_group(q);
    CHECK(avt.is_group());
    CHECK((factorial(n) * n) % avt.order() == 0);
    for (const Isotopy& t : avt.elements())
      CHECK(is_autotopy(q, t));
  }
}

TEST_CASE("search bound is enforced") {
  CHECK_THROWS_AS(autotopy_group(Quasigroup::cyclic(9)), SearchBoundExceeded);
  CHECK_THROWS_AS(autotopy_group(Quasigroup::cyclic(5), 4), SearchBoundExceeded);
}

TEST_CASE("pruned search equals plain gamma enumeration") {
  fixtures::LatinSquareGen gen(89);
  CHECK(autotopy_group(fixtures::paper5()) == autotopy_group_plain(fixtures::paper5()));
  for (int it = 0; it < 20; ++it) {
    unsigned n = 2 + gen.pick(4);  // 2..5
    Quasigroup q = gen.random(n);
    CHECK(autotopy_group(q) == autotopy_group_plain(q));
  }
}

TEST_CASE("pruned search equals the pair-enumeration oracle at n <= 4") {
  fixtures::LatinSquareGen gen(97);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(3);  // 2..4
    Quasigroup q = gen.random(n);
    AutotopyGroup expected(q.order(), pair_enumeration_oracle(q));
    CHECK(autotopy_group(q) == expected);
  }
}

TEST_CASE("loop autotopies take the translation form") {
  fixtures::LatinSquareGen gen(101);
  for (int it = 0; it < 10; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup loop = lp_isotope(gen.random(n), LpKind::loop, gen.pick(n), gen.pick(n));
    unsigned e = *loop.identity();
    AutotopyGroup avt = autotopy_group(loop);
    for (const Isotopy& t : avt.elements()) {
      CHECK(t.alpha == compose(loop.right_translation(t.beta[e]).inverse(), t.gamma));
      CHECK(t.beta == compose(loop.left_translation(t.alpha[e]).inverse(), t.gamma));
      CHECK(t.gamma[e] == loop.at(t.alpha[e], t.beta[e]));
    }
  }
}

TEST_CASE("third_from_two completes or rejects") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  Perm e3 = Perm::identity(3);
  auto t = third_from_two(z3, 3, e3, e3);
  REQUIRE(t.has_value());
  CHECK(t->is_identity());

  Perm l1 = z3.left_translation(1);
  auto u = third_from_two(z3, 3, l1, e3);
  REQUIRE(u.has_value());
  CHECK(u->gamma == l1);

  Quasigroup p6 = fixtures::paper6();
  auto v = third_from_two(p6, 3, p6.right_translation(1), p6.left_translation(1).inverse());
  REQUIRE(v.has_value());
  CHECK(v->gamma == Perm::identity(6));

  // No completion: mismatched slopes over Z3 (x+1 against -y).
  CHECK(!third_from_two(z3, 3, l1, Perm::parse(3, "0,2,1")).has_value());
  // Matching slopes complete: (L1, L1, L2).
  auto both = third_from_two(z3, 3, l1, l1);
  REQUIRE(both.has_value());
  CHECK(both->gamma == z3.left_translation(2));

  // Positions 1 and 2 recover the missing component.
  AutotopyGroup avt = autotopy_group(p6);
  for (const Isotopy& a : avt.elements()) {
    auto w1 = third_from_two(p6, 1, a.beta, a.gamma);
    REQUIRE(w1.has_value());
    CHECK(*w1 == a);
    auto w2 = third_from_two(p6, 2, a.alpha, a.gamma);
    REQUIRE(w2.has_value());
    CHECK(*w2 == a);
  }
}

TEST_CASE("leakh_extend pins an autotopy by one component and one image") {
  Quasigroup z3 = Quasigroup::cyclic(3);
  Perm e3 = Perm::identity(3);
  auto t = leakh_extend(z3, 1, e3, 2, 1, 1);
  REQUIRE(t.has_value());
  CHECK(t->is_identity());

  Perm l1 = z3.left_translation(1);
  auto u = leakh_extend(z3, 3, l1, 1, 0, 1);
  REQUIRE(u.has_value());
  CHECK(*u == Isotopy(l1, e3, l1));

  Quasigroup p6 = fixtures::paper6();
  auto v = leakh_extend(p6, 1, p6.right_translation(1), 3, 0, 0);
  REQUIRE(v.has_value());
  CHECK(*v == Isotopy(p6.right_translation(1), p6.left_translation(1).inverse(),
                      Perm::identity(6)));

  // Every autotopy is recovered from (component 1, image of 0 under gamma).
  AutotopyGroup avt = autotopy_group(p6);
  for (const Isotopy& a : avt.elements()) {
    auto w = leakh_extend(p6, 1, a.alpha, 3, 0, a.gamma[0]);
    REQUIRE(w.has_value());
    CHECK(*w == a);
  }
}

TEST_CASE("conjugation matches recomputing the autotopy group") {
  fixtures::LatinSquareGen gen(103);
  Quasigroup z3 = Quasigroup::cyclic(3);
  AutotopyGroup avt3 = autotopy_group(z3);
  CHECK(conjugate_group(avt3, Isotopy::identity(3)) == avt3);
  CHECK(conjugate_group(avt3, Isotopy(gen.random_perm(3), gen.random_perm(3),
                                      gen.random_perm(3)))
            .order() == 18);

  AutotopyGroup avt4 = autotopy_group(fixtures::z2xz2());
  Isotopy lp = lp_isotopy(fixtures::z2xz2(), LpKind::loop, 1, 2);
  CHECK(conjugate_group(avt4, lp).order() == 96);

  for (int it = 0; it < 15; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    Isotopy t(gen.random_perm(n), gen.random_perm(n), gen.random_perm(n));
    CHECK(autotopy_group(apply_isotopy(q, t)) == conjugate_group(autotopy_group(q), t));
  }
}

TEST_CASE("an autostrophy of q fixes Avt(q) under conjugation") {
  // sigma = (12) on a commutative quasigroup is an autostrophy; conjugating
  // every autotopy by it must permute Avt.
  Quasigroup z5 = Quasigroup::cyclic(5);
  AutotopyGroup avt = autotopy_group(z5);
  std::set<Isotopy> seen(avt.elements().begin(), avt.elements().end());
  for (const Isotopy& t : avt.elements()) {
    // (12)-conjugation swaps the first two components.
    Isotopy image(t.beta, t.alpha, t.gamma);
    CHECK(seen.count(image) == 1);
  }
}

TEST_CASE("order-8 elementary abelian group at the default search bound") {
  // x XOR y; autotopy group order is |Q|^2 * |GL(3,2)| = 64 * 168.
  std::vector<std::vector<unsigned>> grid(8, std::vector<unsigned>(8));
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) grid[x][y] = x ^ y;
  Quasigroup q = Quasigroup::validate(8, grid);
  AutotopyGroup avt = autotopy_group(q);
  CHECK(avt.order() == 10752);
  CHECK((factorial(8) * 8) % avt.order() == 0);
  CHECK(automorphism_group(q).order() == 168);
}

TEST_CASE("parastrophes preserve the autotopy group order") {
  fixtures::LatinSquareGen gen(263);
  for (int it = 0; it < 8; ++it) {
    unsigned n = 2 + gen.pick(4);
    Quasigroup q = gen.random(n);
    std::size_t base = autotopy_group(q).order();
    for (const Parastrophy& s : Parastrophy::all())
      CHECK(autotopy_group(q.parastrophe(s)).order() == base);
  }
}
