#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "ndual/monomial.hpp"

using namespace ndual;
using fixtures::ideal;
using fixtures::mono;

TEST_CASE("lcm is the componentwise max") {
  CHECK(lcm(mono(3, "x1^2*x2"), mono(3, "x1*x3")) == mono(3, "x1^2*x2*x3"));
  Monomial m = mono(3, "x1*x2^2");
  CHECK(lcm(m, m) == m);
  CHECK_THROWS_AS(lcm(mono(2, "x1"), mono(3, "x1")), std::invalid_argument);
}

TEST_CASE("lcm folded over the Borel example generators") {
  MonomialIdeal I = fixtures::example_xi();
  Monomial acc = Monomial::unit(4);
  for (const Monomial& g : I.generators()) acc = lcm(acc, g);
  CHECK(acc == mono(4, "x1^3*x2^3*x3^2*x4"));
}

TEST_CASE("divisibility") {
  CHECK(divides(mono(2, "x1"), mono(2, "x1*x2")));
  CHECK_FALSE(divides(mono(2, "x1^2"), mono(2, "x1*x2")));
  CHECK(divides(Monomial::unit(2), mono(2, "x1^5*x2")));
}

TEST_CASE("minimalize keeps the divisibility antichain") {
  MonomialIdeal I = ideal(2, {"x1", "x1*x2"});
  REQUIRE(I.num_generators() == 1);
  CHECK(I.generators()[0] == mono(2, "x1"));

  // Image of the specialization with a duplicate and a dominated element.
  MonomialIdeal J = MonomialIdeal::from_generators(
      3, fixtures::monos(3, {"x1^2", "x1*x2", "x1*x3", "x2*x1", "x2^2"}));
  CHECK(J.num_generators() == 4);
  CHECK(J == ideal(3, {"x1^2", "x1*x2", "x1*x3", "x2^2"}));

  MonomialIdeal K = ideal(3, {"x1*x2", "x2*x3", "x1*x3"});
  CHECK(K.num_generators() == 3);  // antichain is a fixed point

  CHECK(MonomialIdeal::from_generators(2, {}).is_zero());
}

TEST_CASE("minimalize is idempotent and order independent") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Monomial> pool = monomials_up_to_degree(3, 4);
    std::vector<Monomial> gens;
    for (int k = 0; k < 6; ++k) gens.push_back(pool[rng() % pool.size()]);
    MonomialIdeal a = MonomialIdeal::from_generators(3, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    MonomialIdeal b = MonomialIdeal::from_generators(3, gens);
    CHECK(a == b);
    CHECK(MonomialIdeal::from_generators(3, a.generators()) == a);
  }
}

TEST_CASE("colon ideal via the gcd formula") {
  MonomialIdeal I = ideal(2, {"x1^2", "x1*x2"});
  CHECK(colon_ideal(I, mono(2, "x2^2")) == ideal(2, {"x1"}));
  CHECK(colon_ideal(I, Monomial::unit(2)) == I);
}

TEST_CASE("colon ideal agrees with the brute-force membership scan") {
  std::mt19937_64 rng(7);
  std::vector<Monomial> pool = monomials_up_to_degree(3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 4; ++k) {
      Monomial c = pool[rng() % pool.size()];
      if (!c.is_unit()) gens.push_back(c);
    }
    if (gens.empty()) continue;
    MonomialIdeal I = MonomialIdeal::from_generators(3, gens);
    Monomial m = pool[rng() % pool.size()];
    MonomialIdeal got = colon_ideal(I, m);
    Exp cap = 0;
    for (const Monomial& g : I.generators()) cap = std::max(cap, g.total_degree());
    CHECK(got == brute::colon_by_membership(I, m, cap));
    // Containment I ⊆ (I : m) on the generators.
    for (const Monomial& g : I.generators()) CHECK(got.contains(g));
  }
}

TEST_CASE("products of ideals") {
  CHECK(product_ideal(ideal(2, {"x1"}), ideal(2, {"x2"})) == ideal(2, {"x1*x2"}));
  MonomialIdeal I = ideal(2, {"x1", "x2"});
  CHECK(product_ideal(I, MonomialIdeal::unit_ideal(2)) == I);
  CHECK(product_ideal(I, I) == ideal(2, {"x1^2", "x1*x2", "x2^2"}));
}

TEST_CASE("product is commutative and associative after minimalization") {
  std::mt19937_64 rng(11);
  std::vector<Monomial> pool = monomials_up_to_degree(4, 3);
  for (int trial = 0; trial < 25; ++trial) {
    auto random_ideal = [&] {
      std::vector<Monomial> gens;
      for (int k = 0; k < 3; ++k) {
        Monomial c = pool[rng() % pool.size()];
        if (!c.is_unit()) gens.push_back(c);
      }
      return gens.empty() ? MonomialIdeal::unit_ideal(4) : MonomialIdeal::from_generators(4, gens);
    };
    MonomialIdeal A = random_ideal(), B = random_ideal(), C = random_ideal();
    CHECK(product_ideal(A, B) == product_ideal(B, A));
    CHECK(product_ideal(product_ideal(A, B), C) == product_ideal(A, product_ideal(B, C)));
  }
}

TEST_CASE("co-lex comparison") {
  CHECK(colex_compare(mono(2, "x1^3"), mono(2, "x1^2*x2")) < 0);
  CHECK(colex_compare(mono(3, "x1*x2"), mono(3, "x1*x2")) == 0);
  CHECK_THROWS_AS(colex_compare(mono(2, "x1"), mono(2, "x1^2")), std::invalid_argument);
}

TEST_CASE("co-lex sorts the Borel example generators into the listed order") {
  std::vector<Monomial> gens = fixtures::monos(4, fixtures::example_xi_generators());
  std::vector<Monomial> sorted = gens;
  std::shuffle(sorted.begin(), sorted.end(), std::mt19937_64(3));
  std::sort(sorted.begin(), sorted.end(),
            [](const Monomial& a, const Monomial& b) { return colex_compare(a, b) < 0; });
  CHECK(sorted == gens);
}

TEST_CASE("co-lex is a total order on each degree stratum") {
  for (Exp d = 1; d <= 3; ++d) {
    std::vector<Monomial> stratum = monomials_of_degree(4, d);
    for (size_t i = 0; i < stratum.size(); ++i)
      for (size_t j = 0; j < stratum.size(); ++j) {
        int c = colex_compare(stratum[i], stratum[j]);
        CHECK(c == -colex_compare(stratum[j], stratum[i]));  // antisymmetry
        if (i != j) CHECK(c != 0);                           // totality
      }
    // Transitivity: sorting twice from different shuffles converges.
    std::vector<Monomial> a = stratum, b = stratum;
    std::shuffle(b.begin(), b.end(), std::mt19937_64(5));
    std::sort(a.begin(), a.end(), [](const Monomial& x, const Monomial& y) { return colex_compare(x, y) < 0; });
    std::sort(b.begin(), b.end(), [](const Monomial& x, const Monomial& y) { return colex_compare(x, y) < 0; });
    CHECK(a == b);
  }
}

TEST_CASE("support statistics") {
  SupportStats s = support_stats(mono(4, "x2*x3*x4"));
  CHECK(s.supp == std::vector<int>{2, 3, 4});
  CHECK(s.supp1 == std::vector<int>{2, 3, 4});
  CHECK(s.max_index == 4);

  s = support_stats(mono(4, "x1^3"));
  CHECK(s.supp == std::vector<int>{1});
  CHECK(s.supp1.empty());
  CHECK(s.max_index == 1);

  s = support_stats(mono(2, "x1*x2^2"));
  CHECK(s.supp == std::vector<int>{1, 2});
  CHECK(s.supp1 == std::vector<int>{2});
  CHECK(s.max_index == 2);

  CHECK_THROWS_AS(support_stats(Monomial::unit(3)), std::domain_error);
}

TEST_CASE("zero and unit ideals are flagged") {
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(MonomialIdeal::unit_ideal(3).is_unit());
  CHECK(MonomialIdeal::from_generators(2, {Monomial::unit(2), mono(2, "x1")}).is_unit());
}

TEST_CASE("membership is a divisibility scan") {
  MonomialIdeal I = ideal(3, {"x1*x2", "x3^2"});
  CHECK(I.contains(mono(3, "x1*x2*x3")));
  CHECK(I.contains(mono(3, "x3^3")));
  CHECK_FALSE(I.contains(mono(3, "x1*x3")));
}

TEST_CASE("betti table bookkeeping") {
  BettiTable t;
  t.add(0, mono(2, "x1"), 1);
  t.add(0, mono(2, "x2"), 1);
  t.add(1, mono(2, "x1*x2"), 1);
  CHECK(t.totals() == std::vector<long long>{2, 1});
  CHECK(t.coarse().at({0, 1}) == 2);
  CHECK(t.projective_dimension() == 1);
  CHECK(t.regularity() == 1);
}

TEST_CASE("lcm closure collects all joins") {
  std::vector<Monomial> gens = fixtures::monos(2, {"x1^2", "x2"});
  std::vector<Monomial> cl = lcm_closure(gens);
  REQUIRE(cl.size() == 3);
  CHECK(std::count(cl.begin(), cl.end(), mono(2, "x1^2*x2")) == 1);
}
