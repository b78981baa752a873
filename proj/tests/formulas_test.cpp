#include <doctest.h>

#include "commgraph/formulas.hpp"
#include "commgraph/graph.hpp"

using namespace commgraph;

TEST_SUITE_BEGIN("formulas");

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(euler_phi(360) == 96);
}

TEST_CASE("prime power detection") {
  std::uint64_t p = 0;
  unsigned k = 0;
  CHECK(is_prime_power(8, &p, &k));
  CHECK(p == 2);
  CHECK(k == 3);
  CHECK(is_prime_power(7));
  CHECK(is_prime_power(9));
  CHECK(!is_prime_power(1));
  CHECK(!is_prime_power(6));
  CHECK(!is_prime_power(100));
}

TEST_CASE("class degree closed forms over zmod 6") {
  const RingPtr r = Ring::modular(6);
  // 36 - 6 - 1 for the unit backed classes.
  CHECK(predict_class_degree(*r, ClassTag::A1, 1, 0) == 29);
  CHECK(predict_class_degree(*r, ClassTag::A2, 0, 5) == 29);
  CHECK(predict_class_degree(*r, ClassTag::A3, 1, 5) == 29);
  CHECK(predict_class_degree(*r, ClassTag::A7, 1, 2) == 29);
  CHECK(predict_class_degree(*r, ClassTag::A8, 2, 1) == 29);
  // |ann(2)| = 2 and |ann(3)| = 3 scale the leading term.
  CHECK(predict_class_degree(*r, ClassTag::A4, 2, 0) == 65);
  CHECK(predict_class_degree(*r, ClassTag::A4, 3, 0) == 101);
  CHECK(predict_class_degree(*r, ClassTag::A5, 0, 3) == 101);
  // 12 solutions of 2a + 2b = 0 give 12 * 6 - 7.
  CHECK(predict_class_degree(*r, ClassTag::A6, 2, 2) == 65);
  // The tag must match the representative.
  CHECK_THROWS_AS(predict_class_degree(*r, ClassTag::A1, 2, 0),
                  std::invalid_argument);
}

TEST_CASE("class degrees match graph degrees everywhere") {
  for (const char* text : {"zmod:6", "zmod:8", "zmod:9", "gf:2^2",
                           "prod:zmod:2,zmod:3"}) {
    const RingPtr r = Ring::make(parse_ring_spec(text));
    const CommutingGraph g(r);
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
      const Canonical c = canonicalize(g.vertices()[i]);
      const BigInt predicted = predict_class_degree(
          *r, classify(c.matrix), c.matrix.x, c.matrix.y);
      CHECK(predicted == BigInt(g.degree(i)));
    }
  }
}

TEST_CASE("class degree sums over zmod 8") {
  const RingPtr r = Ring::modular(8);
  CHECK(predict_class_degree_sum(*r, ClassTag::A1) == 1760);
  CHECK(predict_class_degree_sum(*r, ClassTag::A2) == 1760);
  CHECK(predict_class_degree_sum(*r, ClassTag::A3) == 7040);
  CHECK(predict_class_degree_sum(*r, ClassTag::A4) == 3880);
  CHECK(predict_class_degree_sum(*r, ClassTag::A5) == 3880);
  CHECK(predict_class_degree_sum(*r, ClassTag::A6) == 9592);
  CHECK(predict_class_degree_sum(*r, ClassTag::A7) == 5280);
  CHECK(predict_class_degree_sum(*r, ClassTag::A8) == 5280);
}

TEST_CASE("total edges from degree sums") {
  CHECK(predict_total_edges(*Ring::modular(4)) == 426);
  CHECK(predict_total_edges(*Ring::modular(8)) == 19236);
  CHECK(predict_total_edges(*Ring::modular(9)) == 31392);
  CHECK(predict_total_edges(*Ring::modular(10)) == 62055);
}

TEST_CASE("field edge count") {
  CHECK(predict_edges_field(2, 1) == 3);
  CHECK(predict_edges_field(3, 1) == 60);
  CHECK(predict_edges_field(2, 2) == 330);
  CHECK(predict_edges_field(5, 1) == 1140);
  CHECK(predict_edges_field(7, 1) == 6888);
  CHECK(predict_edges_field(2, 3) == 13860);
  CHECK(predict_edges_field(3, 2) == 25560);
}

TEST_CASE("product of fields edge count") {
  CHECK(predict_edges_product(2, 3) == 4557);
  CHECK(predict_edges_product(2, 5) == 62055);
  CHECK(predict_edges_product(5, 5) == 6172200);
  CHECK_THROWS_AS(predict_edges_product(6, 2), std::invalid_argument);
}

TEST_CASE("prime square edge polynomial") {
  CHECK(predict_edges_zp2(2) == 426);
  CHECK(predict_edges_zp2(3) == 31392);
  CHECK(predict_edges_zp2(5) == predict_total_edges(*Ring::modular(25)));
}

TEST_CASE("A7 degree sum over zmod n") {
  CHECK(predict_dA7star_zn(8) == 5280);
  CHECK(predict_dA7star_zn(10) == 17800);
  // Primes have no zero divisors, so the class is empty.
  CHECK(predict_dA7star_zn(5) == 0);
}

TEST_CASE("prime power class sums") {
  const PrimePowerClassSums a = predict_prime_power_class_sums(2, 2);
  CHECK(a.dA4star == 108);
  CHECK(a.dA5star == 108);
  CHECK(a.dA6star_alpha == 108);
  CHECK(a.dA6star_beta == 108);
  CHECK(a.dA6star == 108);
  CHECK(a.omega == 12);
  CHECK(a.alpha_ind == 48);

  const PrimePowerClassSums b = predict_prime_power_class_sums(2, 3);
  CHECK(b.dA4star == 3880);
  CHECK(b.dA6star_alpha == 7688);
  CHECK(b.dA6star_beta == 5784);
  CHECK(b.dA6star == 9592);
  CHECK(b.omega == 56);

  const PrimePowerClassSums c = predict_prime_power_class_sums(3, 2);
  CHECK(c.dA4star == 4194);
  CHECK(c.dA6star == 8388);
  CHECK(c.omega == 72);

  CHECK_THROWS_AS(predict_prime_power_class_sums(6, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(predict_prime_power_class_sums(2, 1),
                  std::invalid_argument);
}

TEST_CASE("field structure") {
  const FieldStructure fs = predict_field_structure(2, 2);
  CHECK(fs.components == 5);
  CHECK(fs.component_size == 12);
  CHECK(fs.degree == 11);
  CHECK(fs.omega == 12);
  CHECK(fs.alpha == 5);
  CHECK(!fs.connected);
}

TEST_CASE("modular structure claims") {
  const ZmStructure zs = predict_zm_structure(10);
  CHECK(zs.connected);
  CHECK(zs.diameter == 3);
  CHECK(zs.omega == 90);
  CHECK(zs.max_clique_count_claimed == 2);
  CHECK_THROWS_AS(predict_zm_structure(7), std::invalid_argument);
  CHECK_THROWS_AS(predict_zm_structure(2), std::invalid_argument);
}

TEST_CASE("independence conjecture values") {
  CHECK(conjecture_alpha_zn(4) == 48);
  CHECK(conjecture_alpha_zn(6) == 120);
  CHECK(conjecture_alpha_zn(8) == 384);
  CHECK(conjecture_alpha_zn(9) == 648);
  CHECK(conjecture_alpha_zn(10) == 640);
  CHECK_THROWS_AS(conjecture_alpha_zn(5), std::invalid_argument);
}

TEST_SUITE_END();
