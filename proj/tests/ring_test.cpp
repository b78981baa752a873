#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "commgraph/ring.hpp"

using namespace commgraph;

TEST_SUITE_BEGIN("ring");

TEST_CASE("parse and format round trip") {
  for (const char* text : {"zmod:8", "gf:2^3:1101", "gf:3^2:101",
                           "prod:zmod:2,zmod:5", "prod:gf:2^2:111,zmod:3"}) {
    const RingSpec spec = parse_ring_spec(text);
    CHECK(format_ring_spec(spec) == text);
  }
  // Auto modulus stays implicit in the parsed spec but the constructed ring
  // reports the modulus it settled on.
  const RingSpec bare = parse_ring_spec("gf:2^2");
  CHECK(!bare.coeffs.has_value());
  CHECK(Ring::make(bare)->spec_string() == "gf:2^2:111");
}

TEST_CASE("parse rejects malformed text") {
  for (const char* text :
       {"", "zmod:", "zmod:0x4", "ring:4", "gf:2", "gf:2^", "gf:2^2:11",
        "gf:2^2:1111", "gf:11^2:1,1", "prod:zmod:2", "prod:zmod:2,",
        "prod:prod:zmod:2,zmod:3,zmod:5", "zmod:4 ", "zmod:4,zmod:5"}) {
    CHECK_THROWS_AS(parse_ring_spec(text), std::invalid_argument);
  }
}

TEST_CASE("factories reject invalid parameters") {
  CHECK_THROWS_AS(Ring::modular(0), std::invalid_argument);
  CHECK_THROWS_AS(Ring::modular(1), std::invalid_argument);
  CHECK_THROWS_AS(Ring::field(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(Ring::field(2, 0), std::invalid_argument);
  // x^2 + 1 = (x + 1)^2 over GF(2), so it is not a valid modulus.
  CHECK_THROWS_AS(Ring::field(2, 2, std::vector<std::uint32_t>{1, 0, 1}),
                  std::invalid_argument);
  // Non-monic modulus.
  CHECK_THROWS_AS(Ring::field(3, 2, std::vector<std::uint32_t>{1, 0, 2}),
                  std::invalid_argument);
}

TEST_CASE("factories enforce hard caps") {
  CHECK_THROWS_AS(Ring::modular(std::uint64_t{1} << 21), CapExceeded);
  CHECK_THROWS_AS(Ring::field(2, 9), CapExceeded);
  RingLimits tight;
  tight.max_ring_size = 100;
  CHECK_THROWS_AS(Ring::modular(101, tight), CapExceeded);
  CHECK_THROWS_AS(Ring::product(Ring::modular(11, tight),
                                Ring::modular(10, tight), tight),
                  CapExceeded);
}

TEST_CASE("modular arithmetic") {
  const RingPtr r = Ring::modular(6);
  CHECK(r->size() == 6);
  CHECK(r->zero() == 0);
  CHECK(r->one() == 1);
  CHECK(r->add(4, 5) == 3);
  CHECK(r->sub(1, 4) == 3);
  CHECK(r->neg(2) == 4);
  CHECK(r->mul(4, 5) == 2);
  CHECK(r->inverse(5) == Elem{5});
  CHECK(!r->inverse(2).has_value());
  CHECK(!r->inverse(0).has_value());
  CHECK(r->units() == std::vector<Elem>{1, 5});
  CHECK(r->zero_divisors() == std::vector<Elem>{2, 3, 4});
  CHECK(r->is_unit(5));
  CHECK(!r->is_unit(0));
  CHECK(r->is_zero_divisor(3));
  CHECK(!r->is_zero_divisor(0));
  CHECK_THROWS_AS(r->add(6, 0), std::out_of_range);
}

TEST_CASE("annihilators and syzygies") {
  const RingPtr r = Ring::modular(6);
  CHECK(r->annihilator(0) == std::vector<Elem>{0, 1, 2, 3, 4, 5});
  CHECK(r->annihilator(1) == std::vector<Elem>{0});
  CHECK(r->annihilator(2) == std::vector<Elem>{0, 3});
  CHECK(r->annihilator(3) == std::vector<Elem>{0, 2, 4});
  // 2x + 3y = 0 mod 6 forces 2x = 0 and 3y = 0 separately.
  CHECK(r->count_syzygies(2, 3) == 6);
  CHECK(r->count_syzygies(0, 0) == 36);
  CHECK(r->count_syzygies(1, 0) == 6);

  // Brute force cross-check on a second ring.
  const RingPtr s = Ring::modular(8);
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      std::uint64_t direct = 0;
      for (Elem x = 0; x < 8; ++x) {
        for (Elem y = 0; y < 8; ++y) {
          if (s->add(s->mul(a, x), s->mul(b, y)) == 0) ++direct;
        }
      }
      CHECK(s->count_syzygies(a, b) == direct);
    }
  }
}

TEST_CASE("irreducible polynomial search") {
  CHECK(find_irreducible(2, 1) == std::vector<std::uint32_t>{0, 1});
  CHECK(find_irreducible(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(find_irreducible(2, 3) == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(find_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(find_irreducible(5, 2) == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("field arithmetic over GF(4)") {
  const RingPtr f = Ring::field(2, 2);
  CHECK(f->size() == 4);
  CHECK(f->field_prime() == 2);
  CHECK(f->field_degree() == 2);
  CHECK(f->field_modulus() == std::vector<std::uint32_t>{1, 1, 1});
  // Codes order elements by (c0, c1): 0, x, 1, 1 + x.
  CHECK(f->one() == 2);
  CHECK(f->add(1, 2) == 3);
  // x * x = x + 1 once x^2 + x + 1 = 0.
  CHECK(f->mul(1, 1) == 3);
  CHECK(f->mul(1, 3) == 2);
  CHECK(f->zero_divisors().empty());
  CHECK(f->units().size() == 3);
  for (Elem a = 1; a < 4; ++a) {
    const auto inv = f->inverse(a);
    REQUIRE(inv.has_value());
    CHECK(f->mul(a, *inv) == f->one());
  }
  CHECK_THROWS_AS(f->factor(0), std::domain_error);
  CHECK_THROWS_AS(Ring::modular(6)->field_prime(), std::domain_error);
}

TEST_CASE("field axioms hold on sampled rings") {
  for (const char* text : {"gf:2^3", "gf:3^2", "gf:5^1", "gf:7^1"}) {
    const RingPtr f = Ring::make(parse_ring_spec(text));
    const Elem n = Elem(f->size());
    for (Elem a = 0; a < n; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->mul(a, f->one()) == a);
      for (Elem b = 0; b < n; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (Elem c = 0; c < n; ++c) {
          CHECK(f->mul(a, f->add(b, c)) ==
                f->add(f->mul(a, b), f->mul(a, c)));
          CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
        }
      }
    }
    CHECK(f->zero_divisors().empty());
  }
}

TEST_CASE("large field falls back to computed arithmetic") {
  // 3^6 = 729 elements, beyond the table threshold.
  const RingPtr f = Ring::field(3, 6);
  CHECK(f->size() == 729);
  // Code 1 decodes to x^5, so its sixth power exercises the modulus
  // reduction path.
  Elem p = f->one();
  for (int i = 0; i < 6; ++i) p = f->mul(p, 1);
  CHECK(p != 0);
  const auto inv = f->inverse(p);
  REQUIRE(inv.has_value());
  CHECK(f->mul(p, *inv) == f->one());
  for (Elem a : {Elem{7}, Elem{100}, Elem{728}}) {
    for (Elem b : {Elem{3}, Elem{250}}) {
      CHECK(f->mul(a, f->add(b, 1)) == f->add(f->mul(a, b), f->mul(a, 1)));
    }
  }
}

TEST_CASE("product ring structure") {
  const RingPtr r = Ring::product(Ring::modular(2), Ring::modular(5));
  CHECK(r->size() == 10);
  CHECK(r->kind() == RingKind::Product);
  CHECK(r->pack(1, 3) == 8);
  CHECK(r->unpack(8) == std::pair<Elem, Elem>{1, 3});
  CHECK(r->one() == r->pack(1, 1));
  const Elem a = r->pack(1, 2);
  const Elem b = r->pack(1, 4);
  CHECK(r->mul(a, b) == r->pack(1, 3));
  CHECK(r->add(a, b) == r->pack(0, 1));
  CHECK(r->units().size() == 4);
  CHECK(r->zero_divisors().size() == 5);
  CHECK(r->elem_string(8) == "(1,3)");
  CHECK(r->factor(0)->size() == 2);
  CHECK(r->factor(1)->size() == 5);
}

TEST_CASE("crt map is a ring isomorphism") {
  const CrtMap map = crt_map(2, 3);
  const Ring& zm = *map.source;
  const Ring& pr = *map.target;
  REQUIRE(zm.size() == 6);
  std::set<Elem> images;
  for (Elem x = 0; x < 6; ++x) {
    const Elem img = map.to_product(x);
    images.insert(img);
    CHECK(map.from_product(img) == x);
  }
  CHECK(images.size() == 6);
  CHECK(map.to_product(zm.one()) == pr.one());
  for (Elem x = 0; x < 6; ++x) {
    for (Elem y = 0; y < 6; ++y) {
      CHECK(map.to_product(zm.add(x, y)) ==
            pr.add(map.to_product(x), map.to_product(y)));
      CHECK(map.to_product(zm.mul(x, y)) ==
            pr.mul(map.to_product(x), map.to_product(y)));
    }
  }
  CHECK_THROWS_AS(crt_map(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(crt_map(1, 5), std::invalid_argument);
}

TEST_CASE("element and spec strings") {
  CHECK(Ring::modular(12)->elem_string(7) == "7");
  CHECK(Ring::modular(12)->spec_string() == "zmod:12");
  const RingPtr f = Ring::field(2, 3);
  CHECK(f->spec_string() == "gf:2^3:1011");
  const RingPtr p = Ring::product(Ring::modular(2), f);
  CHECK(p->spec_string() == "prod:zmod:2,gf:2^3:1011");
}

TEST_SUITE_END();
