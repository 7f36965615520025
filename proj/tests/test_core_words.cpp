#include <doctest.h>

#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"
#include "fixtures.hpp"

using namespace brickwords;

namespace {

std::string fmt(const Morphism& m, const Word& w) { return m.target().format(w); }

// Naive oracle: apply the morphism to the seed until the word is long enough.
Word naive_fixed_point(const Morphism& m, Letter seed, std::size_t n) {
  Word w{seed};
  while (w.size() < n) w = m.apply(w);
  w.resize(n);
  return w;
}

}  // namespace

TEST_SUITE("alphabet") {
  TEST_CASE("tokens keep declaration order") {
    Alphabet a({"c", "a", "b"});
    CHECK(a.size() == 3);
    CHECK(a.at("c") == 0);
    CHECK(a.token(2) == "b");
    CHECK_FALSE(a.find("d").has_value());
    CHECK_THROWS_AS(a.at("d"), DomainError);
  }

  TEST_CASE("invalid tokens are rejected") {
    CHECK_THROWS_AS(Alphabet({"a", "a"}), DomainError);
    CHECK_THROWS_AS(Alphabet({""}), DomainError);
    CHECK_THROWS_AS(Alphabet({"a;"}), DomainError);
    CHECK_THROWS_AS(Alphabet({"a b"}), DomainError);
  }

  TEST_CASE("dotted format for multi-character tokens") {
    const Alphabet idx = Alphabet::indices(12);
    CHECK(idx.dotted());
    CHECK(idx.format(Word{0, 9, 10}) == "0.9.10");
    CHECK(idx.parse("0.9.10") == Word{0, 9, 10});
    CHECK(idx.parse("04") == Word{0, 4});
    CHECK(idx.parse("0123") == Word{0, 1, 2, 3});
    const Alphabet small = Alphabet::indices(9);
    CHECK_FALSE(small.dotted());
    CHECK(small.format(Word{0, 1}) == "01");
    CHECK(small.parse("") == Word{});
  }
}

TEST_SUITE("morphism") {
  TEST_CASE("apply") {
    const auto p = fixtures::main_pair();
    const Alphabet& a = p.phi0.source();
    CHECK(fmt(p.phi0, p.phi0.apply(a.parse("a"))) == "abc");
    CHECK(p.phi0.apply(Word{}).empty());
    CHECK(fmt(p.phi1, p.phi1.apply(a.parse("cac"))) == "cacbaca");
  }

  TEST_CASE("letters outside the source are rejected") {
    const auto p = fixtures::main_pair();
    CHECK_THROWS_AS(p.phi0.apply(Word{7}), DomainError);
  }

  TEST_CASE("power") {
    const auto p = fixtures::main_pair();
    CHECK(power(p.phi0, 1) == p.phi0);
    const Morphism sq = power(p.phi0, 2);
    CHECK(fmt(sq, sq.image(0)) == "abcaac");
    const Morphism fib = parse_morphism("a->ab;b->a");
    CHECK(power(fib, 2) == parse_morphism("a->aba;b->ab"));
    CHECK_THROWS_AS(power(fib, 0), DomainError);
  }

  TEST_CASE("incidence matrix") {
    const auto p = fixtures::main_pair();
    const IncidenceMatrix m = incidence_matrix(p.phi0);
    CHECK(m.rows() == std::vector<std::vector<std::uint64_t>>{{1, 1, 1}, {1, 0, 0}, {1, 0, 1}});
    CHECK(incidence_matrix(p.phi1) == m);
    const Alphabet ab({"a", "b"});
    CHECK(incidence_matrix(Morphism::identity(ab)) == IncidenceMatrix::identity(2));
  }

  TEST_CASE("primitivity") {
    const auto p = fixtures::main_pair();
    CHECK(is_primitive(incidence_matrix(p.phi0)));
    CHECK_FALSE(is_primitive(IncidenceMatrix::identity(3)));
    CHECK_FALSE(is_primitive(IncidenceMatrix::from_rows({{4, 0, 0}, {1, 2, 1}, {1, 1, 2}})));
    const auto np = fixtures::non_primitive();
    CHECK(incidence_matrix(np.phi0).rows() == std::vector<std::vector<std::uint64_t>>{{4, 0, 0}, {1, 2, 1}, {1, 1, 2}});
  }

  TEST_CASE("prolongable seeds") {
    const auto p = fixtures::main_pair();
    CHECK(prolongable_seeds(p.phi0) == std::vector<Letter>{0});
    CHECK(prolongable_seeds(p.phi1) == std::vector<Letter>{2});
    CHECK(prolongable_seeds(Morphism::identity(Alphabet({"a", "b"}))).empty());
  }

  TEST_CASE("parikh") {
    const Alphabet a({"a", "b", "c"});
    CHECK(parikh(a.parse("abc"), 3).counts == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(parikh(Word{}, 3).counts == std::vector<std::uint64_t>{0, 0, 0});
    // Oracle: count each letter of "abcaac" directly.
    const std::string s = "abcaac";
    const std::vector<std::uint64_t> expected{static_cast<std::uint64_t>(std::count(s.begin(), s.end(), 'a')),
                                              static_cast<std::uint64_t>(std::count(s.begin(), s.end(), 'b')),
                                              static_cast<std::uint64_t>(std::count(s.begin(), s.end(), 'c'))};
    CHECK(parikh(a.parse(s), 3).counts == expected);
    CHECK(expected == std::vector<std::uint64_t>{3, 1, 2});
  }
}

TEST_SUITE("spec parser") {
  TEST_CASE("rules and sugar") {
    const Morphism m = parse_morphism(" a -> abc ; b->a;\n c->ac ;");
    CHECK(m.to_spec() == "a->abc;b->a;c->ac");
    CHECK(parse_morphism("a->a^3bc;b->a;c->ac").to_spec() == "a->aaabc;b->a;c->ac");
    CHECK(parse_morphism("a->cba^2;b->a;c->ca").to_spec() == "a->cbaa;b->a;c->ca");
  }

  TEST_CASE("dotted tokens") {
    const Morphism m = parse_morphism("0->0.1;1->10;10->1.0^2");
    CHECK(m.source().tokens() == std::vector<std::string>{"0", "1", "10"});
    CHECK(m.image(2) == Word{1, 0, 0});
    CHECK(parse_morphism(m.to_spec()) == m);
  }

  TEST_CASE("errors carry line and column") {
    CHECK_THROWS_AS(parse_morphism(""), ParseError);
    try {
      parse_morphism("a->ab;\nb->");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.message().find("erasing") != std::string::npos);
    }
    try {
      parse_morphism("a->abx;b->a");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 6);
      CHECK(e.message().find("unknown letter") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_morphism("a->a;a->b"), ParseError);
    CHECK_THROWS_AS(parse_morphism("a->a^0"), ParseError);
    CHECK_THROWS_AS(parse_morphism("a->ab;b->a extra"), ParseError);
  }
}

TEST_SUITE("fixed points") {
  TEST_CASE("main pair prefixes") {
    const auto p = fixtures::main_pair();
    CHECK(fmt(p.phi0, fixed_point_prefix(p.phi0, 0, 34)) == "abcaacabcabcacabcaacabcaacabcacabc");
    CHECK(fmt(p.phi1, fixed_point_prefix(p.phi1, 2, 34)) == "cacbacaacbacacbacbacaacbacacbacaac");
    const Morphism mu = fixtures::index_morphism(fixtures::kMainMu, 9);
    CHECK(mu.source().format(fixed_point_prefix(mu, 0, 42)) == "012345412312623123454123454784541234541231");
  }

  TEST_CASE("streaming agrees with naive expansion") {
    const auto p = fixtures::main_pair();
    CHECK(fixed_point_prefix(p.phi0, 0, 500) == naive_fixed_point(p.phi0, 0, 500));
    CHECK(fixed_point_prefix(p.phi1, 2, 500) == naive_fixed_point(p.phi1, 2, 500));
    FixedPointStream s(p.phi1, 2);
    const Word expected = naive_fixed_point(p.phi1, 2, 100);
    for (std::size_t i = 0; i < 100; ++i) CHECK(s.next() == expected[i]);
  }

  TEST_CASE("non-prolongable seed") {
    const auto p = fixtures::main_pair();
    CHECK_THROWS_AS(fixed_point_prefix(p.phi0, 1, 5), DomainError);
    CHECK_THROWS_AS(FixedPointStream(p.phi1, 0), DomainError);
  }
}
