#include "bihilb/combinatorics.hpp"
#include "bihilb/errors.hpp"
#include "bihilb/hilbert.hpp"
#include "bihilb/oracle/koszul.hpp"
#include "bihilb/oracle/quotient.hpp"
#include "bihilb/oracle/saturation.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bihilb;
using namespace bihilb::oracle;

namespace {

const PrimeField kSmall(32003);

// HF_V of the diagonal example, rows b = 0..7.
const std::int64_t kDiagonalHF[8][8] = {
    {1, 3, 6, 10, 15, 21, 24, 24},     {3, 9, 18, 30, 45, 63, 72, 72},
    {6, 18, 32, 48, 66, 86, 96, 96},   {10, 30, 48, 64, 78, 90, 96, 96},
    {15, 45, 66, 78, 87, 93, 96, 96},  {21, 63, 86, 90, 93, 95, 96, 96},
    {24, 72, 96, 96, 96, 96, 96, 96},  {24, 72, 96, 96, 96, 96, 96, 96},
};

}  // namespace

TEST_CASE("monomial basis order") {
  const auto basis = monomial_basis(Shape(2, 2), {1, 1});
  REQUIRE(basis.size() == 9);
  CHECK(basis.front().x == std::vector<int>{1, 0, 0});
  CHECK(basis.front().y == std::vector<int>{1, 0, 0});
  CHECK(basis.back().x == std::vector<int>{0, 0, 1});
  CHECK(basis.back().y == std::vector<int>{0, 0, 1});
  CHECK(monomial_basis(Shape(2, 2), {0, 0}).size() == 1);
  CHECK(monomial_basis(Shape(2, 2), {-1, 0}).empty());
  const auto big = monomial_basis(Shape(2, 1), {3, 2});
  for (std::size_t i = 0; i < big.size(); ++i) {
    CHECK(monomial_index(Shape(2, 1), big[i]) == i);
    if (i > 0) CHECK(basis_order_less(big[i - 1], big[i]));
  }
}

TEST_CASE("instances: construction, JSON round trip, errors") {
  const Instance diag = diagonal_example(kSmall);
  REQUIRE(diag.forms.size() == 4);
  std::vector<std::size_t> counts;
  for (const auto& f : diag.forms) {
    CHECK(f.degree == Bidegree{2, 2});
    counts.push_back(f.terms.size());
  }
  CHECK(counts == std::vector<std::size_t>{1, 1, 1, 36});
  const std::string text = serialize_instance(diag);
  CHECK(parse_instance(text) == diag);
  CHECK(serialize_instance(parse_instance(text)) == text);
  CHECK(text.rfind(R"({"n":2,"m":2,"prime":32003,"forms":[{"bidegree":[2,2],"terms":[{"x":[2,0,0],"y":[2,0,0],"c":1}]})", 0) == 0);

  CHECK(random_instance(Shape(2, 2), {2, 2}, kSmall, 1) == random_instance(Shape(2, 2), {2, 2}, kSmall, 1));
  CHECK_FALSE(random_instance(Shape(2, 2), {2, 2}, kSmall, 1) == random_instance(Shape(2, 2), {2, 2}, kSmall, 2));

  const Instance neg = parse_instance(
      R"({"n":1,"m":1,"prime":7,"forms":[{"bidegree":[1,1],"terms":[{"x":[1,0],"y":[0,1],"c":-1}]}]})");
  CHECK(neg.forms[0].terms[0].coeff == 6);
  CHECK_THROWS_AS(parse_instance(R"({"n":1,"m":1,"prime":7,"forms":[)"), ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"n":1,"m":1,"prime":7,"forms":[{"bidegree":[1,1],"terms":[{"x":[1,0,0],"y":[0,1],"c":1}]}]})"),
      ShapeMismatch);
  try {
    parse_instance("{\"n\":1,  ]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("ideal pieces and HF of S/I") {
  const Instance diag = diagonal_example(kSmall);
  CHECK(ideal_piece(diag, {2, 2}).rows() == 4);
  CHECK(ideal_piece(diag, {0, 0}).rows() == 0);
  CHECK(ideal_piece(diag, {6, 0}).rows() == 0);
  CHECK(hf_si_oracle(diag, {2, 2}) == 32);
  CHECK(hf_si_oracle(diag, {2, 6}) == 108);
  CHECK(hf_si_oracle(diag, {0, 0}) == 1);
  const FpMatrix piece = ideal_piece(diag, {3, 2});
  CHECK(fp::rref(piece).matrix == piece);
}

TEST_CASE("independent Macaulay ranks agree with the library") {
  for (auto shape : {Shape(1, 1), Shape(1, 2), Shape(2, 1)}) {
    for (Bidegree d : {Bidegree{1, 1}, Bidegree{2, 1}}) {
      const Instance inst = random_instance(shape, d, kSmall, 3);
      for (std::int64_t a = 0; a <= 4; ++a)
        for (std::int64_t b = 0; b <= 4; ++b) REQUIRE(hf_si_oracle(inst, {a, b}) == testsupport::naive_hf_si(inst, {a, b}));
    }
  }
  // unequal degrees: only f1 lives in degree (1,1), so 4 - 1
  const Instance mixed = random_instance(Shape(1, 1), DegreeList{{1, 1}, {2, 1}}, kSmall, 5);
  CHECK(testsupport::naive_hf_si(mixed, {1, 1}) == 3);
  CHECK(hf_si_oracle(mixed, {1, 1}) == 3);
  const Instance diag = diagonal_example(kSmall);
  CHECK(testsupport::naive_hf_si(diag, {2, 6}) == 108);
  CHECK(testsupport::naive_hf_si(diag, {3, 4}) == hf_si_oracle(diag, {3, 4}));
}

TEST_CASE("quotient tower matches direct ranks") {
  const Instance inst = random_instance(Shape(2, 2), {2, 2}, kSmall, 9);
  GradedQuotient q(inst);
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = 0; b <= 6; ++b) REQUIRE(q.dim({a, b}) == hf_si_oracle(inst, {a, b}));
  const Instance odd = random_instance(Shape(1, 2), {2, 1}, kSmall, 4);
  GradedQuotient q2(odd);
  for (std::int64_t a = 0; a <= 7; ++a)
    for (std::int64_t b = 0; b <= 7; ++b) REQUIRE(q2.dim({a, b}) == hf_si_oracle(odd, {a, b}));
}

TEST_CASE("Koszul homology") {
  const Instance diag = diagonal_example(kSmall);
  CHECK(koszul_homology_dim(diag, 1, {2, 2}) == 0);
  CHECK(koszul_homology_dim(diag, 0, {2, 6}) == 108);
  CHECK(koszul_homology_dim(diag, 4, {7, 3}) == 0);
  CHECK_THROWS_AS(koszul_homology_dim(diag, 5, {2, 2}), IndexOutOfRange);
  CHECK_THROWS_AS(koszul_homology_dim(diag, -1, {2, 2}), IndexOutOfRange);
  // Euler characteristic of the complex is chi
  KoszulComplex k(random_instance(Shape(1, 2), {1, 1}, kSmall, 2));
  for (std::int64_t a = 0; a <= 4; ++a) {
    for (std::int64_t b = 0; b <= 4; ++b) {
      std::int64_t euler = 0;
      for (std::int64_t i = 0; i <= 3; ++i) euler += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(k.homology_dim(i, {a, b}));
      REQUIRE(BigInt(euler) == chi_equal(Shape(1, 2), {1, 1}, {a, b}));
    }
  }
}

TEST_CASE("saturation of the diagonal example") {
  const Instance diag = diagonal_example(kSmall);
  const Window w{{0, 0}, {7, 7}};
  const IntGrid grid = hf_v_oracle(diag, w);
  for (std::int64_t b = 0; b <= 7; ++b)
    for (std::int64_t a = 0; a <= 7; ++a) REQUIRE(grid[{a, b}] == kDiagonalHF[b][a]);

  const DegreewiseIdeal j = saturate_window(diag, w, 8);
  CHECK(j.dim({6, 0}) == 4);
  CHECK(j.dim({2, 2}) == 4);
  CHECK(j.pieces.at({2, 2}) == ideal_piece(diag, {2, 2}));
  // J contains I everywhere, with equality off Gamma_1
  const RegionSpec spec(Shape(2, 2), {2, 2});
  for (const auto& mu : w.points()) {
    const FpMatrix& jp = j.pieces.at(mu);
    REQUIRE(fp::rref(jp).matrix == jp);
    REQUIRE(jp.rows() == static_cast<std::size_t>(basis_size(diag.shape, mu) - grid[mu]));
    const FpMatrix ip = ideal_piece(diag, mu);
    REQUIRE(fp::rank(fp::stack(jp, ip)) == jp.rows());
    if (!in_gamma(spec, 1, mu)) REQUIRE(jp.rows() == ip.rows());
  }

  CHECK(stabilization_staircase(grid, 96, spec).corners() == std::vector<Bidegree>{{2, 6}, {6, 2}});
  CHECK_THROWS_AS(stabilization_staircase(hf_v_oracle(diag, Window{{0, 0}, {3, 3}}), 96, spec), WindowTooSmall);
  IntGrid flat(Window{{1, 2}, {4, 4}}, 96);
  CHECK(stabilization_staircase(flat, 96).corners() == std::vector<Bidegree>{{1, 2}});
}

TEST_CASE("padding exhaustion is loud") {
  const Instance diag = diagonal_example(kSmall);
  SaturationOracle sat(diag);
  CHECK_THROWS_AS(sat.saturate(Window{{0, 0}, {7, 7}}, 1), PaddingExhausted);
  CHECK_THROWS_AS(sat.saturate(Window{{0, 0}, {7, 7}}, RetryPolicy{1, 2}), PaddingExhausted);
}

TEST_CASE("forms spanning a whole piece saturate to everything") {
  // all four bilinear monomials on P1 x P1 (more forms than a CI needs)
  Instance inst{Shape(1, 1), kSmall, {}};
  for (const auto& mono : monomial_basis(Shape(1, 1), {1, 1})) inst.forms.push_back(Form::make({1, 1}, {{mono, 1}}, kSmall));
  const IntGrid grid = hf_v_oracle(inst, Window{{0, 0}, {4, 4}});
  for (const auto& mu : grid.window.points()) {
    if (leq(Bidegree{1, 1}, mu)) REQUIRE(grid[mu] == 0);
  }
}

TEST_CASE("oracle invariants on random complete intersections") {
  for (auto shape : {Shape(1, 1), Shape(1, 2), Shape(2, 1)}) {
    for (Bidegree d : {Bidegree{1, 1}, Bidegree{2, 1}, Bidegree{2, 2}}) {
      const RegionSpec spec(shape, d);
      const Bidegree sg = sigma(spec);
      const Window w = validation_window(spec, Window{{0, 0}, sg + Bidegree{2, 2}});
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Instance inst = random_instance(shape, d, kSmall, seed);
        SaturationOracle sat(inst);
        const SaturatedWindow s = sat.saturate(w);
        IntGrid grid(w);
        for (const auto& mu : w.points()) grid[mu] = s.hf_v(mu);
        validate_complete_intersection(inst, spec, grid);
        const std::int64_t deg = static_cast<std::int64_t>(degree_ci(shape, d));
        for (const auto& mu : w.points()) {
          REQUIRE(grid[mu] <= deg);
          if (mu.a > 0) REQUIRE(grid[mu] >= grid[mu - Bidegree{1, 0}]);
          if (mu.b > 0) REQUIRE(grid[mu] >= grid[mu - Bidegree{0, 1}]);
          REQUIRE(s.hf_si(mu) == static_cast<std::int64_t>(hf_si_oracle(inst, mu)));
          bool high = false;
          for (std::int64_t i = 2; i <= gamma_index_max(spec); ++i) high |= in_gamma(spec, i, mu);
          if (!high) REQUIRE(BigInt(s.hf_si(mu)) == chi_equal(shape, d, mu));
          if (!in_gamma(spec, 1, mu)) REQUIRE(grid[mu] == s.hf_si(mu));
          const Bidegree dual = sg - mu;
          if (!in_gamma(spec, 0, mu) && w.contains(dual)) REQUIRE(grid[mu] + grid[dual] == deg);
          if (!in_gamma(spec, 0, mu) && !in_gamma(spec, -1, mu)) {
            REQUIRE(deg - grid[mu] == static_cast<std::int64_t>(hf_si_oracle(inst, dual)));
          }
        }
        REQUIRE(stabilization_staircase(grid, deg, spec).contains(guaranteed_corners(spec)));
      }
    }
  }
}

TEST_CASE("validation rejects degenerate instances") {
  const RegionSpec spec(Shape(1, 1), {1, 1});
  // x0 y0 twice: not a complete intersection
  const Monomial m{{1, 0}, {1, 0}};
  Instance bad{Shape(1, 1), kSmall, {Form::make({1, 1}, {{m, 1}}, kSmall), Form::make({1, 1}, {{m, 2}}, kSmall)}};
  const Window w = validation_window(spec, Window{{0, 0}, {2, 2}});
  CHECK_THROWS_AS(validate_complete_intersection(bad, spec, hf_v_oracle(bad, w)), NotCompleteIntersection);
  const Instance other = random_instance(Shape(1, 2), {1, 1}, kSmall, 1);
  CHECK_THROWS_AS(validate_complete_intersection(other, spec, IntGrid(w)), ShapeMismatch);
}
