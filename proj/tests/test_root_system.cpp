#include <doctest.h>

#include "hsym/errors.hpp"
#include "hsym/root_system.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace hsym;

namespace {

std::vector<Rational> row_times(const IntMatrix& c, const RationalMatrix& inv, int i) {
  std::vector<Rational> out(c.size(), Rational(0));
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t k = 0; k < c.size(); ++k) out[j] += c[i][k] * inv[k][j];
  return out;
}

}  // namespace

TEST_CASE("simple types enforce rank constraints") {
  CHECK_NOTHROW(SimpleType::parse("A1"));
  CHECK_NOTHROW(SimpleType::parse("e7"));
  CHECK_THROWS_AS(SimpleType::parse("B1"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("C1"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("D2"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("E5"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("E9"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("F3"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("G3"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("H3"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("A"), InputError);
  CHECK_THROWS_AS(SimpleType::parse("A2x"), InputError);
  CHECK_THROWS_AS(RootSystem(SimpleType{'D', 2}), InputError);
}

TEST_CASE("A2 basics") {
  RootSystem rs({'A', 2});
  CHECK(rs.cartan() == IntMatrix{{2, -1}, {-1, 2}});
  REQUIRE(rs.positive_roots().size() == 3);
  CHECK(rs.highest_root().coeffs == std::vector<int>{1, 1});
  CHECK(highest_root_fw(rs) == Weight({1, 1}));
}

TEST_CASE("root counts and the orthonormal-coordinate oracle agree") {
  // B3 -> 9, E6 -> 36, E7 -> 63 come from the oracle, not from the library.
  CHECK(oracle::positive_root_coeffs({'B', 3}).size() == 9);
  CHECK(oracle::positive_root_coeffs({'E', 6}).size() == 36);
  CHECK(oracle::positive_root_coeffs({'E', 7}).size() == 63);
  CHECK(RootSystem({'B', 3}).positive_roots().size() == 9);
  CHECK(RootSystem({'E', 6}).positive_roots().size() == 36);
  CHECK(RootSystem({'E', 7}).positive_roots().size() == 63);

  for (SimpleType t : all_simple_types(8)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    CHECK(rs.cartan() == oracle::ambient_cartan(t));
    std::set<std::vector<int>> ours;
    for (const Root& r : rs.positive_roots()) ours.insert(r.coeffs);
    CHECK(ours == oracle::positive_root_coeffs(t));
    CHECK(static_cast<int>(rs.positive_roots().size()) == oracle::expected_positive_roots(t));
    CHECK(static_cast<int>(rs.positive_roots().size()) == positive_root_count(t));
  }
}

TEST_CASE("structural invariants for every type of rank <= 8") {
  for (SimpleType t : all_simple_types(8)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    const int l = rs.rank();
    for (int i = 0; i < l; ++i) {
      CHECK(rs.cartan()[i][i] == 2);
      for (int j = 0; j < l; ++j) {
        if (i != j) CHECK(rs.cartan()[i][j] <= 0);
        CHECK(rs.symmetrizer()[i] * rs.cartan()[i][j] == rs.symmetrizer()[j] * rs.cartan()[j][i]);
        CHECK(rs.cartan_inverse()[i][j] > 0);
      }
      auto row = row_times(rs.cartan(), rs.cartan_inverse(), i);
      for (int j = 0; j < l; ++j) CHECK(row[j] == (i == j ? 1 : 0));
    }
    const int min_d = *std::min_element(rs.symmetrizer().begin(), rs.symmetrizer().end());
    CHECK(min_d == 1);

    // Simple roots come first in node order; then (height, decreasing lex).
    for (int i = 0; i < l; ++i) {
      std::vector<int> e(l, 0);
      e[i] = 1;
      CHECK(rs.positive_roots()[i].coeffs == e);
    }
    for (std::size_t i = 1; i < rs.positive_roots().size(); ++i) {
      const Root& a = rs.positive_roots()[i - 1];
      const Root& b = rs.positive_roots()[i];
      CHECK((a.height() < b.height() || (a.height() == b.height() && a.coeffs > b.coeffs)));
    }

    // The highest root is the unique positive root with dominant weight
    // coordinates, and its height is maximal.
    int dominant_count = 0;
    for (const Root& r : rs.positive_roots()) {
      if (rs.to_weight(r).is_dominant()) ++dominant_count;
      CHECK(r.height() <= rs.highest_root().height());
    }
    // For non-simply-laced types the highest short root is dominant too.
    const bool simply_laced = t.letter == 'A' || t.letter == 'D' || t.letter == 'E';
    CHECK(dominant_count == (simply_laced ? 1 : 2));
    int maximal = 0;
    for (const Root& r : rs.positive_roots()) maximal += r.height() == rs.highest_root().height();
    CHECK(maximal == 1);
    CHECK(highest_root_fw(rs).is_dominant());
  }
}

TEST_CASE("highest root in fundamental weights") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(highest_root_fw(RootSystem({'C', n})) == Weight::fundamental(n, 1) * 2);
    if (n >= 3) CHECK(highest_root_fw(RootSystem({'B', n})) == Weight::fundamental(n, 2));
  }
  CHECK(highest_root_fw(RootSystem({'B', 2})) == Weight::fundamental(2, 2) * 2);
  CHECK(highest_root_fw(RootSystem({'E', 6})) == Weight::fundamental(6, 2));
  CHECK(highest_root_fw(RootSystem({'E', 7})) == Weight::fundamental(7, 1));
  CHECK(highest_root_fw(RootSystem({'E', 8})) == Weight::fundamental(8, 8));
}

TEST_CASE("xi values") {
  for (int n = 2; n <= 8; ++n) {
    RootSystem b({'B', n});
    CHECK(xi(b, Weight::fundamental(n, n), 1) == Rational(1, 2));
  }
  RootSystem e6({'E', 6});
  const std::vector<Rational> e6_expected = {Rational(4, 3), 1, Rational(5, 3), 2, Rational(4, 3), Rational(2, 3)};
  for (int i = 1; i <= 6; ++i) CHECK(xi(e6, Weight::fundamental(6, i), 1) == e6_expected[i - 1]);

  RootSystem e7({'E', 7});
  const std::vector<Rational> e7_expected = {1, Rational(3, 2), 2, 3, Rational(5, 2), 2, Rational(3, 2)};
  for (int i = 1; i <= 7; ++i) CHECK(xi(e7, Weight::fundamental(7, i), 7) == e7_expected[i - 1]);

  CHECK_THROWS_AS(e6.xi(Weight::fundamental(6, 1), 0), InputError);
  CHECK_THROWS_AS(e6.xi(Weight::fundamental(6, 1), 7), InputError);
  CHECK_THROWS_AS(e6.xi(Weight::fundamental(5, 1), 1), InputError);
}

TEST_CASE("xi agrees with ambient fundamental weights") {
  for (SimpleType t : all_simple_types(8)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    auto sys = oracle::ambient_system(t);
    for (int i = 1; i <= rs.rank(); ++i) {
      auto coords = oracle::simple_coordinates(sys, oracle::fundamental_weight(sys, i));
      for (int k = 1; k <= rs.rank(); ++k) CHECK(rs.xi(Weight::fundamental(rs.rank(), i), k) == coords[k - 1]);
    }
  }
}

TEST_CASE("xi is linear") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (SimpleType t : all_simple_types(8)) {
    RootSystem rs(t);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> a(rs.rank()), b(rs.rank());
      for (auto& x : a) x = coeff(rng);
      for (auto& x : b) x = coeff(rng);
      for (int k = 1; k <= rs.rank(); ++k) {
        CHECK(rs.xi(Weight(a) + Weight(b), k) == rs.xi(Weight(a), k) + rs.xi(Weight(b), k));
      }
    }
  }
}

TEST_CASE("coroot pairings") {
  for (SimpleType t : all_simple_types(8)) {
    RootSystem rs(t);
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j)
        CHECK(rs.coroot_pairing(Weight::fundamental(rs.rank(), i), rs.positive_roots()[j - 1]) == (i == j ? 1 : 0));
  }
  RootSystem a2({'A', 2});
  CHECK(coroot_pairing(a2, a2.rho(), a2.highest_root()) == 2);

  // B2: long root a1 + 2 a2 = e1 + e2, varpi_2 = (e1 + e2) / 2.
  RootSystem b2({'B', 2});
  const int idx = b2.find_root({1, 2});
  REQUIRE(idx >= 0);
  auto sys = oracle::ambient_system({'B', 2});
  oracle::Vec alpha = {Rational(1), Rational(1)};
  CHECK(oracle::simple_coordinates(sys, alpha) == std::vector<Rational>{1, 2});
  const Rational expected = oracle::coroot_pairing(oracle::fundamental_weight(sys, 2), alpha);
  CHECK(expected == 1);
  CHECK(coroot_pairing(b2, Weight::fundamental(2, 2), b2.positive_roots()[idx]) == expected);
}

TEST_CASE("coroot pairings match the ambient model on every root") {
  for (SimpleType t : all_simple_types(6)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    auto sys = oracle::ambient_system(t);
    for (const Root& r : rs.positive_roots()) {
      oracle::Vec alpha(sys.simple.front().size(), Rational(0));
      for (int i = 0; i < rs.rank(); ++i)
        for (std::size_t c = 0; c < alpha.size(); ++c) alpha[c] += r.coeffs[i] * sys.simple[i][c];
      for (int i = 1; i <= rs.rank(); ++i) {
        CHECK(rs.coroot_pairing(Weight::fundamental(rs.rank(), i), r) ==
              oracle::coroot_pairing(oracle::fundamental_weight(sys, i), alpha));
      }
    }
  }
}

TEST_CASE("weights parse with the expected rank") {
  CHECK(parse_weight("0,0,1", 3) == Weight({0, 0, 1}));
  CHECK(parse_weight(" -1, 2 ", 2) == Weight({-1, 2}));
  CHECK_THROWS_AS(parse_weight("0,0", 3), InputError);
  CHECK_THROWS_AS(parse_weight("0,,1", 3), InputError);
  CHECK_THROWS_AS(parse_weight("a", 1), InputError);
  CHECK(to_string(Weight({1, -2})) == "[1,-2]");
}
