#include <doctest.h>

#include "hsym/errors.hpp"
#include "hsym/invariants.hpp"

#include <random>
#include <set>

using namespace hsym;

namespace {

// Proof-decomposition inputs for j_general on a homogeneous bundle:
// m = dim X, h0 = dim W, r = dim V, deg_e / deg_l = (r / m) xi_k(lam) / xi_k(lam_ad).
Rational j_from_general(const HermitianGeometry& geo, const BundleReport& r) {
  const Integer m = geo.levi_data().dim_x;
  const Rational ratio = Rational(r.rank, m) * r.xi_k_lam / r.xi_k_ad;
  return j_general(m, r.h0, r.rank, ratio, Rational(1));
}

}  // namespace

TEST_CASE("classification table") {
  const auto table = hermitian_table(4);
  auto has = [&](char letter, int rank, int node) {
    for (const auto& s : table)
      if (s.ambient == SimpleType{letter, rank} && s.node == node) return true;
    return false;
  };
  CHECK(has('C', 4, 4));
  CHECK(has('E', 7, 7));
  CHECK(has('E', 6, 1));
  CHECK_FALSE(has('B', 3, 2));
  CHECK_FALSE(has('D', 4, 3));
  for (const auto& s : table) {
    if (s.ambient == SimpleType{'C', 4}) {
      CHECK(s.klein_label == "Sp(4,C)/P(α₄)");
      CHECK(s.family == Family::CI);
    }
  }

  // Expected size for rank bound 8: A 36, BI 7, DI 6, DIII 5, CI 7, E 2.
  CHECK(hermitian_table(8).size() == 36 + 7 + 6 + 5 + 7 + 2);
  for (const auto& s : hermitian_table(8)) {
    RootSystem rs(s.ambient);
    CHECK(rs.xi(highest_root_fw(rs), s.node) == 1);
    CHECK(in_hermitian_table(s.ambient, s.node));
  }
}

TEST_CASE("is_hermitian matches the classification up to diagram isomorphism") {
  std::set<std::pair<std::string, int>> unlisted;
  for (SimpleType t : all_simple_types(8)) {
    RootSystem rs(t);
    for (int k = 1; k <= rs.rank(); ++k) {
      const bool cominuscule = is_hermitian(rs, k);
      if (cominuscule != in_hermitian_table(t, k)) unlisted.insert({t.name(), k});
      if (cominuscule) {
        CHECK_NOTHROW(hermitian_space(t, k));
      } else {
        CHECK_THROWS_AS(hermitian_space(t, k), DomainError);
      }
    }
  }
  // Only diagram images of listed nodes are cominuscule without being listed.
  std::set<std::pair<std::string, int>> expected = {{"D3", 2}, {"D3", 3}, {"E6", 6}};
  for (int n = 4; n <= 8; ++n) expected.insert({"D" + std::to_string(n), n - 1});
  CHECK(unlisted == expected);

  CHECK(hermitian_space({'E', 6}, 6).family == Family::EIII);
  CHECK(hermitian_space({'D', 5}, 4).family == Family::DIII);
  CHECK(hermitian_space({'D', 3}, 3).family == Family::AIII);
  CHECK(is_hermitian(RootSystem({'E', 6}), 1));
  CHECK_FALSE(is_hermitian(RootSystem({'E', 6}), 2));
  CHECK(RootSystem({'E', 6}).xi(Weight::fundamental(6, 2), 2) == 2);
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) CHECK(is_hermitian(RootSystem({'A', n - 1}), k));
}

TEST_CASE("Bott-Borel-Weil sections") {
  for (int n = 2; n <= 6; ++n) {
    RootSystem rs({'B', n});
    CHECK(h0_bbw(rs, Parabolic::maximal(rs.type(), 1), Weight::fundamental(n, n)) == Integer(1) << n);
  }
  RootSystem a2({'A', 2});
  CHECK(h0_bbw(a2, Parabolic::maximal(a2.type(), 1), Weight({-1, 1})) == 0);
  CHECK_THROWS_AS(h0_bbw(a2, Parabolic::maximal(a2.type(), 1), Weight({0, -1})), InputError);
  RootSystem e7({'E', 7});
  CHECK(h0_bbw(e7, Parabolic::maximal(e7.type(), 7), Weight::fundamental(7, 1)) ==
        freudenthal_dim(e7, Weight::fundamental(7, 1)).value);
  CHECK(h0_bbw(e7, Parabolic::maximal(e7.type(), 7), Weight::fundamental(7, 1)) == 133);
}

TEST_CASE("first Chern class ratios") {
  for (SimpleType t : all_simple_types(6)) {
    RootSystem rs(t);
    for (int k = 1; k <= rs.rank(); ++k)
      CHECK(c1_ratio(rs, Parabolic::maximal(t, k), Weight::fundamental(rs.rank(), k)) == 1);
  }
  for (int n = 2; n <= 7; ++n) {
    // Anticanonical class of the odd quadric: index 2n - 1.
    RootSystem b({'B', n});
    const Parabolic p = Parabolic::maximal(b.type(), 1);
    CHECK(b.xi(Weight::fundamental(n, 1), 1) == 1);
    CHECK(b.xi(highest_root_fw(b), 1) == 1);
    CHECK(c1_ratio(b, p, highest_root_fw(b)) == 2 * n - 1);
    CHECK(c1_ratio(b, p, highest_root_fw(b)) == Rational(levi(b, p).dim_x));

    // Lagrangian Grassmannian: n * xi_n(varpi_1) / xi_n(varpi_n) = n (1/2) / (n/2) = 1.
    RootSystem c({'C', n});
    const Parabolic q = Parabolic::maximal(c.type(), n);
    CHECK(c.xi(Weight::fundamental(n, 1), n) / c.xi(Weight::fundamental(n, 1) * 2, n) == Rational(1, 2));
    CHECK(c.xi(Weight::fundamental(n, n), n) == Rational(n, 2));
    CHECK(c1_ratio(c, q, Weight::fundamental(n, 1)) == Rational(n) * Rational(1, 2) / Rational(n, 2));
  }
  RootSystem a3({'A', 3});
  CHECK_THROWS_AS(c1_ratio(a3, Parabolic(a3.type(), {1, 2}), Weight::fundamental(3, 1)), InputError);
}

TEST_CASE("j_general") {
  CHECK(j_general(1, 2, 1, 1, 2) == 2);
  CHECK_THROWS_AS(j_general(2, 3, 3, 1, 1), UndefinedJError);
  CHECK_THROWS_AS(j_general(2, 2, 3, 1, 1), UndefinedJError);
  CHECK_THROWS_AS(j_general(0, 3, 1, 1, 1), InputError);
  CHECK_THROWS_AS(j_general(2, 3, 0, 1, 1), InputError);
  CHECK_THROWS_AS(j_general(2, 3, 1, 1, 0), InputError);

  const HermitianGeometry b3(hermitian_space({'B', 3}, 1));
  const BundleReport r = b3.j_hom(Weight::fundamental(3, 3));
  CHECK(b3.levi_data().dim_x == 5);
  CHECK(r.h0 == 8);
  CHECK(r.rank == 4);
  CHECK(j_from_general(b3, r) == 2);
}

TEST_CASE("J on the classical families is 2") {
  auto check_two = [](char letter, int rank, int node, int weight_node) {
    const HermitianGeometry geo(hermitian_space({letter, rank}, node));
    const BundleReport r = geo.j_hom(Weight::fundamental(rank, weight_node));
    CAPTURE(geo.space().klein_label);
    CHECK(*r.j_value == 2);
    CHECK(r.sharp());
    CHECK(j_from_general(geo, r) == 2);
  };
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) check_two('A', n - 1, k, 1);
  for (int n = 2; n <= 7; ++n) check_two('B', n, 1, n);
  for (int n = 3; n <= 7; ++n) check_two('D', n, 1, n);
  for (int n = 2; n <= 7; ++n) check_two('C', n, n, 1);
  for (int n = 4; n <= 7; ++n) check_two('D', n, n, 1);
}

TEST_CASE("exceptional values") {
  const HermitianGeometry e6(hermitian_space({'E', 6}, 1));
  const BundleReport r6 = e6.j_hom(Weight::fundamental(6, 6));
  CHECK(*r6.j_value == Rational(36, 17));
  CHECK(r6.h0 == 27);
  CHECK(r6.rank == 10);
  CHECK_FALSE(r6.sharp());
  CHECK(*e6.j_hom(Weight::fundamental(6, 2)).j_value == Rational(78, 31));

  const HermitianGeometry e7(hermitian_space({'E', 7}, 7));
  const BundleReport r7 = e7.j_hom(Weight::fundamental(7, 1));
  CHECK(*r7.j_value == Rational(133, 53));
  CHECK(j_from_general(e7, r7) == Rational(133, 53));

  const std::vector<Rational> e6_form = {Rational(8, 3), 2, Rational(10, 3), 4, Rational(8, 3), Rational(4, 3)};
  CHECK(e6.pruning_coefficients() == e6_form);
  const std::vector<Rational> e7_form = {2, 3, 4, 6, 5, 4, 3};
  CHECK(e7.pruning_coefficients() == e7_form);
}

TEST_CASE("j_hom errors") {
  const HermitianGeometry e6(hermitian_space({'E', 6}, 1));
  CHECK_THROWS_AS(e6.j_hom(Weight::zero(6)), UndefinedJError);
  CHECK_THROWS_AS(e6.j_hom(Weight({-1, 0, 0, 0, 0, 1})), DomainError);
  CHECK_THROWS_AS(e6.j_hom(Weight({0, -1, 0, 0, 0, 1})), DomainError);
  CHECK_THROWS_AS(e6.j_hom(Weight({1, 0})), InputError);
  CHECK_THROWS_AS(hermitian_space({'E', 6}, 2), DomainError);
  CHECK_THROWS_AS(hermitian_space({'E', 8}, 8), DomainError);
  CHECK_THROWS_AS(HermitianGeometry(HermitianSpace{{'B', 3}, 2, Family::BI, "bogus"}), DomainError);

  // p-dominant but not G-dominant: describe() reports h0 = 0 and no J.
  const BundleReport r = e6.describe(Weight({-1, 0, 0, 0, 0, 1}));
  CHECK(r.h0 == 0);
  CHECK_FALSE(r.j_value.has_value());
  CHECK_THROWS_AS(e6.describe(Weight({0, -1, 0, 0, 0, 0})), InputError);
}

TEST_CASE("pruning inequality and cominuscule normalization on random weights") {
  std::mt19937 rng(99);
  const auto table = hermitian_table(7);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  std::uniform_int_distribution<int> coeff(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const HermitianGeometry geo(table[pick(rng)]);
    std::vector<int> a(geo.roots().rank());
    for (auto& x : a) x = coeff(rng);
    if (Weight(a).is_zero()) a[0] = 1;
    const BundleReport r = geo.j_hom(Weight(a));
    CAPTURE(geo.space().klein_label);
    CAPTURE(to_string(Weight(a)));
    CHECK(r.xi_k_ad == 1);
    CHECK(r.h0 > r.rank);
    CHECK(*r.j_value >= geo.pruning_bound(Weight(a)));
    CHECK(*r.j_value > 2 * r.xi_k_lam / r.xi_k_ad);
    CHECK(*r.j_value == Rational(2 * r.h0, r.h0 - r.rank) * r.xi_k_lam);
  }
}

TEST_CASE("dim X equals the Levi dimension of the adjoint weight") {
  for (const auto& s : hermitian_table(8)) {
    const HermitianGeometry geo(s);
    CAPTURE(s.klein_label);
    CHECK(weyl_dim_levi(geo.roots(), geo.levi_data(), geo.lambda_ad()).value == geo.levi_data().dim_x);
  }
}
