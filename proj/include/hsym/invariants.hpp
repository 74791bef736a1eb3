#pragma once

// Bundle-level invariants of irreducible homogeneous bundles E_lambda over
// compact irreducible Hermitian symmetric spaces X = G/P(alpha_k).

#include "hsym/parabolic.hpp"
#include "hsym/rational.hpp"
#include "hsym/rep_dimension.hpp"
#include "hsym/root_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsym {

enum class Family { AIII, BI, DI, DIII, CI, EIII, EVII };

std::string to_string(Family f);
Family parse_family(std::string_view text);

struct HermitianSpace {
  SimpleType ambient;
  int node = 1;
  Family family = Family::AIII;
  std::string klein_label;  // e.g. "Sp(4,C)/P(α₄)"

  friend bool operator==(const HermitianSpace&, const HermitianSpace&) = default;
};

// The classification list: SL(n)/P(a_k) for n >= 2; Spin(2n+1)/P(a_1) for
// n >= 2; Spin(2n)/P(a_1) for n >= 3; Spin(2n)/P(a_n) for n >= 4;
// Sp(n,C)/P(a_n) for n >= 2; E6/P(a_1); E7/P(a_7). The rank bound applies
// to the infinite families; the two exceptional entries are always listed.
std::vector<HermitianSpace> hermitian_table(int max_rank = 8);

// Exact membership in the list above.
bool in_hermitian_table(SimpleType type, int node);

// Cominuscule test: xi_k(lambda_ad) == 1.
bool is_hermitian(const RootSystem& rs, int k);

// HermitianSpace for (type, node). Nodes related to a listed entry by a
// Dynkin-diagram isomorphism (D_n at a_{n-1}, E6 at a_6, D3 at a_2/a_3)
// carry the family of that entry. Throws DomainError if G/P(a_k) is not
// symmetric.
HermitianSpace hermitian_space(SimpleType type, int node);

// "SL(4)/P(α₂)", "Spin(7)/P(α₁)", ...
std::string klein_label(SimpleType type, int node);

// Bott-Borel-Weil: dim W_lambda if lambda is G-dominant, otherwise 0.
// Throws InputError if lambda is not dominant for p (E_lambda undefined).
Integer h0_bbw(const RootSystem& rs, const Parabolic& p, const Weight& lam);

// c1(E_lambda) as a multiple of c1(E_{varpi_k}):
// dim V_lambda * xi_k(lambda) / xi_k(varpi_k).
Rational c1_ratio(const RootSystem& rs, const Parabolic& p, const Weight& lam);

// J(E,L) = 2 m h0 deg_e / (r (h0 - r) deg_l), where deg_e = <c1(E) c1(L)^{m-1}, [X]>
// and deg_l = <c1(L)^m, [X]>. Throws UndefinedJError if h0 <= r and
// InputError if m < 1, r < 1 or deg_l == 0.
Rational j_general(const Integer& m, const Integer& h0, const Integer& r, const Rational& deg_e,
                   const Rational& deg_l);

// First eigenvalue of the symmetric Kahler-Einstein metric in 2 pi c1(X).
inline Rational lambda1_reference() { return Rational(2); }

struct BundleReport {
  HermitianSpace space;
  Weight lam;
  Integer rank;  // dim V_lambda
  Integer h0;    // dim W_lambda, or 0 if lambda is not G-dominant
  Rational xi_k_lam;
  Rational xi_k_ad;
  Rational c1_ratio;
  std::optional<Rational> j_value;  // undefined for trivial or non-G-dominant lambda

  bool sharp() const { return j_value && *j_value == lambda1_reference(); }
  friend bool operator==(const BundleReport&, const BundleReport&) = default;
};

// Precomputed data for one symmetric space; evaluating many weights against
// it avoids rebuilding the root system.
class HermitianGeometry {
 public:
  explicit HermitianGeometry(HermitianSpace space);

  const HermitianSpace& space() const { return space_; }
  const RootSystem& roots() const { return rs_; }
  const Parabolic& parabolic() const { return parabolic_; }
  const LeviData& levi_data() const { return levi_; }
  const Weight& lambda_ad() const { return lambda_ad_; }
  const Rational& xi_ad() const { return xi_ad_; }

  // Coefficients 2 xi_k(varpi_i) / xi_k(lambda_ad) of the linear lower bound on J.
  std::vector<Rational> pruning_coefficients() const;
  Rational pruning_bound(const Weight& lam) const;

  // All invariants; j_value left empty where J is undefined.
  // Throws InputError if lambda is not dominant for P(a_k).
  BundleReport describe(const Weight& lam) const;

  // J(E_lambda, -K_X) = 2 dim W / (dim W - dim V) * xi_k(lambda) / xi_k(lambda_ad).
  // Throws UndefinedJError for lambda = 0 and DomainError if lambda is not
  // G-dominant (no sections).
  BundleReport j_hom(const Weight& lam) const;

 private:
  HermitianSpace space_;
  RootSystem rs_;
  Parabolic parabolic_;
  LeviData levi_;
  Weight lambda_ad_;
  Rational xi_ad_;
};

inline BundleReport j_hom(const HermitianSpace& space, const Weight& lam) {
  return HermitianGeometry(space).j_hom(lam);
}

}  // namespace hsym
