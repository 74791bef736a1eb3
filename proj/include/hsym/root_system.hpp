#pragma once

// Exact root-system data for the simple Lie algebras in Bourbaki numbering.
//
// Conventions used throughout the library:
//   * nodes are numbered 1..rank in public APIs; vectors are 0-based;
//   * cartan(i, j) = 2 (a_i, a_j) / (a_i, a_i);
//   * the symmetrizer d_i = (a_i, a_i) / 2 is normalized so that short
//     roots have d = 1 (long roots: d = 2 for B, C, F4 and d = 3 for G2);
//   * a weight is stored by its fundamental-weight coordinates.

#include "hsym/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hsym {

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct SimpleType {
  char letter = 'A';
  int rank = 1;

  // Throws InputError unless A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2.
  bool valid() const;
  void validate() const;
  // "E6", "B4", ...
  std::string name() const;
  // Parses "<LETTER><RANK>", case-insensitive letter, and validates.
  static SimpleType parse(std::string_view text);

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

// Every valid simple type with rank <= max_rank, ordered by letter then rank.
std::vector<SimpleType> all_simple_types(int max_rank);

// Symmetrizer and Cartan matrix, without enumerating roots.
std::vector<int> symmetrizer(SimpleType type);
IntMatrix cartan_matrix(SimpleType type);

struct Root {
  std::vector<int> coeffs;  // simple-root coordinates, all >= 0
  int half_length_sq = 1;   // (alpha, alpha) / 2 in symmetrizer units

  int height() const;
  friend bool operator==(const Root&, const Root&) = default;
};

struct Weight {
  std::vector<int> fw_coords;  // lambda = sum a_i * varpi_i

  Weight() = default;
  explicit Weight(std::vector<int> coords) : fw_coords(std::move(coords)) {}

  // varpi_node (1-based) in a system of the given rank.
  static Weight fundamental(int rank, int node);
  static Weight zero(int rank);

  std::size_t size() const { return fw_coords.size(); }
  int operator[](std::size_t i) const { return fw_coords[i]; }
  bool is_zero() const;
  bool is_dominant() const;

  Weight operator+(const Weight& other) const;
  Weight operator*(int factor) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

// "[a1,a2,...]"
std::string to_string(const Weight& w);
// Comma-separated integers; throws InputError if malformed or if
// expected_rank > 0 and the entry count differs.
Weight parse_weight(std::string_view text, int expected_rank = 0);

class RootSystem {
 public:
  // Throws InputError if the type violates its rank constraint.
  explicit RootSystem(SimpleType type);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }

  // Ordered by height, then by decreasing lexicographic coefficients, so
  // the simple roots a_1..a_l come first and the highest root last.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& highest_root() const { return positive_roots_.back(); }
  Weight rho() const;

  // Index into positive_roots(), or -1 if coeffs is not a positive root.
  int find_root(const std::vector<int>& coeffs) const;

  // Fundamental-weight coordinates of a root: a = C m.
  Weight to_weight(const Root& root) const;
  // Simple-root coordinates xi(lambda) = C^{-1} a.
  std::vector<Rational> root_coordinates(const Weight& lam) const;
  // xi_k(lambda), node k is 1-based.
  Rational xi(const Weight& lam, int k) const;
  // <lambda, alpha^vee>
  Rational coroot_pairing(const Weight& lam, const Root& alpha) const;
  // Invariant form with (a_i, a_i) = 2 d_i.
  Rational inner_product(const Weight& lhs, const Weight& rhs) const;

  void check_node(int k) const;
  void check_weight(const Weight& lam) const;

 private:
  void generate_positive_roots();

  SimpleType type_;
  IntMatrix cartan_;
  std::vector<int> symmetrizer_;
  RationalMatrix cartan_inverse_;
  std::vector<Root> positive_roots_;
  std::map<std::vector<int>, int> root_index_;
};

// Closed-form |Delta_+| for the type.
int positive_root_count(SimpleType type);

// lambda_ad, the highest root in fundamental-weight coordinates.
Weight highest_root_fw(const RootSystem& rs);

inline Rational xi(const RootSystem& rs, const Weight& lam, int k) { return rs.xi(lam, k); }

inline Rational coroot_pairing(const RootSystem& rs, const Weight& lam, const Root& alpha) {
  return rs.coroot_pairing(lam, alpha);
}

// Exact Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
RationalMatrix invert(const RationalMatrix& m);

}  // namespace hsym
