#pragma once

#include "hsym/root_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsym {

// p(Sigma): the parabolic containing the negative Borel whose Levi factor
// is generated by the simple roots off the crossed nodes Sigma.
struct Parabolic {
  SimpleType ambient;
  std::vector<int> sigma;  // crossed nodes, 1-based, sorted, unique

  // Sorts and deduplicates sigma; throws InputError if sigma is empty or a
  // node is out of range.
  Parabolic(SimpleType ambient, std::vector<int> sigma);

  static Parabolic maximal(SimpleType ambient, int node) { return Parabolic(ambient, {node}); }

  bool is_maximal() const { return sigma.size() == 1; }
  bool crosses(int node) const;

  // "E6:x1", "A5:x2x4"
  std::string notation() const;
  // Accepts "E6:x1", "A5:x2x4", "A5:x2,x4".
  static Parabolic parse(std::string_view text);

  friend bool operator==(const Parabolic&, const Parabolic&) = default;
};

struct LeviComponent {
  SimpleType type;
  // nodes[j] is the ambient node (1-based) playing the role of node j + 1
  // of `type` in Bourbaki numbering.
  std::vector<int> nodes;
};

struct LeviData {
  Parabolic parabolic;
  std::vector<Root> levi_positive_roots;  // ambient order preserved
  std::vector<LeviComponent> components;  // ordered by smallest ambient node
  int dim_x = 0;                          // |Delta_+| - |Delta_+(Levi)|
};

// Throws InputError if p.ambient differs from rs.type().
LeviData levi(const RootSystem& rs, const Parabolic& p);

// Identifies the simple type of a connected Cartan matrix. Returns the type
// together with the relabeling perm such that
// sub[perm[i]][perm[j]] == cartan_matrix(type)[i][j] (perm 0-based).
// Ties at equal rank (A3 = D3, B2 = C2) go to the earlier letter.
std::optional<std::pair<SimpleType, std::vector<int>>> identify_cartan(const IntMatrix& sub);

// First (lexicographic) permutation perm with lhs[perm[i]][perm[j]] == rhs[i][j].
// Entries of `pinned` that are >= 0 force perm[i] = pinned[i].
std::optional<std::vector<int>> match_cartan(const IntMatrix& lhs, const IntMatrix& rhs,
                                             const std::vector<int>& pinned = {});

// m_i >= 0 for every uncrossed node i.
bool is_dominant_for_parabolic(const Weight& lam, const Parabolic& p);
// m_i >= 0 for every node.
bool is_dominant_for_g(const Weight& lam);

}  // namespace hsym
