#include "hsym/invariants.hpp"

#include "hsym/errors.hpp"

#include <array>

namespace hsym {

namespace {

std::string subscript(int n) {
  static const std::array<const char*, 10> digits = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

std::string group_name(SimpleType type) {
  const int l = type.rank;
  switch (type.letter) {
    case 'A': return "SL(" + std::to_string(l + 1) + ")";
    case 'B': return "Spin(" + std::to_string(2 * l + 1) + ")";
    case 'C': return "Sp(" + std::to_string(l) + ",C)";
    case 'D': return "Spin(" + std::to_string(2 * l) + ")";
    default: return type.name();
  }
}

std::optional<Family> listed_family(SimpleType type, int node) {
  const int l = type.rank;
  switch (type.letter) {
    case 'A': return node >= 1 && node <= l ? std::optional(Family::AIII) : std::nullopt;
    case 'B': return node == 1 ? std::optional(Family::BI) : std::nullopt;
    case 'C': return node == l ? std::optional(Family::CI) : std::nullopt;
    case 'D':
      if (node == 1) return Family::DI;
      if (node == l && l >= 4) return Family::DIII;
      return std::nullopt;
    case 'E':
      if (l == 6 && node == 1) return Family::EIII;
      if (l == 7 && node == 7) return Family::EVII;
      return std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::AIII: return "AIII";
    case Family::BI: return "BI";
    case Family::DI: return "DI";
    case Family::DIII: return "DIII";
    case Family::CI: return "CI";
    case Family::EIII: return "EIII";
    case Family::EVII: return "EVII";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::AIII, Family::BI, Family::DI, Family::DIII, Family::CI, Family::EIII, Family::EVII}) {
    if (to_string(f) == text) return f;
  }
  throw InputError("unknown symmetric-space family '" + std::string(text) + "'");
}

std::string klein_label(SimpleType type, int node) { return group_name(type) + "/P(α" + subscript(node) + ")"; }

std::vector<HermitianSpace> hermitian_table(int max_rank) {
  std::vector<HermitianSpace> out;
  auto add = [&](char letter, int rank, int node, Family family) {
    SimpleType t{letter, rank};
    out.push_back({t, node, family, klein_label(t, node)});
  };
  for (int l = 1; l <= max_rank; ++l)
    for (int k = 1; k <= l; ++k) add('A', l, k, Family::AIII);
  for (int n = 2; n <= max_rank; ++n) add('B', n, 1, Family::BI);
  for (int n = 3; n <= max_rank; ++n) add('D', n, 1, Family::DI);
  for (int n = 4; n <= max_rank; ++n) add('D', n, n, Family::DIII);
  for (int n = 2; n <= max_rank; ++n) add('C', n, n, Family::CI);
  add('E', 6, 1, Family::EIII);
  add('E', 7, 7, Family::EVII);

  for (const auto& entry : out) {
    RootSystem rs(entry.ambient);
    if (!is_hermitian(rs, entry.node)) {
      throw std::logic_error(entry.klein_label + " fails the cominuscule check");
    }
  }
  return out;
}

bool in_hermitian_table(SimpleType type, int node) {
  type.validate();
  return listed_family(type, node).has_value();
}

bool is_hermitian(const RootSystem& rs, int k) {
  rs.check_node(k);
  return rs.highest_root().coeffs[k - 1] == 1 && rs.xi(highest_root_fw(rs), k) == 1;
}

HermitianSpace hermitian_space(SimpleType type, int node) {
  RootSystem rs(type);
  rs.check_node(node);
  if (auto family = listed_family(type, node)) return {type, node, *family, klein_label(type, node)};
  if (!is_hermitian(rs, node)) {
    throw DomainError(klein_label(type, node) + " is not a Hermitian symmetric space: g/p is not an irreducible " +
                      "P-module (alpha_" + std::to_string(node) + " has coefficient " +
                      std::to_string(rs.highest_root().coeffs[node - 1]) + " in the highest root)");
  }
  // Cominuscule but unlisted: borrow the family of a diagram-isomorphic entry.
  for (const auto& entry : hermitian_table(type.rank)) {
    if (entry.ambient.rank != type.rank) continue;
    std::vector<int> pinned(type.rank, -1);
    pinned[entry.node - 1] = node - 1;
    if (match_cartan(cartan_matrix(type), cartan_matrix(entry.ambient), pinned)) {
      return {type, node, entry.family, klein_label(type, node)};
    }
  }
  throw std::logic_error("cominuscule node " + klein_label(type, node) + " matches no listed space");
}

Integer h0_bbw(const RootSystem& rs, const Parabolic& p, const Weight& lam) {
  rs.check_weight(lam);
  if (!is_dominant_for_parabolic(lam, p)) {
    throw InputError("weight " + to_string(lam) + " is not dominant for " + p.notation() +
                     "; the homogeneous bundle E_lambda is undefined");
  }
  if (!lam.is_dominant()) return 0;
  return weyl_dim_g(rs, lam).value;
}

Rational c1_ratio(const RootSystem& rs, const Parabolic& p, const Weight& lam) {
  if (!p.is_maximal()) {
    throw InputError("c1 ratio needs a maximal parabolic, got " + p.notation());
  }
  const int k = p.sigma.front();
  const LeviData ld = levi(rs, p);
  const Integer rank = weyl_dim_levi(rs, ld, lam).value;
  return Rational(rank) * rs.xi(lam, k) / rs.xi(Weight::fundamental(rs.rank(), k), k);
}

Rational j_general(const Integer& m, const Integer& h0, const Integer& r, const Rational& deg_e,
                   const Rational& deg_l) {
  if (m < 1) throw InputError("dim X must be positive");
  if (r < 1) throw InputError("bundle rank must be positive");
  if (deg_l == 0) throw InputError("<c1(L)^m, [X]> must be nonzero");
  if (h0 <= r) {
    throw UndefinedJError("J is undefined when h0 (" + h0.str() + ") <= rank (" + r.str() +
                          "): E must be globally generated and nontrivial");
  }
  return Rational(2 * m * h0) * deg_e / (Rational(r * (h0 - r)) * deg_l);
}

HermitianGeometry::HermitianGeometry(HermitianSpace space)
    : space_(std::move(space)),
      rs_(space_.ambient),
      parabolic_(Parabolic::maximal(space_.ambient, space_.node)),
      levi_(levi(rs_, parabolic_)),
      lambda_ad_(highest_root_fw(rs_)),
      xi_ad_(rs_.xi(lambda_ad_, space_.node)) {
  if (!is_hermitian(rs_, space_.node)) {
    throw DomainError(space_.klein_label + " is not a Hermitian symmetric space");
  }
}

std::vector<Rational> HermitianGeometry::pruning_coefficients() const {
  std::vector<Rational> out;
  for (int i = 1; i <= rs_.rank(); ++i) out.push_back(2 * rs_.xi(Weight::fundamental(rs_.rank(), i), space_.node) / xi_ad_);
  return out;
}

Rational HermitianGeometry::pruning_bound(const Weight& lam) const { return 2 * rs_.xi(lam, space_.node) / xi_ad_; }

BundleReport HermitianGeometry::describe(const Weight& lam) const {
  rs_.check_weight(lam);
  if (!is_dominant_for_parabolic(lam, parabolic_)) {
    throw InputError("weight " + to_string(lam) + " is not dominant for " + parabolic_.notation() +
                     "; the homogeneous bundle E_lambda is undefined");
  }
  BundleReport report{space_, lam, 0, 0, 0, xi_ad_, 0, std::nullopt};
  report.rank = weyl_dim_levi(rs_, levi_, lam).value;
  report.h0 = h0_bbw(rs_, parabolic_, lam);
  report.xi_k_lam = rs_.xi(lam, space_.node);
  report.c1_ratio = Rational(report.rank) * report.xi_k_lam /
                    rs_.xi(Weight::fundamental(rs_.rank(), space_.node), space_.node);
  if (!lam.is_zero() && lam.is_dominant()) {
    if (report.h0 <= report.rank) {
      throw std::logic_error("h0 <= rank for nontrivial dominant weight " + to_string(lam));
    }
    report.j_value = Rational(2 * report.h0, report.h0 - report.rank) * report.xi_k_lam / xi_ad_;
  }
  return report;
}

BundleReport HermitianGeometry::j_hom(const Weight& lam) const {
  rs_.check_weight(lam);
  if (lam.is_zero()) {
    throw UndefinedJError("J(E_lambda, -K_X) needs a nontrivial dominant weight; lambda = 0 gives the trivial "
                          "line bundle");
  }
  if (!lam.is_dominant()) {
    throw DomainError("weight " + to_string(lam) + " is not dominant for G, so H^0(X, E_lambda) = 0 by "
                      "Bott-Borel-Weil and J is undefined");
  }
  return describe(lam);
}

}  // namespace hsym
