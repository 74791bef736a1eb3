#include "hsym/rep_dimension.hpp"

#include "hsym/errors.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hsym {

namespace {

// prod over roots of (lam + shift, alpha) / (shift, alpha). The half-length
// of alpha cancels in each ratio, so only sum_i c_i m_i d_i is needed.
Integer weyl_product(const RootSystem& rs, const std::vector<Root>& roots, const Weight& lam, const Weight& shift) {
  Integer num = 1, den = 1;
  const auto& d = rs.symmetrizer();
  for (const Root& alpha : roots) {
    Integer top = 0, bottom = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      const int w = alpha.coeffs[i] * d[i];
      top += Integer(lam[i] + shift[i]) * w;
      bottom += Integer(shift[i]) * w;
    }
    num *= top;
    den *= bottom;
  }
  if (den == 0 || num % den != 0) {
    throw std::logic_error("Weyl dimension product " + num.str() + "/" + den.str() + " is not an integer");
  }
  return num / den;
}

}  // namespace

DimResult weyl_dim_g(const RootSystem& rs, const Weight& lam) {
  rs.check_weight(lam);
  if (!lam.is_dominant()) {
    throw InputError("weight " + to_string(lam) + " is not dominant for " + rs.type().name());
  }
  return {weyl_product(rs, rs.positive_roots(), lam, rs.rho()), DimContext::full_group, lam};
}

DimResult weyl_dim_levi(const RootSystem& rs, const LeviData& ld, const Weight& lam) {
  rs.check_weight(lam);
  const Parabolic& p = ld.parabolic;
  if (!is_dominant_for_parabolic(lam, p)) {
    throw InputError("weight " + to_string(lam) + " is not dominant for the parabolic " + p.notation());
  }
  Weight projected = lam;
  Weight rho_levi = Weight::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (p.crosses(i + 1)) {
      projected.fw_coords[i] = 0;
    } else {
      rho_levi.fw_coords[i] = 1;
    }
  }
  return {weyl_product(rs, ld.levi_positive_roots, projected, rho_levi), DimContext::levi, lam};
}

DimResult freudenthal_dim(const RootSystem& rs, const Weight& lam, FreudenthalLimits limits) {
  rs.check_weight(lam);
  if (!lam.is_dominant()) {
    throw InputError("weight " + to_string(lam) + " is not dominant for " + rs.type().name());
  }
  if (rs.rank() > limits.max_rank) {
    throw ResourceError("Freudenthal oracle limited to rank <= " + std::to_string(limits.max_rank));
  }
  // Refusal only; the multiplicities below never consult the Weyl formula.
  if (weyl_dim_g(rs, lam).value > limits.max_dimension) {
    throw ResourceError("Freudenthal oracle limited to dimension <= " + std::to_string(limits.max_dimension));
  }
  const int l = rs.rank();

  // Integer-scaled invariant form on fundamental-weight coordinates.
  Integer common = 1;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const Integer den = denominator_of(rs.cartan_inverse()[j][i]);
      common = common / boost::multiprecision::gcd(common, den) * den;
    }
  std::vector<std::vector<Integer>> form(l, std::vector<Integer>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      form[i][j] = to_integer(rs.cartan_inverse()[j][i] * rs.symmetrizer()[j] * Rational(common));
  auto pair = [&](const std::vector<int>& x, const std::vector<int>& y) {
    Integer s = 0;
    for (int i = 0; i < l; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < l; ++j)
        if (y[j] != 0) s += form[i][j] * x[i] * y[j];
    }
    return s;
  };

  std::vector<std::vector<int>> roots_fw;
  std::vector<int> heights;
  for (const Root& alpha : rs.positive_roots()) {
    roots_fw.push_back(rs.to_weight(alpha).fw_coords);
    heights.push_back(alpha.height());
  }
  std::vector<std::vector<int>> simple_fw(l, std::vector<int>(l));
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) simple_fw[j][i] = rs.cartan()[i][j];

  std::vector<int> top = lam.fw_coords;
  std::vector<int> top_rho = top;
  for (int& a : top_rho) a += 1;
  const Integer top_norm = pair(top_rho, top_rho);

  // Integer-scaled inverse Cartan matrix for the dominance-order test.
  std::vector<std::vector<Integer>> inv_scaled(l, std::vector<Integer>(l));
  for (int k = 0; k < l; ++k)
    for (int i = 0; i < l; ++i) inv_scaled[k][i] = to_integer(rs.cartan_inverse()[k][i] * Rational(common));

  // mu (in the root-lattice coset of lam) is a weight of V(lam) iff its
  // dominant Weyl conjugate lies below lam.
  auto is_weight = [&](std::vector<int> mu) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < l; ++i) {
        if (mu[i] >= 0) continue;
        const int a = mu[i];
        for (int j = 0; j < l; ++j) mu[j] -= a * simple_fw[i][j];
        changed = true;
      }
    }
    for (int k = 0; k < l; ++k) {
      Integer diff = 0;
      for (int i = 0; i < l; ++i) diff += inv_scaled[k][i] * (top[i] - mu[i]);
      if (diff < 0) return false;
    }
    return true;
  };

  // Multiplicities keyed by weight, per depth (height of lam - mu).
  std::vector<std::map<std::vector<int>, Integer>> levels;
  levels.push_back({{top, Integer(1)}});
  Integer total = 1;
  auto lookup = [&](const std::vector<int>& mu, int depth) -> Integer {
    auto it = levels[depth].find(mu);
    return it == levels[depth].end() ? Integer(0) : it->second;
  };

  for (int depth = 1;; ++depth) {
    std::map<std::vector<int>, Integer> current;
    for (const auto& [parent, parent_mult] : levels[depth - 1]) {
      for (int j = 0; j < l; ++j) {
        std::vector<int> mu = parent;
        for (int i = 0; i < l; ++i) mu[i] -= simple_fw[j][i];
        if (current.count(mu) || !is_weight(mu)) continue;
        Integer sum = 0;
        for (std::size_t r = 0; r < roots_fw.size(); ++r) {
          // alpha-strings through a weight are unbroken: stop at the first gap.
          std::vector<int> shifted = mu;
          for (int k = 1; depth - k * heights[r] >= 0; ++k) {
            for (int i = 0; i < l; ++i) shifted[i] += roots_fw[r][i];
            const Integer m = lookup(shifted, depth - k * heights[r]);
            if (m == 0) break;
            sum += m * pair(shifted, roots_fw[r]);
          }
        }
        std::vector<int> mu_rho = mu;
        for (int& a : mu_rho) a += 1;
        const Integer gap = top_norm - pair(mu_rho, mu_rho);
        if (gap <= 0 || (2 * sum) % gap != 0) throw std::logic_error("non-integral Freudenthal multiplicity");
        const Integer m = 2 * sum / gap;
        if (m <= 0) throw std::logic_error("non-positive multiplicity for a weight");
        total += m;
        current.emplace(std::move(mu), m);
        if (total > limits.max_dimension) {
          throw ResourceError("Freudenthal oracle exceeded dimension limit " + std::to_string(limits.max_dimension));
        }
      }
    }
    if (current.empty()) break;
    levels.push_back(std::move(current));
  }
  return {total, DimContext::full_group, lam};
}

}  // namespace hsym
