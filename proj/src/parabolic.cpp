#include "hsym/parabolic.hpp"

#include "hsym/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace hsym {

Parabolic::Parabolic(SimpleType ambient_type, std::vector<int> crossed)
    : ambient(ambient_type), sigma(std::move(crossed)) {
  ambient.validate();
  if (sigma.empty()) throw InputError("parabolic " + ambient.name() + " needs at least one crossed node");
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  for (int k : sigma) {
    if (k < 1 || k > ambient.rank) {
      throw InputError("crossed node " + std::to_string(k) + " out of range 1.." + std::to_string(ambient.rank) +
                       " for " + ambient.name());
    }
  }
}

bool Parabolic::crosses(int node) const { return std::binary_search(sigma.begin(), sigma.end(), node); }

std::string Parabolic::notation() const {
  std::string s = ambient.name() + ":";
  for (int k : sigma) s += "x" + std::to_string(k);
  return s;
}

Parabolic Parabolic::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("expected crossed-node notation like 'E6:x1', got '" + std::string(text) + "'");
  }
  SimpleType type = SimpleType::parse(text.substr(0, colon));
  std::vector<int> nodes;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    if (rest.front() == ',') {
      rest.remove_prefix(1);
      continue;
    }
    if (rest.front() != 'x' && rest.front() != 'X') {
      throw InputError("malformed crossed-node list in '" + std::string(text) + "'");
    }
    rest.remove_prefix(1);
    int k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc{}) throw InputError("malformed crossed-node list in '" + std::string(text) + "'");
    nodes.push_back(k);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  }
  return Parabolic(type, std::move(nodes));
}

std::optional<std::vector<int>> match_cartan(const IntMatrix& lhs, const IntMatrix& rhs,
                                             const std::vector<int>& pinned) {
  const std::size_t n = lhs.size();
  if (rhs.size() != n) return std::nullopt;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  // Assign perm[i] for i = 0, 1, ... checking all pairs among assigned nodes.
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      if (i < pinned.size() && pinned[i] >= 0 && static_cast<std::size_t>(pinned[i]) != cand) continue;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const std::size_t pj = j == i ? cand : static_cast<std::size_t>(perm[j]);
        ok = lhs[cand][pj] == rhs[i][j] && lhs[pj][cand] == rhs[j][i];
      }
      if (!ok) continue;
      used[cand] = true;
      perm[i] = static_cast<int>(cand);
      if (extend(i + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

std::optional<std::pair<SimpleType, std::vector<int>>> identify_cartan(const IntMatrix& sub) {
  const int r = static_cast<int>(sub.size());
  for (char letter : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    SimpleType candidate{letter, r};
    try {
      candidate.validate();
    } catch (const InputError&) {
      continue;
    }
    if (auto perm = match_cartan(sub, cartan_matrix(candidate))) return std::pair{candidate, *perm};
  }
  return std::nullopt;
}

LeviData levi(const RootSystem& rs, const Parabolic& p) {
  if (p.ambient != rs.type()) {
    throw InputError("parabolic " + p.notation() + " does not belong to " + rs.type().name());
  }
  LeviData out{p, {}, {}, 0};
  for (const Root& alpha : rs.positive_roots()) {
    bool supported_off_sigma = true;
    for (int k : p.sigma) supported_off_sigma = supported_off_sigma && alpha.coeffs[k - 1] == 0;
    if (supported_off_sigma) out.levi_positive_roots.push_back(alpha);
  }
  out.dim_x = static_cast<int>(rs.positive_roots().size() - out.levi_positive_roots.size());

  // Connected components of the uncrossed part of the Dynkin diagram.
  const int l = rs.rank();
  std::vector<int> component_of(l, -1);
  std::vector<std::vector<int>> groups;
  for (int start = 0; start < l; ++start) {
    if (p.crosses(start + 1) || component_of[start] >= 0) continue;
    std::vector<int> group;
    std::vector<int> stack{start};
    component_of[start] = static_cast<int>(groups.size());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      group.push_back(v);
      for (int w = 0; w < l; ++w) {
        if (w == v || p.crosses(w + 1) || component_of[w] >= 0 || rs.cartan()[v][w] == 0) continue;
        component_of[w] = component_of[v];
        stack.push_back(w);
      }
    }
    std::sort(group.begin(), group.end());
    groups.push_back(std::move(group));
  }

  for (const auto& group : groups) {
    const std::size_t r = group.size();
    IntMatrix sub(r, std::vector<int>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub[i][j] = rs.cartan()[group[i]][group[j]];
    auto identified = identify_cartan(sub);
    if (!identified) throw std::logic_error("unidentifiable Levi component in " + p.notation());
    LeviComponent comp{identified->first, {}};
    for (int idx : identified->second) comp.nodes.push_back(group[idx] + 1);
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool is_dominant_for_parabolic(const Weight& lam, const Parabolic& p) {
  if (static_cast<int>(lam.size()) != p.ambient.rank) {
    throw InputError("weight " + to_string(lam) + " does not match rank of " + p.ambient.name());
  }
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (!p.crosses(static_cast<int>(i) + 1) && lam[i] < 0) return false;
  }
  return true;
}

bool is_dominant_for_g(const Weight& lam) { return lam.is_dominant(); }

}  // namespace hsym
