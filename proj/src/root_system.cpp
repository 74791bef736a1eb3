#include "hsym/root_system.hpp"

#include "hsym/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <string_view>
#include <utility>

namespace hsym {

namespace {

using Edge = std::pair<int, int>;

// Dynkin edges (1-based) in Bourbaki numbering.
std::vector<Edge> dynkin_edges(SimpleType type) {
  const int l = type.rank;
  std::vector<Edge> edges;
  switch (type.letter) {
    case 'A':
    case 'B':
    case 'C':
    case 'F':
    case 'G':
      for (int i = 1; i < l; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      for (int i = 1; i < l - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(l - 2, l);
      break;
    case 'E':
      edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < l; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

}  // namespace

bool SimpleType::valid() const {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

void SimpleType::validate() const {
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos) {
    throw InputError(std::string("unknown Lie type letter '") + letter + "'");
  }
  if (!valid()) throw InputError("invalid rank " + std::to_string(rank) + " for type " + letter);
}

std::string SimpleType::name() const { return letter + std::to_string(rank); }

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("malformed Lie type '" + std::string(text) + "'");
  SimpleType type;
  type.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), type.rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InputError("malformed Lie type '" + std::string(text) + "'");
  }
  type.validate();
  return type;
}

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (char letter : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    for (int rank = 1; rank <= max_rank; ++rank) {
      if (SimpleType t{letter, rank}; t.valid()) out.push_back(t);
    }
  }
  return out;
}

std::vector<int> symmetrizer(SimpleType type) {
  type.validate();
  const int l = type.rank;
  std::vector<int> d(l, 1);
  switch (type.letter) {
    case 'B':
      for (int i = 0; i < l - 1; ++i) d[i] = 2;
      break;
    case 'C':
      d[l - 1] = 2;
      break;
    case 'F':
      d = {2, 2, 1, 1};
      break;
    case 'G':
      d = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

IntMatrix cartan_matrix(SimpleType type) {
  const auto d = symmetrizer(type);
  const int l = type.rank;
  IntMatrix c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  // Adjacent simple roots satisfy (a_i, a_j) = -max(d_i, d_j).
  for (auto [a, b] : dynkin_edges(type)) {
    const int i = a - 1, j = b - 1;
    const int bond = std::max(d[i], d[j]);
    c[i][j] = -bond / d[i];
    c[j][i] = -bond / d[j];
  }
  return c;
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

Weight Weight::fundamental(int rank, int node) {
  Weight w = zero(rank);
  w.fw_coords.at(node - 1) = 1;
  return w;
}

Weight Weight::zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

bool Weight::is_zero() const {
  return std::all_of(fw_coords.begin(), fw_coords.end(), [](int a) { return a == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(fw_coords.begin(), fw_coords.end(), [](int a) { return a >= 0; });
}

Weight Weight::operator+(const Weight& other) const {
  Weight out = *this;
  for (std::size_t i = 0; i < out.fw_coords.size(); ++i) out.fw_coords[i] += other.fw_coords.at(i);
  return out;
}

Weight Weight::operator*(int factor) const {
  Weight out = *this;
  for (int& a : out.fw_coords) a *= factor;
  return out;
}

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

Weight parse_weight(std::string_view text, int expected_rank) {
  std::vector<int> coords;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("malformed weight entry '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (expected_rank > 0 && static_cast<int>(coords.size()) != expected_rank) {
    throw InputError("weight '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                     " entries, expected " + std::to_string(expected_rank));
  }
  return Weight(std::move(coords));
}

RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RootSystem::RootSystem(SimpleType type)
    : type_(type), cartan_(cartan_matrix(type)), symmetrizer_(hsym::symmetrizer(type)) {
  RationalMatrix c(rank(), std::vector<Rational>(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) c[i][j] = cartan_[i][j];
  cartan_inverse_ = invert(c);
  generate_positive_roots();
}

void RootSystem::generate_positive_roots() {
  const int l = rank();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<std::vector<int>> all = layer;
  // Height induction: alpha + a_i is a root iff q_i(alpha) > 0, where
  // q_i = p_i - <alpha, a_i^vee> and p_i is the length of the a_i-string
  // below alpha (all of it lies at lower height, hence already known).
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& alpha : layer) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        std::vector<int> down = alpha;
        while (true) {
          --down[i];
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < l; ++j) pairing += alpha[j] * cartan_[i][j];
        if (p - pairing > 0) {
          std::vector<int> up = alpha;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      all.push_back(r);
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x > y;
  });
  positive_roots_.clear();
  for (auto& coeffs : all) {
    // (alpha, alpha) = sum_ij m_i m_j d_i C_ij
    int norm = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) norm += coeffs[i] * coeffs[j] * symmetrizer_[i] * cartan_[i][j];
    root_index_[coeffs] = static_cast<int>(positive_roots_.size());
    positive_roots_.push_back(Root{std::move(coeffs), norm / 2});
  }
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(rank(), 1)); }

int RootSystem::find_root(const std::vector<int>& coeffs) const {
  auto it = root_index_.find(coeffs);
  return it == root_index_.end() ? -1 : it->second;
}

Weight RootSystem::to_weight(const Root& root) const {
  std::vector<int> a(rank(), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) a[i] += cartan_[i][j] * root.coeffs[j];
  return Weight(std::move(a));
}

void RootSystem::check_node(int k) const {
  if (k < 1 || k > rank()) {
    throw InputError("node " + std::to_string(k) + " out of range 1.." + std::to_string(rank()) + " for " +
                     type_.name());
  }
}

void RootSystem::check_weight(const Weight& lam) const {
  if (static_cast<int>(lam.size()) != rank()) {
    throw InputError("weight " + to_string(lam) + " has " + std::to_string(lam.size()) + " entries, but " +
                     type_.name() + " has rank " + std::to_string(rank()));
  }
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& lam) const {
  check_weight(lam);
  std::vector<Rational> xi(rank(), Rational(0));
  for (int k = 0; k < rank(); ++k)
    for (int i = 0; i < rank(); ++i) xi[k] += cartan_inverse_[k][i] * lam[i];
  return xi;
}

Rational RootSystem::xi(const Weight& lam, int k) const {
  check_node(k);
  check_weight(lam);
  Rational out = 0;
  for (int i = 0; i < rank(); ++i) out += cartan_inverse_[k - 1][i] * lam[i];
  return out;
}

Rational RootSystem::coroot_pairing(const Weight& lam, const Root& alpha) const {
  check_weight(lam);
  Integer num = 0;
  for (int i = 0; i < rank(); ++i) num += Integer(lam[i]) * alpha.coeffs[i] * symmetrizer_[i];
  return Rational(num, Integer(alpha.half_length_sq));
}

Rational RootSystem::inner_product(const Weight& lhs, const Weight& rhs) const {
  check_weight(lhs);
  check_weight(rhs);
  // (varpi_i, varpi_j) = (C^{-1})_{ji} d_j
  Rational out = 0;
  for (int i = 0; i < rank(); ++i) {
    if (lhs[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (rhs[j] == 0) continue;
      out += cartan_inverse_[j][i] * symmetrizer_[j] * lhs[i] * rhs[j];
    }
  }
  return out;
}

int positive_root_count(SimpleType type) {
  type.validate();
  const int l = type.rank;
  switch (type.letter) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

Weight highest_root_fw(const RootSystem& rs) { return rs.to_weight(rs.highest_root()); }

}  // namespace hsym
