#include "hsym/weight_search.hpp"

#include "hsym/errors.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace hsym {

std::vector<Weight> enumerate_below(const HermitianGeometry& geometry, const Rational& limit) {
  const auto coeffs = geometry.pruning_coefficients();
  const int l = static_cast<int>(coeffs.size());
  for (const auto& c : coeffs) {
    if (c <= 0) throw std::logic_error("non-positive pruning coefficient; the candidate region is unbounded");
  }
  std::vector<std::pair<Rational, Weight>> found;
  std::vector<int> a(l, 0);
  std::function<void(int, Rational)> recurse = [&](int i, Rational partial) {
    if (i == l) {
      Weight w(a);
      if (!w.is_zero()) found.emplace_back(partial, std::move(w));
      return;
    }
    for (a[i] = 0; partial + coeffs[i] * a[i] < limit; ++a[i]) recurse(i + 1, partial + coeffs[i] * a[i]);
    a[i] = 0;
  };
  recurse(0, Rational(0));
  std::sort(found.begin(), found.end());
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& [bound, w] : found) out.push_back(std::move(w));
  return out;
}

SearchOutcome minimize_j(const HermitianGeometry& geometry, const SearchOptions& options) {
  const RootSystem& rs = geometry.roots();
  const int l = rs.rank();
  SearchOutcome out;
  out.space = geometry.space();
  out.pruning_coefficients = geometry.pruning_coefficients();

  // Seed with the best fundamental weight (ties: smallest coefficient vector).
  std::optional<Rational> seed_j;
  for (int i = l; i >= 1; --i) {
    Weight w = Weight::fundamental(l, i);
    Rational j = *geometry.j_hom(w).j_value;
    if (!seed_j || j < *seed_j) {
      seed_j = j;
      out.incumbent_seed = w;
    }
  }
  Rational incumbent = *seed_j;
  if (options.incumbent && *options.incumbent < incumbent) incumbent = *options.incumbent;
  out.pruning_bound_used = incumbent;

  const auto candidates = enumerate_below(geometry, incumbent);
  const std::size_t block = std::max<std::size_t>(1, options.block_size);
  const unsigned threads = std::max(1u, options.threads);

  std::optional<Rational> best;
  for (std::size_t start = 0; start < candidates.size(); start += block) {
    // Block membership is fixed by the incumbent at the block boundary, so
    // the examined set is independent of the thread count.
    std::vector<ExaminedCandidate> batch;
    for (std::size_t i = start; i < std::min(candidates.size(), start + block); ++i) {
      Rational bound = geometry.pruning_bound(candidates[i]);
      if (bound < incumbent) batch.push_back({candidates[i], bound, Rational(0)});
    }
    if (batch.empty()) break;  // bounds are sorted, nothing later can pass
    auto evaluate = [&](std::size_t worker) {
      for (std::size_t i = worker; i < batch.size(); i += threads) batch[i].j = *geometry.j_hom(batch[i].lam).j_value;
    };
    if (threads == 1 || batch.size() == 1) {
      evaluate(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(evaluate, t);
    }
    for (auto& cand : batch) {
      if (!best || cand.j < *best) {
        best = cand.j;
        out.minimizers.clear();
      }
      if (cand.j == *best) out.minimizers.push_back(cand.lam);
      if (cand.j < incumbent) incumbent = cand.j;
      out.examined.push_back(std::move(cand));
    }
  }
  if (!best) {
    throw InputError("no nontrivial dominant weight on " + out.space.klein_label + " has J below the supplied incumbent " +
                     to_string(incumbent));
  }
  out.best_j = *best;
  out.candidates_examined = out.examined.size();
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

SearchOutcome minimize_j(const HermitianSpace& space, const SearchOptions& options) {
  return minimize_j(HermitianGeometry(space), options);
}

bool certificate_covers(const HermitianGeometry& geometry, const SearchOutcome& outcome, const Weight& lam) {
  for (const auto& cand : outcome.examined) {
    if (cand.lam == lam) return true;
  }
  return geometry.pruning_bound(lam) >= outcome.best_j;
}

}  // namespace hsym
