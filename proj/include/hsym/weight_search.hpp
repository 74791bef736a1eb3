#pragma once

// Exact minimization of J(E_lambda, -K_X) over nontrivial dominant weights.
//
// J(E_lambda, -K_X) > 2 xi_k(lambda) / xi_k(lambda_ad) because
// dim W / (dim W - dim V) > 1, and every coefficient of the right-hand side
// on the fundamental weights is positive. Once an incumbent value B is known,
// only the finitely many weights with 2 xi_k(lambda) / xi_k(lambda_ad) < B
// can improve on it or tie with it.

#include "hsym/invariants.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hsym {

struct ExaminedCandidate {
  Weight lam;
  Rational bound;  // 2 xi_k(lambda) / xi_k(lambda_ad)
  Rational j;

  friend bool operator==(const ExaminedCandidate&, const ExaminedCandidate&) = default;
};

struct SearchOutcome {
  HermitianSpace space;
  Rational best_j;
  std::vector<Weight> minimizers;  // lexicographic by coefficient vector
  std::size_t candidates_examined = 0;
  // Incumbent in force when the candidate region was fixed; every weight
  // outside the region has pruning bound >= this value.
  Rational pruning_bound_used;
  Weight incumbent_seed;  // best fundamental weight
  std::vector<Rational> pruning_coefficients;
  std::vector<ExaminedCandidate> examined;  // evaluation order

  friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;
};

struct SearchOptions {
  // Optional external upper bound combined with the fundamental-weight seed.
  std::optional<Rational> incumbent;
  // Worker threads for candidate evaluation; results do not depend on it.
  unsigned threads = 1;
  // Candidates evaluated between incumbent updates.
  std::size_t block_size = 64;
};

SearchOutcome minimize_j(const HermitianGeometry& geometry, const SearchOptions& options = {});
SearchOutcome minimize_j(const HermitianSpace& space, const SearchOptions& options = {});

// Every nonzero dominant weight with pruning bound < limit, ordered by
// (bound, coefficients).
std::vector<Weight> enumerate_below(const HermitianGeometry& geometry, const Rational& limit);

// True iff lambda was examined, or its pruning bound is >= best_j.
bool certificate_covers(const HermitianGeometry& geometry, const SearchOutcome& outcome, const Weight& lam);

}  // namespace hsym
