#pragma once

#include "hsym/parabolic.hpp"
#include "hsym/rational.hpp"
#include "hsym/root_system.hpp"

#include <cstdint>

namespace hsym {

enum class DimContext { full_group, levi };

struct DimResult {
  Integer value;
  DimContext context = DimContext::full_group;
  Weight lam;
};

// dim W_lambda by the Weyl dimension formula. Throws InputError unless
// lambda is dominant for G.
DimResult weyl_dim_g(const RootSystem& rs, const Weight& lam);

// dim V_lambda for the Levi factor of the parabolic: the Weyl product over
// Levi positive roots with rho_L = sum of the uncrossed fundamental weights.
// Coefficients of lambda on crossed nodes are ignored. Throws InputError
// unless lambda is dominant for the parabolic.
DimResult weyl_dim_levi(const RootSystem& rs, const LeviData& ld, const Weight& lam);

struct FreudenthalLimits {
  int max_rank = 7;
  std::int64_t max_dimension = 100000;
};

// Independent dimension oracle: sums weight multiplicities obtained from
// Freudenthal's recursion. Throws ResourceError when a limit is exceeded.
DimResult freudenthal_dim(const RootSystem& rs, const Weight& lam, FreudenthalLimits limits = {});

}  // namespace hsym
