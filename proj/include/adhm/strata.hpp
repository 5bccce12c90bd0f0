#pragma once

#include <cstddef>
#include <vector>

#include "adhm/datum.hpp"
#include "adhm/rng.hpp"

namespace adhm {

// Commuting pair with rational spectrum: P diagonal with distinct entries,
// Q a random polynomial in P.
CommutingPair sample_commuting(std::size_t n, Rng& rng);

// Random stable solution of size (r, c) on the J = 0 slice: A diagonal with
// distinct entries, B a polynomial in A (so [A, B] = 0), I resampled until
// the reachability matrix has full rank (cap 100 draws; r >= 1 required).
AdhmDatum sample_stable(std::size_t r, std::size_t c, Rng& rng);

// The linear map (a, b, j) |-> A1 b - b A3 + a B3 - B1 a + I1 j, where
// (A1, B1, I1) come from a stable datum x1 of size (r, s) and (A3, B3) is a
// commuting pair of size m. This is exactly the middle block constraint
// satisfied by the off-diagonal blocks of a solution assembled from the two
// pieces. Rows: the s x m output, row-major; columns: blocks (a, b, j),
// each row-major. Surjective whenever x1 is stable (throws if it is not).
Matrix fiber_map(const AdhmDatum& x1, const CommutingPair& q);

struct StratumSample {
  AdhmDatum x;
  std::size_t s = 0;  // intended dim of the stabilizing subspace
};

// Random solution whose stabilizing subspace has dimension exactly s:
// stable (r, s) piece in the top-left corner, commuting pair of size c - s
// in the bottom-right, off-diagonal blocks drawn from the kernel of
// fiber_map with integer coefficients in [-5, 5].
StratumSample sample_stratum(std::size_t r, std::size_t c, std::size_t s, Rng& rng);

struct DimensionAudit {
  std::size_t r = 0, c = 0, s = 0;
  long long formula = 0;          // 2rc + c^2 - (r - 1)(c - s)
  long long parametrization = 0;  // base Grassmannian + stable piece + commuting pair + fiber
  bool consistent = false;
};

DimensionAudit stratum_dimension(std::size_t r, std::size_t c, std::size_t s);

// Every (r, c, s) with 1 <= r <= rmax, 0 <= s <= c <= cmax, ordered
// lexicographically.
std::vector<DimensionAudit> audit_dimensions(std::size_t rmax, std::size_t cmax);

}  // namespace adhm
