#pragma once

// Terracini rank engine for the secant varieties of the tangential variety
// of the Segre-Veronese surface of bidegree (a,b): stack the five tangent
// rows of s random (3,2)-points and take the rank over F_p. A full-rank
// sample certifies non-defectivity of the generic scheme by semicontinuity;
// a deficient value across all trials is only a defect candidate.

#include "svt/schemes.hpp"

namespace svt {

struct DefectReport {
    int a = 0, b = 0, s = 0;
    int expected_hf = 0;  // min{(a+1)(b+1), 5s}
    int computed_hf = 0;  // max over trials of the Terracini rank
    int defect = 0;       // expected - computed, always >= 0
    int trials = 0;
    std::uint64_t seed = 0;
};

DefectReport secant_rank(int a, int b, int s, int trials, std::uint64_t seed);

// all cells 1 <= b <= a <= amax (b <= bmax), ab > 1, 1 <= s <= s2(a,b),
// sorted by (a, b, s); cell seeds derive from the master seed, so the table
// is independent of evaluation order
std::vector<DefectReport> defect_table(int amax, int bmax, int trials, std::uint64_t seed);

// (i) dim [p^3 + (direction)^2]_{a,b} == (a+1)(b+1) - 5,
// (ii) that piece pairs to zero with all five tangent rows,
// (iii) p^3 piece <= perp of the rows <= p^2 piece
bool verify_tangent_apolarity(int a, int b, int trials, std::uint64_t seed);

int expected_dim_secant(int a, int b, int s);

}  // namespace svt
