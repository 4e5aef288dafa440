#pragma once

// Linear-system dimensions on the plane, closed-form expected values and the
// per-lemma verification suite. The scheme of interest is
//   X_{a,b;s} = a*Q1 + b*Q2 + s generic (3,2)-points
// at degree a+b, with Q1 = [0:1:0], Q2 = [0:0:1].

#include "svt/schemes.hpp"

namespace svt {

enum class LinSysStatus { as_expected, deficient_candidate, superabundant_anomaly };

const char* to_string(LinSysStatus s);

struct LinSysReport {
    Ambient ambient = Ambient::Plane;
    int d = 0;      // plane degree, or a+b echo for biprojective
    int a = 0, b = 0;
    std::string scheme_summary;
    int basis_size = 0;
    int rank = 0;
    int dim_linsys = 0;   // basis_size - rank
    int virtual_dim = 0;  // basis_size - total scheme length
    int expected_dim = 0; // max(0, virtual_dim)
    LinSysStatus status = LinSysStatus::as_expected;
};

LinSysReport linsys_dim(const SchemeSpec& x, int d);
LinSysReport linsys_dim(const SchemeSpec& x, int a, int b);

// s1 = floor((a+1)(b+1)/5), s2 = ceil((a+1)(b+1)/5)
std::pair<int, int> critical_s(int a, int b);

// a*Q1 + b*Q2 + s generic (3,2)-points with generic directions
SchemeSpec corner_scheme(int a, int b, int s, Rng& rng);

// Lemma checks; each samples `trials` seeded generic instances per cell and
// certifies the cell when some sample attains the expected dimension (the
// dimension can only rise under specialization).
bool check_b1(int amax, int trials, std::uint64_t seed);
bool check_b2(int amax, int trials, std::uint64_t seed);
bool check_small_cases(int trials, std::uint64_t seed);
bool check_main_plane(int amax, int bmax, int trials, std::uint64_t seed);

// smallest linear-system dimension over the trials (the generic value)
int generic_linsys_dim(int a, int b, int s, int d, int trials, std::uint64_t seed);

}  // namespace svt
