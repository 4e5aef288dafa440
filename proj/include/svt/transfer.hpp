#pragma once

// The multiprojective-affine-projective method: push biprojective schemes
// into the plane through phi([s0:s1],[t0:t1]) = [s0 t0 : s1 t0 : s0 t1] and
// verify the Hilbert-function equality
//   dim L_{a,b}(X) = dim L_{a+b}(phi(X) + a Q1 + b Q2).

#include "svt/schemes.hpp"

namespace svt {

struct PhiUndefined : std::runtime_error {
    PhiUndefined() : std::runtime_error("phi is undefined at a support (s0 = 0 or t0 = 0)") {}
};

inline PlanePoint q1_point() { return PlanePoint::make({Fp(), Fp(1), Fp()}); }  // [0:1:0]
inline PlanePoint q2_point() { return PlanePoint::make({Fp(), Fp(), Fp(1)}); }  // [0:0:1]

PlanePoint phi_point(const BiPoint& p);

// image of one (3,2)-point: support phi(P), direction line transported from
// the standard-position computation; throws PhiUndefined off phi's domain or
// when the transported direction degenerates through Q1 or Q2
ThreeTwoP2 push_32(const ThreeTwoP1P1& y, int a, int b);

// phi(X) plus a*Q1 + b*Q2
SchemeSpec push_scheme(const SchemeSpec& x, int a, int b);

struct TransferInstance {
    SchemeSpec source;  // biprojective
    int a = 0, b = 0;
    SchemeSpec target;  // plane, degree a+b
};

TransferInstance make_transfer_instance(const SchemeSpec& source, int a, int b);

// dim L_{a,b}(source) == dim L_{a+b}(target) over seeded random sources of
// s (3,2)-points; samples off phi's domain are redrawn (bounded retries)
bool verify_transfer(int a, int b, int s, int trials, std::uint64_t seed);

// random biprojective scheme of s (3,2)-points inside phi's domain
SchemeSpec random_32_scheme_in_domain(int s, Rng& rng, int a, int b);

}  // namespace svt
