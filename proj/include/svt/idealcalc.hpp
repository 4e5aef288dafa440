#pragma once

// Bounded-degree calculus of homogeneous ideals given by generator lists:
// degree pieces, sums, intersections, colon ideals, membership. This is the
// brute-force oracle against which the condition-row machinery is checked.

#include "svt/schemes.hpp"

namespace svt {

struct BasisMismatch : std::runtime_error {
    BasisMismatch() : std::runtime_error("subspace bases live in different degrees") {}
};

struct GeneratorIdeal {
    Ambient ambient = Ambient::Plane;
    std::vector<PolyVec> gens;  // each carries its (bi)degree through its basis
};

struct SubspaceBasis {
    MonomialBasis basis;
    Mat mat;  // rref, rows independent

    std::size_t dim() const { return mat.nrows(); }
};

SubspaceBasis make_subspace(MonomialBasis basis, const Mat& rows);  // rref-normalizes
SubspaceBasis full_space(const MonomialBasis& basis);
SubspaceBasis zero_space(const MonomialBasis& basis);

// span of all monomial multiples of the generators landing in the target
// degree; generators of larger degree contribute nothing
SubspaceBasis ideal_degree_piece(const GeneratorIdeal& ideal, const MonomialBasis& target);

SubspaceBasis piece_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis piece_intersect(const SubspaceBasis& a, const SubspaceBasis& b);
bool piece_equal(const SubspaceBasis& a, const SubspaceBasis& b);
bool piece_contains(const SubspaceBasis& big, const SubspaceBasis& small);

// { f of the target degree : f*g lies in the ideal's piece at target+deg(g) }
SubspaceBasis piece_colon(const GeneratorIdeal& ideal, const PolyVec& g,
                          const MonomialBasis& target);

// the component's homogeneous ideal; biprojective components need the
// bidegree that fixes their direction form
GeneratorIdeal component_ideal(const SchemeComponent& c);
GeneratorIdeal component_ideal(const SchemeComponent& c, int a, int b);

// intersection of the per-component ideal pieces at the target degree
SubspaceBasis scheme_ideal_piece(const SchemeSpec& x, const MonomialBasis& target);

// the two independent linear forms vanishing at a plane point
std::pair<PolyVec, PolyVec> point_ideal_forms(const PlanePoint& p);

}  // namespace svt
