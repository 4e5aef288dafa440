#pragma once

// Monomial bases for the graded and bigraded coordinate rings, and
// coefficient vectors relative to them.
//
// Plane(d): monomials z0^e0 z1^e1 z2^e2 with e0+e1+e2 = d, listed in
// graded-lexicographic order (e0 descending, then e1 descending).
// Biprojective(a,b): monomials x0^i0 x1^i1 y0^j0 y1^j1 with i0+i1 = a,
// j0+j1 = b, listed with i0 descending then j0 descending. Plain monomials,
// no binomial scaling; ranks are invariant under diagonal rescaling anyway.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "svt/field.hpp"
#include "svt/matrix.hpp"

namespace svt {

enum class Ambient { Plane, Biprojective };

// Plane monomials use e[0..2] with e[3] == 0; biprojective use all four
// as (i0, i1, j0, j1).
using Exps = std::array<int, 4>;

class MonomialBasis {
  public:
    static MonomialBasis plane(int d);
    static MonomialBasis biprojective(int a, int b);

    Ambient ambient() const { return ambient_; }
    int degree() const { return d_; }                      // Plane only
    std::pair<int, int> bidegree() const { return {a_, b_}; }  // Biprojective only
    std::size_t size() const { return exps_.size(); }
    const Exps& exponent(std::size_t i) const { return exps_[i]; }
    std::size_t index_of(const Exps& e) const;  // throws if not a basis monomial

    bool operator==(const MonomialBasis& o) const {
        return ambient_ == o.ambient_ && d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
    }

  private:
    MonomialBasis() = default;
    Ambient ambient_ = Ambient::Plane;
    int d_ = 0, a_ = 0, b_ = 0;
    std::vector<Exps> exps_;
    std::map<Exps, std::size_t> index_;
};

struct PolyVec {
    MonomialBasis basis;
    Row coeffs;  // one per basis monomial

    PolyVec() = default;
    explicit PolyVec(MonomialBasis b) : basis(std::move(b)), coeffs(basis.size()) {}

    bool is_zero() const;
    PolyVec operator+(const PolyVec& o) const;
    PolyVec operator*(Fp c) const;
};

PolyVec monomial(const MonomialBasis& basis, const Exps& e, Fp c = Fp(1));

// product of (bi)homogeneous polynomials; degrees add within the same ambient
PolyVec poly_mul(const PolyVec& f, const PolyVec& g);

PolyVec poly_pow(const PolyVec& f, int n);

// linear forms as degree-1 / bidegree-(1,0) / bidegree-(0,1) vectors
PolyVec plane_linear(const std::array<Fp, 3>& c);
PolyVec bi_linear_x(const std::array<Fp, 2>& c);  // c0*x0 + c1*x1
PolyVec bi_linear_y(const std::array<Fp, 2>& c);

}  // namespace svt
