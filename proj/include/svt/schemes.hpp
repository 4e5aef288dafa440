#pragma once

// The 0-dimensional scheme data model and the construction of condition rows
// (linear functionals) in a fixed (bi)degree.
//
// Every plane component contributes coefficient-extraction functionals in
// coordinates adapted to the component: the row of the functional
// "coefficient of s^i t^j in f(P + s u + t w)" annihilates exactly the
// ideal piece of the component, so rank(condition matrix) is the Hilbert
// function value by construction.

#include <string>
#include <variant>
#include <vector>

#include "svt/basis.hpp"
#include "svt/rng.hpp"

namespace svt {

struct AmbientMismatch : std::runtime_error {
    explicit AmbientMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct PlanePoint {
    std::array<Fp, 3> c;  // normalized: first nonzero coordinate is 1

    static PlanePoint make(std::array<Fp, 3> raw);
    static PlanePoint random(Rng& rng);
    bool operator==(const PlanePoint&) const = default;
};

struct BiPoint {
    std::array<Fp, 2> left, right;  // each factor normalized

    static BiPoint make(std::array<Fp, 2> l, std::array<Fp, 2> r);
    static BiPoint random(Rng& rng);
    bool operator==(const BiPoint&) const = default;
};

// --- components -----------------------------------------------------------

struct FatPoint {
    int multiplicity;  // >= 1
    PlanePoint support;
};

struct SimplePoint {  // FatPoint of multiplicity 1, kept for collinear-set semantics
    PlanePoint support;
};

// triple point intersected with the double of the line support-direction
struct ThreeTwoP2 {
    PlanePoint support;
    PlanePoint direction;  // second point of the scheme's line, != support
};

// m-jet lying on the line joining support and through
struct Jet {
    int m;  // >= 1
    PlanePoint support;
    PlanePoint through;
};

// (m1,m2)-jet: complete intersection of line1^m1 and line2^m2,
// line1 = support-dir1, line2 = support-dir2
struct CrossJet {
    int m1, m2;
    PlanePoint support;
    PlanePoint dir1, dir2;
};

// the biprojective (3,2)-point: p^3 + (direction form)^2; the cosupport pair
// determines the direction (1,1)-form, see direction_form_32()
struct ThreeTwoP1P1 {
    BiPoint support;
    BiPoint cosupport;
};

using SchemeComponent =
    std::variant<FatPoint, SimplePoint, ThreeTwoP2, Jet, CrossJet, ThreeTwoP1P1>;

int component_length(const SchemeComponent& c);
Ambient component_ambient(const SchemeComponent& c);
std::string component_summary(const SchemeComponent& c);

struct SchemeSpec {
    Ambient ambient = Ambient::Plane;
    std::vector<SchemeComponent> components;

    // supports pairwise distinct, ambient tags consistent, auxiliary points
    // distinct from supports
    void validate() const;
    int total_length() const;
};

struct ConditionMatrix {
    MonomialBasis basis;
    Mat matrix;
};

// row of the functional f -> coefficient of s^i t^j in f(P + s*u + t*w)
Row hasse_row(const MonomialBasis& basis, const std::array<Fp, 3>& p,
              const std::array<Fp, 3>& u, const std::array<Fp, 3>& w, int i, int j);

Mat rows_fat_point(const PlanePoint& p, int m, int d);
Mat rows_32_p2(const ThreeTwoP2& y, int d);
Mat rows_jet(const Jet& j, int d);
Mat rows_cross_jet(const CrossJet& j, int d);

// The five spanning rows of the tangent cone at the (3,2)-point, as plain
// coefficient vectors in the Biprojective(a,b) basis. Their span's perp
// under the apolar pairing is the degree-(a,b) piece of the component's
// ideal; see pairing_weights() and direction_form_32().
Mat rows_32_p1p1(const ThreeTwoP1P1& y, int a, int b);

// The diagonal of the apolar pairing in the plain monomial basis:
// 1 / (C(a,i0) * C(b,j0)). Recorded here once.
std::vector<Fp> pairing_weights(const MonomialBasis& basis);

// the (1,1)-form whose double, together with the cube of the point ideal,
// cuts out the component in bidegree (a,b)
PolyVec direction_form_32(const ThreeTwoP1P1& y, int a, int b);

ConditionMatrix condition_matrix(const SchemeSpec& x, int d);
ConditionMatrix condition_matrix(const SchemeSpec& x, int a, int b);

// SchemeSpec JSON: {"ambient": "plane"|"p1xp1", "components": [...]};
// a coordinate array may be the string "rand" to request a seeded point.
SchemeSpec scheme_from_json(const std::string& text, Rng& rng);

// random generic instances
ThreeTwoP2 random_32_p2(Rng& rng);
ThreeTwoP1P1 random_32_p1p1(Rng& rng);

}  // namespace svt
