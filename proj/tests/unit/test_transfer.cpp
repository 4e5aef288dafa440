#include <doctest.h>

#include "svt/idealcalc.hpp"
#include "svt/transfer.hpp"

using namespace svt;

TEST_CASE("phi on points") {
    CHECK(phi_point(BiPoint::make({Fp(1), Fp()}, {Fp(1), Fp()})) ==
          PlanePoint::make({Fp(1), Fp(), Fp()}));
    CHECK(phi_point(BiPoint::make({Fp(1), Fp(1)}, {Fp(1), Fp(2)})) ==
          PlanePoint::make({Fp(1), Fp(1), Fp(2)}));
    CHECK_THROWS_AS(phi_point(BiPoint::make({Fp(), Fp(1)}, {Fp(1), Fp(1)})), PhiUndefined);
}

TEST_CASE("standard position lands on the z1 + z2 line") {
    // support ([1:0],[1:0]), cosupport ([0:1],[0:1]); at a = b the direction
    // form maps to z1 + z2
    const ThreeTwoP1P1 y{BiPoint::make({Fp(1), Fp()}, {Fp(1), Fp()}),
                         BiPoint::make({Fp(), Fp(1)}, {Fp(), Fp(1)})};
    const ThreeTwoP2 img = push_32(y, 2, 2);
    CHECK(img.support == PlanePoint::make({Fp(1), Fp(), Fp()}));
    // the image line through [1:0:0] and the direction point is {z1 + z2 = 0}
    const auto& d = img.direction;
    CHECK((d.c[1] + d.c[2]).is_zero());
    CHECK(d.c[1] == Fp(1));  // normalized second point [0:1:-1]
}

TEST_CASE("pushed direction squares into the component ideal") {
    // Phi(l_D)^2 must lie in the (2,2) piece of p^3 + (direction form)^2
    Rng rng(60);
    for (int t = 0; t < 6; ++t) {
        const int a = 2 + static_cast<int>(rng.u64() % 3);
        const int b = 2 + static_cast<int>(rng.u64() % 3);
        ThreeTwoP1P1 y = random_32_p1p1(rng);
        if (y.support.left[0].is_zero() || y.support.right[0].is_zero()) continue;
        ThreeTwoP2 img{PlanePoint::make({Fp(1), Fp(), Fp()}), PlanePoint::make({Fp(), Fp(1), Fp()})};
        try {
            img = push_32(y, a, b);
        } catch (const PhiUndefined&) {
            continue;
        }
        // dual of the image line
        const auto& s = img.support.c;
        const auto& e = img.direction.c;
        const std::array<Fp, 3> dual = {s[1] * e[2] - s[2] * e[1], s[2] * e[0] - s[0] * e[2],
                                        s[0] * e[1] - s[1] * e[0]};
        // pull back along Phi: z0 -> x0y0, z1 -> x1y0, z2 -> x0y1
        const PolyVec x0y0 = poly_mul(bi_linear_x({Fp(1), Fp()}), bi_linear_y({Fp(1), Fp()}));
        const PolyVec x1y0 = poly_mul(bi_linear_x({Fp(), Fp(1)}), bi_linear_y({Fp(1), Fp()}));
        const PolyVec x0y1 = poly_mul(bi_linear_x({Fp(1), Fp()}), bi_linear_y({Fp(), Fp(1)}));
        const PolyVec mu = x0y0 * dual[0] + x1y0 * dual[1] + x0y1 * dual[2];
        const PolyVec musq = poly_mul(mu, mu);

        const MonomialBasis b22 = MonomialBasis::biprojective(2, 2);
        const SubspaceBasis piece =
            ideal_degree_piece(component_ideal(SchemeComponent{y}, a, b), b22);
        Mat probe = piece.mat;
        probe.add_row(musq.coeffs);
        CHECK(probe.rank() == piece.dim());
    }
}

TEST_CASE("empty source pushes to the two fat corners") {
    SchemeSpec empty;
    empty.ambient = Ambient::Biprojective;
    const SchemeSpec y = push_scheme(empty, 2, 3);
    REQUIRE(y.components.size() == 2);
    CHECK(std::get<FatPoint>(y.components[0]).multiplicity == 2);
    CHECK(std::get<FatPoint>(y.components[1]).multiplicity == 3);
    CHECK(std::get<FatPoint>(y.components[0]).support == q1_point());

    // HF of aQ1 + bQ2 at a+b is C(a+b+2,2) - (a+1)(b+1)
    const ConditionMatrix cm = condition_matrix(y, 5);
    CHECK(cm.matrix.rank() == 21 - 12);
}

TEST_CASE("transfer instances carry source and target together") {
    Rng rng(69);
    const SchemeSpec source = random_32_scheme_in_domain(2, rng, 3, 2);
    const TransferInstance inst = make_transfer_instance(source, 3, 2);
    CHECK(inst.a == 3);
    CHECK(inst.target.ambient == Ambient::Plane);
    CHECK(inst.target.components.size() == 4);  // two images plus the fat corners
    CHECK(inst.target.total_length() == 2 * 5 + 6 + 3);
}

TEST_CASE("transfer equality on pinned and random instances") {
    CHECK(verify_transfer(2, 2, 1, 2, 61));
    CHECK(verify_transfer(3, 3, 4, 2, 62));
    CHECK(verify_transfer(3, 2, 2, 2, 63));
    CHECK(verify_transfer(5, 1, 2, 2, 64));
    CHECK(verify_transfer(4, 4, 5, 1, 65));
    CHECK(verify_transfer(2, 2, 0, 1, 66));
}

TEST_CASE("expected Hilbert function values through the transfer") {
    // (a,b,s) = (2,2,1): both sides see HF 5
    Rng rng(67);
    const SchemeSpec source = random_32_scheme_in_domain(1, rng, 2, 2);
    const ConditionMatrix cm = condition_matrix(source, 2, 2);
    CHECK(cm.matrix.rank() == 5);
    const SchemeSpec target = push_scheme(source, 2, 2);
    const ConditionMatrix cp = condition_matrix(target, 4);
    // dim L_4(Y) = dim L_{2,2}(X) = 9 - 5
    CHECK(cp.basis.size() - cp.matrix.rank() == 9 - 5);

    // (3,3,4): the system is empty on both sides; HF saturates at 16
    const SchemeSpec src2 = random_32_scheme_in_domain(4, rng, 3, 3);
    const ConditionMatrix c2 = condition_matrix(src2, 3, 3);
    CHECK(c2.matrix.rank() == 16);
    const SchemeSpec tgt2 = push_scheme(src2, 3, 3);
    const ConditionMatrix p2 = condition_matrix(tgt2, 6);
    CHECK(p2.basis.size() - p2.matrix.rank() == 0);
}

TEST_CASE("push commutes with triangular factor changes") {
    // a factorwise change fixing phi's domain:
    // s1 -> lam*s1 + c*s0, t1 -> mu*t1 + e*t0
    Rng rng(68);
    const Fp c = rng.fp(), e = rng.fp();
    const Fp lam = rng.fp_nonzero(), mu = rng.fp_nonzero();
    auto move_point = [&](const BiPoint& p) {
        return BiPoint::make({p.left[0], lam * p.left[1] + c * p.left[0]},
                             {p.right[0], mu * p.right[1] + e * p.right[0]});
    };
    for (int t = 0; t < 4; ++t) {
        const SchemeSpec source = random_32_scheme_in_domain(2, rng, 2, 2);
        SchemeSpec moved;
        moved.ambient = Ambient::Biprojective;
        for (const auto& comp : source.components) {
            const auto& y = std::get<ThreeTwoP1P1>(comp);
            moved.components.push_back(ThreeTwoP1P1{move_point(y.support), move_point(y.cosupport)});
        }
        const ConditionMatrix a = condition_matrix(push_scheme(source, 2, 2), 4);
        const ConditionMatrix b = condition_matrix(push_scheme(moved, 2, 2), 4);
        CHECK(a.matrix.rank() == b.matrix.rank());
    }
}
