#include <doctest.h>

#include "svt/idealcalc.hpp"
#include "svt/schemes.hpp"

using namespace svt;

namespace {

int piece_codim(const SchemeSpec& x, int d) {
    const MonomialBasis basis = MonomialBasis::plane(d);
    return static_cast<int>(basis.size() - scheme_ideal_piece(x, basis).dim());
}

SchemeSpec single(SchemeComponent c) {
    SchemeSpec x;
    x.ambient = component_ambient(c);
    x.components.push_back(std::move(c));
    return x;
}

}  // namespace

TEST_CASE("point normalization") {
    const PlanePoint p = PlanePoint::make({Fp(2), Fp(4), Fp(6)});
    CHECK(p.c[0] == Fp(1));
    CHECK(p == PlanePoint::make({Fp(3), Fp(6), Fp(9)}));
    CHECK_THROWS(PlanePoint::make({Fp(), Fp(), Fp()}));
    const PlanePoint q = PlanePoint::make({Fp(), Fp(5), Fp(10)});
    CHECK(q.c[1] == Fp(1));
}

TEST_CASE("fat point rows") {
    Rng rng(10);
    const PlanePoint p = PlanePoint::random(rng);

    // m=1: a single evaluation row
    const Mat ev = rows_fat_point(p, 1, 3);
    CHECK(ev.nrows() == 1);
    CHECK(ev.rank() == 1);

    // m=2, d=1: only the zero linear form vanishes doubly
    CHECK(rows_fat_point(p, 2, 1).rank() == 3);

    // m=3, d=4: oracle = dim S_4 - dim p^3 piece
    const Mat m34 = rows_fat_point(p, 3, 4);
    CHECK(m34.nrows() == 6);
    const SchemeSpec triple = single(FatPoint{3, p});
    const int oracle = piece_codim(triple, 4);
    CHECK(oracle == 6);
    CHECK(static_cast<int>(m34.rank()) == oracle);
}

TEST_CASE("fat point row entries are C(beta,alpha) P^(beta-alpha)") {
    // with the step directions on the non-pivot axes, the row of order
    // (i, j) has entry C(b_u, i) C(b_w, j) P^(b - i e_u - j e_w)
    Rng rng(9);
    const PlanePoint p = PlanePoint::random(rng);  // generic: pivot is axis 0
    const int d = 5;
    const MonomialBasis basis = MonomialBasis::plane(d);
    const Mat rows = rows_fat_point(p, 3, d);
    // row order: (0,0), (0,1), (1,0), (0,2), (1,1), (2,0) over axes (1, 2)
    const std::vector<std::pair<int, int>> alphas = {{0, 0}, {0, 1}, {1, 0},
                                                     {0, 2}, {1, 1}, {2, 0}};
    for (std::size_t r = 0; r < alphas.size(); ++r) {
        const auto [i, j] = alphas[r];
        for (std::size_t mi = 0; mi < basis.size(); ++mi) {
            const Exps& e = basis.exponent(mi);
            Fp expect = binomial_fp(e[1], i) * binomial_fp(e[2], j);
            for (int t = 0; t < e[0]; ++t) expect *= p.c[0];
            for (int t = 0; t < e[1] - i && !expect.is_zero(); ++t) expect *= p.c[1];
            for (int t = 0; t < e[2] - j && !expect.is_zero(); ++t) expect *= p.c[2];
            CHECK(rows.at(r, mi) == expect);
        }
    }
}

TEST_CASE("(3,2)-point rows in the plane") {
    Rng rng(11);
    const ThreeTwoP2 y = random_32_p2(rng);
    const SchemeSpec x = single(y);

    // d=1: order-two functionals vanish on linear forms
    CHECK(rows_32_p2(y, 1).rank() == 3);
    CHECK(piece_codim(x, 1) == 3);

    // d>=2: full five conditions, matching the ideal-piece oracle
    for (int d = 2; d <= 6; ++d) {
        CHECK(rows_32_p2(y, d).rank() == 5);
        CHECK(piece_codim(x, d) == 5);
    }

    CHECK(rows_32_p2(y, 6).rank() == 5);
}

TEST_CASE("(3,2)-point row span does not depend on the transversal choice") {
    Rng rng(12);
    const ThreeTwoP2 y = random_32_p2(rng);
    for (int d : {2, 3, 5}) {
        const MonomialBasis basis = MonomialBasis::plane(d);
        const Mat rows = rows_32_p2(y, d);

        // every row annihilates the component's ideal piece
        const SubspaceBasis piece = scheme_ideal_piece(single(y), basis);
        for (std::size_t r = 0; r < rows.nrows(); ++r)
            for (std::size_t i = 0; i < piece.mat.nrows(); ++i) {
                Fp acc;
                for (std::size_t c = 0; c < basis.size(); ++c)
                    acc += rows.at(r, c) * piece.mat.at(i, c);
                CHECK(acc.is_zero());
            }

        // replacing v by v + c*w gives the identical row span
        const std::array<Fp, 3> w = y.direction.c;
        std::array<Fp, 3> v{};
        for (int k = 0; k < 3; ++k) {
            v = {Fp(), Fp(), Fp()};
            v[k] = Fp(1);
            Mat probe(3);
            probe.add_row({y.support.c[0], y.support.c[1], y.support.c[2]});
            probe.add_row({w[0], w[1], w[2]});
            probe.add_row({v[0], v[1], v[2]});
            if (probe.rank() == 3) break;
        }
        const Fp c = rng.fp_nonzero();
        std::array<Fp, 3> shifted;
        for (int k = 0; k < 3; ++k) shifted[k] = v[k] + c * w[k];
        Mat alt(basis.size());
        for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}})
            alt.add_row(hasse_row(basis, y.support.c, shifted, w, i, j));
        CHECK(alt.rref() == rows.rref());
    }
}

TEST_CASE("jet rows") {
    Rng rng(13);
    const PlanePoint p = PlanePoint::random(rng);
    const PlanePoint q = PlanePoint::random(rng);
    const Jet j1{1, p, q};
    CHECK(rows_jet(j1, 4).nrows() == 1);

    const Jet j2{2, p, q};
    CHECK(rows_jet(j2, 1).rank() == 2);

    const Jet j3{3, p, q};
    CHECK(static_cast<int>(rows_jet(j3, 2).rank()) == piece_codim(single(j3), 2));
    CHECK(rows_jet(j3, 2).rank() == 3);
}

TEST_CASE("cross-jet rows") {
    Rng rng(14);
    const PlanePoint p = PlanePoint::random(rng);
    const PlanePoint d1 = PlanePoint::random(rng);
    const PlanePoint d2 = PlanePoint::random(rng);
    const CrossJet unit{1, 1, p, d1, d2};
    CHECK(rows_cross_jet(unit, 3).nrows() == 1);

    const CrossJet cj{2, 2, p, d1, d2};
    CHECK(static_cast<int>(rows_cross_jet(cj, 2).rank()) == piece_codim(single(cj), 2));
    CHECK(rows_cross_jet(cj, 2).rank() == 4);
    CHECK(static_cast<int>(rows_cross_jet(cj, 1).rank()) == piece_codim(single(cj), 1));
    CHECK(rows_cross_jet(cj, 1).rank() == 3);
}

TEST_CASE("biprojective (3,2)-point rows") {
    Rng rng(15);
    const ThreeTwoP1P1 y = random_32_p1p1(rng);
    CHECK(rows_32_p1p1(y, 1, 1).rank() == 4);  // fills P^3
    CHECK(rows_32_p1p1(y, 2, 2).rank() == 5);

    // scaling a factor of the support leaves the row span unchanged:
    // normalization absorbs the scalar at construction
    const Fp c = rng.fp_nonzero();
    const BiPoint scaled_support = BiPoint::make(
        {y.support.left[0] * c, y.support.left[1] * c},
        {y.support.right[0], y.support.right[1]});
    const ThreeTwoP1P1 scaled{scaled_support, y.cosupport};
    CHECK(rows_32_p1p1(y, 2, 3).rref() == rows_32_p1p1(scaled, 2, 3).rref());
}

TEST_CASE("condition matrix and ambient dispatch") {
    Rng rng(16);
    SchemeSpec empty;
    empty.ambient = Ambient::Plane;
    const ConditionMatrix cm = condition_matrix(empty, 3);
    CHECK(cm.matrix.rank() == 0);
    CHECK(cm.basis.size() == 10);

    CHECK_THROWS_AS(condition_matrix(empty, 2, 2), AmbientMismatch);

    SchemeSpec bi;
    bi.ambient = Ambient::Biprojective;
    bi.components.push_back(random_32_p1p1(rng));
    CHECK_THROWS_AS(condition_matrix(bi, 4), AmbientMismatch);
    CHECK(condition_matrix(bi, 2, 2).matrix.rank() == 5);
}

TEST_CASE("corner scheme with one (3,2)-point on quartics") {
    // 2Q1 + 2Q2 + one (3,2)-point: rank 11, dim L_4 = 4
    Rng rng(17);
    SchemeSpec x;
    x.ambient = Ambient::Plane;
    x.components.push_back(FatPoint{2, PlanePoint::make({Fp(), Fp(1), Fp()})});
    x.components.push_back(FatPoint{2, PlanePoint::make({Fp(), Fp(), Fp(1)})});
    x.components.push_back(random_32_p2(rng));
    const ConditionMatrix cm = condition_matrix(x, 4);
    CHECK(cm.matrix.rank() == 11);
    CHECK(cm.basis.size() - cm.matrix.rank() == 4);
}

TEST_CASE("five generic double points on quartics are defective") {
    Rng rng(18);
    SchemeSpec x;
    x.ambient = Ambient::Plane;
    std::vector<PlanePoint> pts;
    while (pts.size() < 5) {
        const PlanePoint p = PlanePoint::random(rng);
        bool fresh = true;
        for (const auto& q : pts) fresh = fresh && !(q == p);
        if (fresh) pts.push_back(p);
    }
    for (const auto& p : pts) x.components.push_back(FatPoint{2, p});

    const ConditionMatrix cm = condition_matrix(x, 4);
    CHECK(cm.matrix.rank() == 14);
    CHECK(cm.basis.size() - cm.matrix.rank() == 1);

    // oracle: the unique quartic is the square of the conic through the points
    const MonomialBasis b2 = MonomialBasis::plane(2);
    Mat evals(b2.size());
    for (const auto& p : pts) evals.add_row(rows_fat_point(p, 1, 2).row(0));
    const Mat conic = evals.nullspace();
    REQUIRE(conic.nrows() == 1);
    PolyVec c(b2);
    c.coeffs = conic.row(0);
    const PolyVec quartic = poly_mul(c, c);
    const SubspaceBasis sys = scheme_ideal_piece(x, MonomialBasis::plane(4));
    REQUIRE(sys.dim() == 1);
    Mat probe = sys.mat;
    probe.add_row(quartic.coeffs);
    CHECK(probe.rank() == 1);
}

TEST_CASE("rank is monotone in degree and bounded by the scheme length") {
    Rng rng(19);
    for (int t = 0; t < 5; ++t) {
        SchemeSpec x;
        x.ambient = Ambient::Plane;
        x.components.push_back(FatPoint{1 + static_cast<int>(rng.u64() % 3), PlanePoint::random(rng)});
        x.components.push_back(random_32_p2(rng));
        std::size_t prev = 0;
        for (int d = 1; d <= 6; ++d) {
            const std::size_t r = condition_matrix(x, d).matrix.rank();
            CHECK(r >= prev);
            CHECK(r <= static_cast<std::size_t>(x.total_length()));
            prev = r;
        }
    }
}

TEST_CASE("rank is invariant under projective changes of coordinates") {
    Rng rng(20);
    // random invertible 3x3 change applied to all supports and directions
    Mat g(3, 3);
    do {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g.at(i, j) = rng.fp();
    } while (g.rank() != 3);
    auto apply = [&g](const PlanePoint& p) {
        std::array<Fp, 3> out{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out[i] += g.at(i, j) * p.c[j];
        return PlanePoint::make(out);
    };

    SchemeSpec x;
    x.ambient = Ambient::Plane;
    x.components.push_back(FatPoint{2, PlanePoint::random(rng)});
    x.components.push_back(random_32_p2(rng));
    const PlanePoint p = PlanePoint::random(rng);
    const PlanePoint q = PlanePoint::random(rng);
    x.components.push_back(Jet{2, p, q});

    SchemeSpec moved;
    moved.ambient = Ambient::Plane;
    for (const auto& c : x.components) {
        if (const auto* f = std::get_if<FatPoint>(&c))
            moved.components.push_back(FatPoint{f->multiplicity, apply(f->support)});
        else if (const auto* y = std::get_if<ThreeTwoP2>(&c))
            moved.components.push_back(ThreeTwoP2{apply(y->support), apply(y->direction)});
        else if (const auto* j = std::get_if<Jet>(&c))
            moved.components.push_back(Jet{j->m, apply(j->support), apply(j->through)});
    }
    for (int d = 2; d <= 5; ++d)
        CHECK(condition_matrix(x, d).matrix.rank() == condition_matrix(moved, d).matrix.rank());
}

TEST_CASE("scheme JSON round trip") {
    Rng rng(21);
    const std::string text = R"({
      "ambient": "plane",
      "components": [
        {"type": "fat", "m": 2, "support": [0, 1, 0]},
        {"type": "32", "support": [1, 2, 3], "direction": [1, 0, 1]},
        {"type": "jet", "m": 2, "support": [1, 1, 0], "through": "rand"},
        {"type": "simple", "support": [5, 1, 1]}
      ]
    })";
    const SchemeSpec x = scheme_from_json(text, rng);
    CHECK(x.components.size() == 4);
    CHECK(x.total_length() == 3 + 5 + 2 + 1);

    CHECK_THROWS(scheme_from_json(R"({"ambient":"plane","components":[{"type":"wat"}]})", rng));
    CHECK_THROWS(scheme_from_json(R"({"ambient":"plane")", rng));

    const std::string bi = R"({
      "ambient": "p1xp1",
      "components": [
        {"type": "32bi", "support": [[1,0],[1,0]], "cosupport": [[0,1],[0,1]]},
        {"type": "32bi", "support": "rand", "cosupport": "rand"}
      ]
    })";
    const SchemeSpec y = scheme_from_json(bi, rng);
    CHECK(condition_matrix(y, 2, 2).matrix.rank() == 9);
}

TEST_CASE("validation rejects collisions and wrong ambients") {
    Rng rng(22);
    const PlanePoint p = PlanePoint::random(rng);
    SchemeSpec x;
    x.ambient = Ambient::Plane;
    x.components.push_back(FatPoint{2, p});
    x.components.push_back(SimplePoint{p});
    CHECK_THROWS(x.validate());

    SchemeSpec y;
    y.ambient = Ambient::Plane;
    y.components.push_back(random_32_p1p1(rng));
    CHECK_THROWS_AS(y.validate(), AmbientMismatch);
}

TEST_CASE("cross-oracle identity on random mixed schemes") {
    // basis size - rank(condition matrix) == dim of the ideal-piece
    // intersection, for random schemes of up to three components
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        SchemeSpec x;
        x.ambient = Ambient::Plane;
        const int n = 1 + static_cast<int>(rng.u64() % 3);
        std::vector<PlanePoint> used;
        for (int i = 0; i < n; ++i) {
            PlanePoint p = PlanePoint::random(rng);
            bool fresh = true;
            for (const auto& q : used) fresh = fresh && !(q == p);
            if (!fresh) {
                --i;
                continue;
            }
            used.push_back(p);
            switch (rng.u64() % 5) {
                case 0:
                    x.components.push_back(FatPoint{1 + static_cast<int>(rng.u64() % 3), p});
                    break;
                case 1:
                    x.components.push_back(SimplePoint{p});
                    break;
                case 2: {
                    ThreeTwoP2 y = random_32_p2(rng);
                    y.support = p;
                    x.components.push_back(y);
                    break;
                }
                case 3:
                    x.components.push_back(
                        Jet{1 + static_cast<int>(rng.u64() % 3), p, PlanePoint::random(rng)});
                    break;
                default: {
                    CrossJet cj{2, 2, p, PlanePoint::random(rng), PlanePoint::random(rng)};
                    x.components.push_back(cj);
                    break;
                }
            }
        }
        try {
            x.validate();
        } catch (const std::exception&) {
            continue;  // rare degenerate draw
        }
        const int d = 1 + static_cast<int>(rng.u64() % 6);
        const ConditionMatrix cm = condition_matrix(x, d);
        const SubspaceBasis piece = scheme_ideal_piece(x, cm.basis);
        CHECK(cm.basis.size() - cm.matrix.rank() == piece.dim());
    }
}
