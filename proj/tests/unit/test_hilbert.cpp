#include <doctest.h>

#include "svt/hilbert.hpp"

using namespace svt;

TEST_CASE("critical values") {
    CHECK(critical_s(2, 2) == std::pair{1, 2});
    CHECK(critical_s(4, 4) == std::pair{5, 5});
    CHECK(critical_s(3, 3) == std::pair{3, 4});
    CHECK(critical_s(2, 1) == std::pair{1, 2});
}

TEST_CASE("linear system reports") {
    Rng rng(70);
    SchemeSpec empty;
    empty.ambient = Ambient::Plane;
    const LinSysReport r = linsys_dim(empty, 2);
    CHECK(r.dim_linsys == 6);
    CHECK(r.status == LinSysStatus::as_expected);

    // X_{4,1;1} on quintics: dim 5 = 2(a+1) - 5s
    const int dim = generic_linsys_dim(4, 1, 1, 5, 2, 71);
    CHECK(dim == 5);
}

TEST_CASE("status flags fire on the defective control") {
    Rng rng(72);
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
    const LinSysReport r = linsys_dim(x, 4);
    CHECK(r.dim_linsys == 1);
    CHECK(r.expected_dim == 0);
    CHECK(r.status == LinSysStatus::superabundant_anomaly);
}

TEST_CASE("dimension never drops below the expected dimension") {
    Rng rng(73);
    for (int t = 0; t < 8; ++t) {
        const int a = 2 + static_cast<int>(rng.u64() % 3);
        const int b = 1 + static_cast<int>(rng.u64() % a);
        const int s = 1 + static_cast<int>(rng.u64() % 4);
        Rng cell(derive_seed(73, {static_cast<std::uint64_t>(t)}));
        const SchemeSpec x = corner_scheme(a, b, s, cell);
        const LinSysReport r = linsys_dim(x, a + b);
        CHECK(r.dim_linsys >= r.expected_dim);
    }
}

TEST_CASE("pinned lemma cells") {
    // b = 1
    CHECK(generic_linsys_dim(2, 1, 1, 3, 2, 74) == 1);
    CHECK(generic_linsys_dim(4, 1, 2, 5, 2, 75) == 0);
    CHECK(generic_linsys_dim(9, 1, 4, 10, 2, 76) == 0);
    // b = 2
    CHECK(generic_linsys_dim(2, 2, 1, 4, 2, 77) == 4);
    CHECK(generic_linsys_dim(3, 2, 2, 5, 2, 78) == 2);
    CHECK(generic_linsys_dim(15, 2, 9, 17, 2, 88) == 3);  // the a = 15 worked case
    // small cases
    CHECK(generic_linsys_dim(3, 3, 3, 6, 2, 79) == 1);
    CHECK(generic_linsys_dim(5, 3, 4, 8, 2, 80) == 4);
    CHECK(generic_linsys_dim(4, 4, 5, 8, 2, 81) == 0);
    // main theorem instance
    CHECK(generic_linsys_dim(6, 4, 7, 10, 2, 82) == 0);
}

TEST_CASE("sub/superabundance monotonicity in s") {
    for (int s = 1; s <= 4; ++s) {
        const int d1 = generic_linsys_dim(3, 3, s, 6, 2, 83);
        const int d2 = generic_linsys_dim(3, 3, s + 1, 6, 2, 83);
        CHECK(d2 <= d1);
    }
}

TEST_CASE("check suites on small ranges") {
    CHECK(check_b1(6, 2, 84));
    CHECK(check_b2(5, 2, 85));
    CHECK(check_small_cases(2, 86));
    CHECK(check_main_plane(4, 4, 2, 87));
}
