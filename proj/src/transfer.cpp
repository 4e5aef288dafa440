#include "svt/transfer.hpp"

namespace svt {

PlanePoint phi_point(const BiPoint& p) {
    if (p.left[0].is_zero() || p.right[0].is_zero()) throw PhiUndefined();
    return PlanePoint::make(
        {p.left[0] * p.right[0], p.left[1] * p.right[0], p.left[0] * p.right[1]});
}

ThreeTwoP2 push_32(const ThreeTwoP1P1& y, int a, int b) {
    if (y.support.left[0].is_zero() || y.support.right[0].is_zero()) throw PhiUndefined();
    const Fp u = y.support.left[1] * y.support.left[0].inv();
    const Fp v = y.support.right[1] * y.support.right[0].inv();

    // coefficient matrix of the direction form, L[i][j] = coeff of x_i y_j
    const PolyVec d = direction_form_32(y, a, b);
    const MonomialBasis b11 = MonomialBasis::biprojective(1, 1);
    const Fp L10 = d.coeffs[b11.index_of({0, 1, 1, 0})];
    const Fp L01 = d.coeffs[b11.index_of({1, 0, 0, 1})];
    const Fp L11 = d.coeffs[b11.index_of({0, 1, 0, 1})];

    // standard-position kernel transported by the triangular change moving
    // the support to ([1:0],[1:0]): the image line is
    //   -(u*lam + v*mu) z0 + lam z1 + mu z2
    const Fp lam = L10 + v * L11;
    const Fp mu = L01 + u * L11;
    if (lam.is_zero() || mu.is_zero()) throw PhiUndefined();

    const PlanePoint support = phi_point(y.support);
    // second point of the image line: its intersection with {z0 = 0}; the
    // support has z0 != 0, so the two are always distinct
    const PlanePoint dir = PlanePoint::make({Fp(), mu, -lam});
    return ThreeTwoP2{support, dir};
}

SchemeSpec push_scheme(const SchemeSpec& x, int a, int b) {
    if (x.ambient != Ambient::Biprojective)
        throw AmbientMismatch("push_scheme wants a biprojective scheme");
    if (a < 1 || b < 1) throw std::invalid_argument("push_scheme wants a, b >= 1");
    SchemeSpec out;
    out.ambient = Ambient::Plane;
    for (const auto& c : x.components)
        out.components.push_back(push_32(std::get<ThreeTwoP1P1>(c), a, b));
    out.components.push_back(FatPoint{a, q1_point()});
    out.components.push_back(FatPoint{b, q2_point()});
    out.validate();
    return out;
}

TransferInstance make_transfer_instance(const SchemeSpec& source, int a, int b) {
    return TransferInstance{source, a, b, push_scheme(source, a, b)};
}

SchemeSpec random_32_scheme_in_domain(int s, Rng& rng, int a, int b) {
    constexpr int kMaxRetries = 100;
    SchemeSpec x;
    x.ambient = Ambient::Biprojective;
    for (int i = 0; i < s; ++i) {
        bool placed = false;
        for (int r = 0; r < kMaxRetries && !placed; ++r) {
            const ThreeTwoP1P1 y = random_32_p1p1(rng);
            if (y.support.left[0].is_zero() || y.support.right[0].is_zero()) continue;
            bool clash = false;
            for (const auto& c : x.components)
                if (std::get<ThreeTwoP1P1>(c).support == y.support) clash = true;
            if (clash) continue;
            // the transported direction must not degenerate
            try {
                push_32(y, a, b);
            } catch (const PhiUndefined&) {
                continue;
            }
            x.components.push_back(y);
            placed = true;
        }
        if (!placed) throw PhiUndefined();
    }
    return x;
}

bool verify_transfer(int a, int b, int s, int trials, std::uint64_t seed) {
    if (a < 1 || b < 1 || a * b < 1) throw std::invalid_argument("verify_transfer wants ab >= 1");
    if (s < 0) throw std::invalid_argument("verify_transfer wants s >= 0");
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, {0x7a, static_cast<std::uint64_t>(t),
                                   static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                                   static_cast<std::uint64_t>(s)}));
        const SchemeSpec source = random_32_scheme_in_domain(s, rng, a, b);
        const SchemeSpec target = push_scheme(source, a, b);

        const ConditionMatrix cm = condition_matrix(source, a, b);
        const int dim_source = static_cast<int>(cm.basis.size() - cm.matrix.rank());
        const ConditionMatrix cp = condition_matrix(target, a + b);
        const int dim_target = static_cast<int>(cp.basis.size() - cp.matrix.rank());
        if (dim_source != dim_target) return false;
    }
    return true;
}

}  // namespace svt
