#include "svt/secant.hpp"

#include <algorithm>

#include "svt/hilbert.hpp"
#include "svt/idealcalc.hpp"

namespace svt {

namespace {

SchemeSpec random_32_union(int s, Rng& rng) {
    SchemeSpec x;
    x.ambient = Ambient::Biprojective;
    for (int i = 0; i < s; ++i) {
        for (;;) {
            const ThreeTwoP1P1 y = random_32_p1p1(rng);
            bool clash = false;
            for (const auto& c : x.components)
                if (std::get<ThreeTwoP1P1>(c).support == y.support) clash = true;
            if (!clash) {
                x.components.push_back(y);
                break;
            }
        }
    }
    return x;
}

}  // namespace

DefectReport secant_rank(int a, int b, int s, int trials, std::uint64_t seed) {
    if (a < 1 || b < 1 || s < 1) throw std::invalid_argument("secant_rank wants a, b, s >= 1");
    if (trials < 1) throw std::invalid_argument("secant_rank wants trials >= 1");
    DefectReport report;
    report.a = a;
    report.b = b;
    report.s = s;
    report.trials = trials;
    report.seed = seed;
    report.expected_hf = std::min((a + 1) * (b + 1), 5 * s);
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                                   static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(t)}));
        const SchemeSpec x = random_32_union(s, rng);
        Mat rows(MonomialBasis::biprojective(a, b).size());
        for (const auto& c : x.components)
            rows.append(rows_32_p1p1(std::get<ThreeTwoP1P1>(c), a, b));
        report.computed_hf = std::max(report.computed_hf, static_cast<int>(rows.rank()));
    }
    report.defect = report.expected_hf - report.computed_hf;
    return report;
}

std::vector<DefectReport> defect_table(int amax, int bmax, int trials, std::uint64_t seed) {
    if (amax < 1 || bmax < 1) throw std::invalid_argument("defect_table wants amax, bmax >= 1");
    std::vector<DefectReport> out;
    for (int a = 1; a <= amax; ++a) {
        for (int b = 1; b <= std::min(a, bmax); ++b) {
            if (a * b <= 1) continue;
            const auto [s1, s2] = critical_s(a, b);
            (void)s1;
            for (int s = 1; s <= s2; ++s)
                out.push_back(secant_rank(
                    a, b, s, trials,
                    derive_seed(seed, {static_cast<std::uint64_t>(a),
                                       static_cast<std::uint64_t>(b),
                                       static_cast<std::uint64_t>(s)})));
        }
    }
    return out;
}

bool verify_tangent_apolarity(int a, int b, int trials, std::uint64_t seed) {
    if (a * b <= 1) throw std::invalid_argument("verify_tangent_apolarity wants ab > 1");
    const MonomialBasis basis = MonomialBasis::biprojective(a, b);
    const std::vector<Fp> weights = pairing_weights(basis);
    const int n = static_cast<int>(basis.size());

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, {0xa9, static_cast<std::uint64_t>(a),
                                   static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(t)}));
        const ThreeTwoP1P1 y = random_32_p1p1(rng);
        const SchemeComponent comp = y;

        // (i) the ideal piece has codimension 5
        const SubspaceBasis piece = ideal_degree_piece(component_ideal(comp, a, b), basis);
        if (static_cast<int>(piece.dim()) != n - 5) return false;

        // (ii) every element of the piece pairs to zero with the five rows
        const Mat rows = rows_32_p1p1(y, a, b);
        Mat weighted = rows;
        weighted.scale_columns(weights);
        for (std::size_t i = 0; i < piece.mat.nrows(); ++i) {
            for (std::size_t r = 0; r < weighted.nrows(); ++r) {
                Fp acc;
                for (int c = 0; c < n; ++c) acc += piece.mat.at(i, c) * weighted.at(r, c);
                if (!acc.is_zero()) return false;
            }
        }

        // (iii) p^3 piece <= row-span perp <= p^2 piece
        const SubspaceBasis perp = make_subspace(basis, weighted.nullspace());
        GeneratorIdeal p3 = component_ideal(comp, a, b);
        p3.gens.pop_back();  // drop the direction-form square, keep p^3
        const SubspaceBasis p3_piece = ideal_degree_piece(p3, basis);

        const PolyVec xt = bi_linear_x({y.support.left[1], -y.support.left[0]});
        const PolyVec yt = bi_linear_y({y.support.right[1], -y.support.right[0]});
        const GeneratorIdeal p2{
            Ambient::Biprojective,
            {poly_pow(xt, 2), poly_mul(xt, yt), poly_pow(yt, 2)}};
        const SubspaceBasis p2_piece = ideal_degree_piece(p2, basis);

        if (!piece_contains(perp, p3_piece)) return false;
        if (!piece_contains(p2_piece, perp)) return false;
    }
    return true;
}

int expected_dim_secant(int a, int b, int s) {
    if (a < 1 || b < 1 || s < 1)
        throw std::invalid_argument("expected_dim_secant wants a, b, s >= 1");
    return std::min((a + 1) * (b + 1), 5 * s) - 1;
}

}  // namespace svt
