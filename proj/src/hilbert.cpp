#include "svt/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "svt/secant.hpp"
#include "svt/transfer.hpp"

namespace svt {

const char* to_string(LinSysStatus s) {
    switch (s) {
        case LinSysStatus::as_expected: return "as_expected";
        case LinSysStatus::deficient_candidate: return "deficient_candidate";
        case LinSysStatus::superabundant_anomaly: return "superabundant_anomaly";
    }
    return "?";
}

namespace {

std::string summarize(const SchemeSpec& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.components.size(); ++i) {
        if (i) os << "+";
        os << component_summary(x.components[i]);
    }
    return os.str();
}

LinSysStatus classify(int dim, int expected) {
    if (dim == expected) return LinSysStatus::as_expected;
    return dim > expected ? LinSysStatus::superabundant_anomaly
                          : LinSysStatus::deficient_candidate;
}

}  // namespace

LinSysReport linsys_dim(const SchemeSpec& x, int d) {
    const ConditionMatrix cm = condition_matrix(x, d);
    LinSysReport r;
    r.ambient = Ambient::Plane;
    r.d = d;
    r.scheme_summary = summarize(x);
    r.basis_size = static_cast<int>(cm.basis.size());
    r.rank = static_cast<int>(cm.matrix.rank());
    r.dim_linsys = r.basis_size - r.rank;
    r.virtual_dim = r.basis_size - x.total_length();
    r.expected_dim = std::max(0, r.virtual_dim);
    r.status = classify(r.dim_linsys, r.expected_dim);
    return r;
}

LinSysReport linsys_dim(const SchemeSpec& x, int a, int b) {
    const ConditionMatrix cm = condition_matrix(x, a, b);
    LinSysReport r;
    r.ambient = Ambient::Biprojective;
    r.a = a;
    r.b = b;
    r.d = a + b;
    r.scheme_summary = summarize(x);
    r.basis_size = static_cast<int>(cm.basis.size());
    r.rank = static_cast<int>(cm.matrix.rank());
    r.dim_linsys = r.basis_size - r.rank;
    r.virtual_dim = r.basis_size - x.total_length();
    r.expected_dim = std::max(0, r.virtual_dim);
    r.status = classify(r.dim_linsys, r.expected_dim);
    return r;
}

std::pair<int, int> critical_s(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("critical_s wants a, b >= 1");
    const int n = (a + 1) * (b + 1);
    return {n / 5, (n + 4) / 5};
}

SchemeSpec corner_scheme(int a, int b, int s, Rng& rng) {
    SchemeSpec x;
    x.ambient = Ambient::Plane;
    x.components.push_back(FatPoint{a, q1_point()});
    x.components.push_back(FatPoint{b, q2_point()});
    std::vector<PlanePoint> used = {q1_point(), q2_point()};
    for (int i = 0; i < s; ++i) {
        for (;;) {
            const ThreeTwoP2 y = random_32_p2(rng);
            if (std::find(used.begin(), used.end(), y.support) != used.end()) continue;
            used.push_back(y.support);
            x.components.push_back(y);
            break;
        }
    }
    return x;
}

int generic_linsys_dim(int a, int b, int s, int d, int trials, std::uint64_t seed) {
    int best = -1;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                                   static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(d),
                                   static_cast<std::uint64_t>(t)}));
        const SchemeSpec x = corner_scheme(a, b, s, rng);
        const int dim = linsys_dim(x, d).dim_linsys;
        best = best < 0 ? dim : std::min(best, dim);
    }
    return best;
}

bool check_b1(int amax, int trials, std::uint64_t seed) {
    if (amax < 2) throw std::invalid_argument("check_b1 wants amax >= 2");
    for (int a = 2; a <= amax; ++a) {
        const auto [s1, s2] = critical_s(a, 1);
        (void)s1;
        for (int s = 1; s <= s2; ++s) {
            const int expected = std::max(0, 2 * (a + 1) - 5 * s);
            if (generic_linsys_dim(a, 1, s, a + 1, trials, seed) != expected) return false;
        }
    }
    return true;
}

bool check_b2(int amax, int trials, std::uint64_t seed) {
    if (amax < 2) throw std::invalid_argument("check_b2 wants amax >= 2");
    for (int a = 2; a <= amax; ++a) {
        const auto [s1, s2] = critical_s(a, 2);
        (void)s1;
        for (int s = 1; s <= s2; ++s) {
            const int expected = a == 2 ? std::max(0, 9 - 5 * s)
                                        : std::max(0, 3 * (a + 1) - 5 * s);
            if (generic_linsys_dim(a, 2, s, a + 2, trials, seed) != expected) return false;
        }
    }
    return true;
}

bool check_small_cases(int trials, std::uint64_t seed) {
    for (int s : {3, 4}) {
        if (generic_linsys_dim(3, 3, s, 6, trials, seed) != std::max(0, 16 - 5 * s))
            return false;
    }
    for (int s : {4, 5}) {
        if (generic_linsys_dim(5, 3, s, 8, trials, seed) != std::max(0, 24 - 5 * s))
            return false;
    }
    return generic_linsys_dim(4, 4, 5, 8, trials, seed) == 0;
}

bool check_main_plane(int amax, int bmax, int trials, std::uint64_t seed) {
    if (amax < 1 || bmax < 1) throw std::invalid_argument("check_main_plane wants amax, bmax >= 1");
    for (int a = 1; a <= amax; ++a) {
        for (int b = 1; b <= std::min(a, bmax); ++b) {
            if (a * b <= 1) continue;
            const auto [s1, s2] = critical_s(a, b);
            (void)s1;
            for (int s = 1; s <= s2; ++s) {
                const int expected_dim = std::max(0, (a + 1) * (b + 1) - 5 * s);
                if (generic_linsys_dim(a, b, s, a + b, trials, seed) != expected_dim)
                    return false;
                // the biprojective side, computed independently via Terracini rows
                const int expected_hf = std::min((a + 1) * (b + 1), 5 * s);
                const DefectReport rep = secant_rank(
                    a, b, s, trials,
                    derive_seed(seed, {0x316, static_cast<std::uint64_t>(a),
                                       static_cast<std::uint64_t>(b),
                                       static_cast<std::uint64_t>(s)}));
                if (rep.computed_hf != expected_hf) return false;
            }
        }
    }
    return true;
}

}  // namespace svt
