#include "svt/schemes.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace svt {

PlanePoint PlanePoint::make(std::array<Fp, 3> raw) {
    int pivot = -1;
    for (int i = 0; i < 3; ++i) {
        if (!raw[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) throw std::invalid_argument("zero vector is not a projective point");
    const Fp inv = raw[pivot].inv();
    for (auto& c : raw) c *= inv;
    return PlanePoint{raw};
}

PlanePoint PlanePoint::random(Rng& rng) {
    for (;;) {
        std::array<Fp, 3> c = {rng.fp(), rng.fp(), rng.fp()};
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
        return make(c);
    }
}

namespace {
std::array<Fp, 2> normalize2(std::array<Fp, 2> v) {
    if (!v[0].is_zero()) {
        v[1] *= v[0].inv();
        v[0] = Fp(1);
    } else if (!v[1].is_zero()) {
        v[1] = Fp(1);
    } else {
        throw std::invalid_argument("zero vector is not a point of P^1");
    }
    return v;
}
}  // namespace

BiPoint BiPoint::make(std::array<Fp, 2> l, std::array<Fp, 2> r) {
    return BiPoint{normalize2(l), normalize2(r)};
}

BiPoint BiPoint::random(Rng& rng) {
    auto factor = [&rng] {
        for (;;) {
            std::array<Fp, 2> v = {rng.fp(), rng.fp()};
            if (!v[0].is_zero() || !v[1].is_zero()) return v;
        }
    };
    return make(factor(), factor());
}

int component_length(const SchemeComponent& c) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FatPoint>)
                return v.multiplicity * (v.multiplicity + 1) / 2;
            else if constexpr (std::is_same_v<T, SimplePoint>)
                return 1;
            else if constexpr (std::is_same_v<T, ThreeTwoP2>)
                return 5;
            else if constexpr (std::is_same_v<T, Jet>)
                return v.m;
            else if constexpr (std::is_same_v<T, CrossJet>)
                return v.m1 * v.m2;
            else
                return 5;  // ThreeTwoP1P1
        },
        c);
}

Ambient component_ambient(const SchemeComponent& c) {
    return std::holds_alternative<ThreeTwoP1P1>(c) ? Ambient::Biprojective : Ambient::Plane;
}

std::string component_summary(const SchemeComponent& c) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FatPoint>)
                os << v.multiplicity << "-fat";
            else if constexpr (std::is_same_v<T, SimplePoint>)
                os << "point";
            else if constexpr (std::is_same_v<T, ThreeTwoP2>)
                os << "(3,2)";
            else if constexpr (std::is_same_v<T, Jet>)
                os << v.m << "-jet";
            else if constexpr (std::is_same_v<T, CrossJet>)
                os << "(" << v.m1 << "," << v.m2 << ")-jet";
            else
                os << "(3,2)bi";
        },
        c);
    return os.str();
}

namespace {
PlanePoint plane_support(const SchemeComponent& c) {
    return std::visit(
        [](const auto& v) -> PlanePoint {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ThreeTwoP1P1>)
                throw AmbientMismatch("biprojective component has no plane support");
            else
                return v.support;
        },
        c);
}

Fp det3(const std::array<Fp, 3>& a, const std::array<Fp, 3>& b, const std::array<Fp, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}
}  // namespace

void SchemeSpec::validate() const {
    for (const auto& c : components) {
        if (component_ambient(c) != ambient)
            throw AmbientMismatch("component ambient does not match scheme ambient");
    }
    if (ambient == Ambient::Plane) {
        std::vector<PlanePoint> sup;
        for (const auto& c : components) sup.push_back(plane_support(c));
        for (std::size_t i = 0; i < sup.size(); ++i)
            for (std::size_t j = i + 1; j < sup.size(); ++j)
                if (sup[i] == sup[j])
                    throw std::invalid_argument("component supports must be pairwise distinct");
        for (const auto& c : components) {
            if (const auto* y = std::get_if<ThreeTwoP2>(&c)) {
                if (y->direction == y->support)
                    throw std::invalid_argument("(3,2)-point direction equals support");
            } else if (const auto* j = std::get_if<Jet>(&c)) {
                if (j->through == j->support)
                    throw std::invalid_argument("jet through-point equals support");
                if (j->m < 1) throw std::invalid_argument("jet length must be >= 1");
            } else if (const auto* cj = std::get_if<CrossJet>(&c)) {
                if (cj->m1 < 1 || cj->m2 < 1)
                    throw std::invalid_argument("cross-jet orders must be >= 1");
                if (cj->dir1 == cj->support || cj->dir2 == cj->support)
                    throw std::invalid_argument("cross-jet direction equals support");
                if (det3(cj->support.c, cj->dir1.c, cj->dir2.c).is_zero())
                    throw std::invalid_argument("cross-jet lines coincide");
            } else if (const auto* f = std::get_if<FatPoint>(&c)) {
                if (f->multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
            }
        }
    } else {
        std::vector<BiPoint> sup;
        for (const auto& c : components) sup.push_back(std::get<ThreeTwoP1P1>(c).support);
        for (std::size_t i = 0; i < sup.size(); ++i)
            for (std::size_t j = i + 1; j < sup.size(); ++j)
                if (sup[i] == sup[j])
                    throw std::invalid_argument("component supports must be pairwise distinct");
        for (const auto& c : components) {
            const auto& y = std::get<ThreeTwoP1P1>(c);
            if (y.cosupport.left == y.support.left || y.cosupport.right == y.support.right)
                throw std::invalid_argument("(3,2)-point cosupport factor equals support factor");
        }
    }
}

int SchemeSpec::total_length() const {
    int n = 0;
    for (const auto& c : components) n += component_length(c);
    return n;
}

namespace {

int single_nonzero_index(const std::array<Fp, 3>& v) {
    int idx = -1;
    for (int c = 0; c < 3; ++c) {
        if (!v[c].is_zero()) {
            if (idx >= 0) return -1;
            idx = c;
        }
    }
    return idx;
}

// powers p^0 .. p^d of every coordinate
std::array<std::vector<Fp>, 3> power_table(const std::array<Fp, 3>& p, int d) {
    std::array<std::vector<Fp>, 3> pw;
    for (int c = 0; c < 3; ++c) {
        pw[c].resize(d + 1);
        pw[c][0] = Fp(1);
        for (int k = 1; k <= d; ++k) pw[c][k] = pw[c][k - 1] * p[c];
    }
    return pw;
}

}  // namespace

Row hasse_row(const MonomialBasis& basis, const std::array<Fp, 3>& p,
              const std::array<Fp, 3>& u, const std::array<Fp, 3>& w, int i, int j) {
    if (basis.ambient() != Ambient::Plane)
        throw AmbientMismatch("hasse_row wants a plane basis");
    const int d = basis.degree();
    Row out(basis.size());

    // Axis-aligned step directions admit a closed form per monomial; this is
    // the fat-point case, where the row count grows quadratically in the
    // multiplicity.
    const int cu = i == 0 ? -2 : single_nonzero_index(u);
    const int cw = j == 0 ? -2 : single_nonzero_index(w);
    if (cu != -1 && cw != -1 && (cu < 0 || cw < 0 || cu != cw)) {
        const auto pw = power_table(p, d);
        Fp ui(1), wj(1);
        for (int t = 0; t < i; ++t) ui *= u[cu];
        for (int t = 0; t < j; ++t) wj *= w[cw];
        for (std::size_t mi = 0; mi < basis.size(); ++mi) {
            const Exps& e = basis.exponent(mi);
            Fp term = ui * wj;
            bool dead = false;
            for (int c = 0; c < 3 && !dead; ++c) {
                int drop = 0;
                if (c == cu) {
                    if (e[c] < i) dead = true;
                    term *= binomial_fp(e[c], i);
                    drop += i;
                }
                if (c == cw) {
                    if (e[c] - drop < j)
                        dead = true;
                    else
                        term *= binomial_fp(e[c] - drop, j);
                    drop += j;
                }
                if (!dead) term *= pw[c][e[c] - drop];
            }
            out[mi] = dead ? Fp() : term;
        }
        return out;
    }

    // general directions: per-coordinate trinomial tables convolved over the
    // three coordinates, truncated beyond (i, j)
    std::vector<std::vector<Fp>> conv(i + 1, std::vector<Fp>(j + 1));
    std::vector<std::vector<Fp>> next(i + 1, std::vector<Fp>(j + 1));
    for (std::size_t mi = 0; mi < basis.size(); ++mi) {
        const Exps& e = basis.exponent(mi);
        for (auto& row : conv) std::fill(row.begin(), row.end(), Fp());
        conv[0][0] = Fp(1);
        for (int c = 0; c < 3; ++c) {
            const int ec = e[c];
            for (auto& row : next) std::fill(row.begin(), row.end(), Fp());
            for (int ic = 0; ic <= std::min(i, ec); ++ic) {
                for (int jc = 0; jc <= std::min(j, ec - ic); ++jc) {
                    // C(ec, ic) * C(ec-ic, jc) * p^(ec-ic-jc) * u^ic * w^jc
                    Fp term = binomial_fp(ec, ic) * binomial_fp(ec - ic, jc);
                    for (int t = 0; t < ec - ic - jc; ++t) term *= p[c];
                    for (int t = 0; t < ic; ++t) term *= u[c];
                    for (int t = 0; t < jc; ++t) term *= w[c];
                    if (term.is_zero()) continue;
                    for (int a = 0; a + ic <= i; ++a)
                        for (int b = 0; b + jc <= j; ++b)
                            if (!conv[a][b].is_zero())
                                next[a + ic][b + jc] += conv[a][b] * term;
                }
            }
            std::swap(conv, next);
        }
        out[mi] = conv[i][j];
    }
    return out;
}

namespace {

// two coordinate vectors completing the support to a basis; with the support
// normalized this is always the pair of non-pivot axes
std::pair<std::array<Fp, 3>, std::array<Fp, 3>> complete_axes(const PlanePoint& p) {
    int pivot = 0;
    while (p.c[pivot].is_zero()) ++pivot;
    std::array<Fp, 3> u{}, w{};
    int k = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        if (k++ == 0)
            u[i] = Fp(1);
        else
            w[i] = Fp(1);
    }
    return {u, w};
}

std::array<Fp, 3> complete_to_basis(const PlanePoint& p, const std::array<Fp, 3>& w) {
    for (int k = 0; k < 3; ++k) {
        std::array<Fp, 3> v{};
        v[k] = Fp(1);
        if (!det3(p.c, w, v).is_zero()) return v;
    }
    throw std::invalid_argument("degenerate direction");
}

}  // namespace

Mat rows_fat_point(const PlanePoint& p, int m, int d) {
    if (m < 1 || d < 0) throw std::invalid_argument("rows_fat_point wants m >= 1, d >= 0");
    const MonomialBasis basis = MonomialBasis::plane(d);
    auto [u, w] = complete_axes(p);
    Mat rows(basis.size());
    for (int total = 0; total < m; ++total)
        for (int i = 0; i <= total; ++i)
            rows.add_row(hasse_row(basis, p.c, u, w, i, total - i));
    return rows;
}

Mat rows_32_p2(const ThreeTwoP2& y, int d) {
    if (d < 1) throw std::invalid_argument("rows_32_p2 wants d >= 1");
    const MonomialBasis basis = MonomialBasis::plane(d);
    const std::array<Fp, 3> w = y.direction.c;  // along the scheme's line
    const std::array<Fp, 3> v = complete_to_basis(y.support, w);
    Mat rows(basis.size());
    for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}})
        rows.add_row(hasse_row(basis, y.support.c, v, w, i, j));
    return rows;
}

Mat rows_jet(const Jet& jet, int d) {
    if (jet.m < 1 || d < 0) throw std::invalid_argument("rows_jet wants m >= 1, d >= 0");
    const MonomialBasis basis = MonomialBasis::plane(d);
    const std::array<Fp, 3> zero{};
    Mat rows(basis.size());
    for (int k = 0; k < jet.m; ++k)
        rows.add_row(hasse_row(basis, jet.support.c, zero, jet.through.c, 0, k));
    return rows;
}

Mat rows_cross_jet(const CrossJet& cj, int d) {
    if (cj.m1 < 1 || cj.m2 < 1) throw std::invalid_argument("cross-jet orders must be >= 1");
    const MonomialBasis basis = MonomialBasis::plane(d);
    // u steps along line 2, w along line 1
    Mat rows(basis.size());
    for (int i = 0; i < cj.m1; ++i)
        for (int j = 0; j < cj.m2; ++j)
            rows.add_row(hasse_row(basis, cj.support.c, cj.dir2.c, cj.dir1.c, i, j));
    return rows;
}

namespace {
std::array<Fp, 2> dual2(const std::array<Fp, 2>& v) {
    return {v[1], -v[0]};  // vanishes on v
}
}  // namespace

Mat rows_32_p1p1(const ThreeTwoP1P1& y, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("rows_32_p1p1 wants a, b >= 1");
    const PolyVec l1 = bi_linear_x(y.support.left);
    const PolyVec l2 = bi_linear_y(y.support.right);
    // m1 enters negated: with the apolar pairing of pairing_weights() this
    // makes the row span's perp exactly the ideal piece of the component
    const PolyVec m1 = bi_linear_x(y.cosupport.left) * Fp(-1);
    const PolyVec m2 = bi_linear_y(y.cosupport.right);

    const PolyVec l1a = poly_pow(l1, a);
    const PolyVec l1a1 = a >= 2 ? poly_pow(l1, a - 1) : l1;
    const PolyVec l2b = poly_pow(l2, b);
    const PolyVec l2b1 = b >= 2 ? poly_pow(l2, b - 1) : l2;

    std::vector<PolyVec> rows;
    rows.push_back(poly_mul(l1a, l2b));
    rows.push_back(b == 1 ? poly_mul(l1a, m2) : poly_mul(poly_mul(l1a, l2b1), m2));
    rows.push_back(a == 1 ? poly_mul(m1, l2b) : poly_mul(poly_mul(l1a1, m1), l2b));

    const PolyVec mixed =
        poly_mul(a == 1 ? m1 : poly_mul(l1a1, m1), b == 1 ? m2 : poly_mul(l2b1, m2));
    PolyVec r4 = mixed * Fp(a);
    if (a >= 2) {
        const PolyVec sq = poly_mul(m1, m1);
        const PolyVec head = a == 2 ? sq : poly_mul(poly_pow(l1, a - 2), sq);
        r4 = r4 + poly_mul(head, l2b) * Fp(a - 1);
    }
    rows.push_back(r4);
    PolyVec r5 = mixed * Fp(b);
    if (b >= 2) {
        const PolyVec sq = poly_mul(m2, m2);
        const PolyVec tail = b == 2 ? sq : poly_mul(poly_pow(l2, b - 2), sq);
        r5 = r5 + poly_mul(l1a, tail) * Fp(b - 1);
    }
    rows.push_back(r5);

    Mat out(MonomialBasis::biprojective(a, b).size());
    for (auto& r : rows) out.add_row(std::move(r.coeffs));
    return out;
}

std::vector<Fp> pairing_weights(const MonomialBasis& basis) {
    if (basis.ambient() != Ambient::Biprojective)
        throw AmbientMismatch("pairing weights are defined on bigraded pieces");
    const auto [a, b] = basis.bidegree();
    std::vector<Fp> w(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Exps& e = basis.exponent(i);
        w[i] = (binomial_fp(a, e[0]) * binomial_fp(b, e[2])).inv();
    }
    return w;
}

PolyVec direction_form_32(const ThreeTwoP1P1& y, int a, int b) {
    const PolyVec xt = bi_linear_x(dual2(y.support.left));
    const PolyVec yt = bi_linear_y(dual2(y.support.right));
    const PolyVec mt1 = bi_linear_x(dual2(y.cosupport.left));
    const PolyVec mt2 = bi_linear_y(dual2(y.cosupport.right));
    return poly_mul(xt, mt2) * Fp(a) + poly_mul(yt, mt1) * Fp(b);
}

ConditionMatrix condition_matrix(const SchemeSpec& x, int d) {
    if (x.ambient != Ambient::Plane)
        throw AmbientMismatch("plane degree given for a biprojective scheme");
    x.validate();
    const MonomialBasis basis = MonomialBasis::plane(d);
    Mat m(basis.size());
    for (const auto& c : x.components) {
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, FatPoint>)
                    m.append(rows_fat_point(v.support, v.multiplicity, d));
                else if constexpr (std::is_same_v<T, SimplePoint>)
                    m.append(rows_fat_point(v.support, 1, d));
                else if constexpr (std::is_same_v<T, ThreeTwoP2>)
                    m.append(rows_32_p2(v, d));
                else if constexpr (std::is_same_v<T, Jet>)
                    m.append(rows_jet(v, d));
                else if constexpr (std::is_same_v<T, CrossJet>)
                    m.append(rows_cross_jet(v, d));
                else
                    throw AmbientMismatch("biprojective component in plane scheme");
            },
            c);
    }
    return ConditionMatrix{basis, std::move(m)};
}

ConditionMatrix condition_matrix(const SchemeSpec& x, int a, int b) {
    if (x.ambient != Ambient::Biprojective)
        throw AmbientMismatch("bidegree given for a plane scheme");
    x.validate();
    const MonomialBasis basis = MonomialBasis::biprojective(a, b);
    const std::vector<Fp> weights = pairing_weights(basis);
    Mat m(basis.size());
    for (const auto& c : x.components)
        m.append(rows_32_p1p1(std::get<ThreeTwoP1P1>(c), a, b));
    // as functionals on forms: pair through the apolar weights so that the
    // kernel is the ideal piece in plain coordinates
    m.scale_columns(weights);
    return ConditionMatrix{basis, std::move(m)};
}

namespace {

std::array<Fp, 3> parse_coords3(const nlohmann::json& j, Rng& rng) {
    if (j.is_string() && j.get<std::string>() == "rand")
        return PlanePoint::random(rng).c;
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("plane point wants 3 integer coordinates or \"rand\"");
    return {Fp(j[0].get<std::int64_t>()), Fp(j[1].get<std::int64_t>()),
            Fp(j[2].get<std::int64_t>())};
}

PlanePoint parse_plane_point(const nlohmann::json& j, Rng& rng) {
    return PlanePoint::make(parse_coords3(j, rng));
}

BiPoint parse_bi_point(const nlohmann::json& j, Rng& rng) {
    if (j.is_string() && j.get<std::string>() == "rand") return BiPoint::random(rng);
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("biprojective point wants [[s0,s1],[t0,t1]] or \"rand\"");
    auto factor = [&](const nlohmann::json& f) -> std::array<Fp, 2> {
        if (!f.is_array() || f.size() != 2)
            throw std::invalid_argument("P^1 factor wants 2 integer coordinates");
        return {Fp(f[0].get<std::int64_t>()), Fp(f[1].get<std::int64_t>())};
    };
    return BiPoint::make(factor(j[0]), factor(j[1]));
}

}  // namespace

SchemeSpec scheme_from_json(const std::string& text, Rng& rng) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    SchemeSpec spec;
    const std::string amb = doc.at("ambient").get<std::string>();
    if (amb == "plane")
        spec.ambient = Ambient::Plane;
    else if (amb == "p1xp1")
        spec.ambient = Ambient::Biprojective;
    else
        throw std::invalid_argument("ambient must be \"plane\" or \"p1xp1\"");
    for (const auto& c : doc.at("components")) {
        const std::string type = c.at("type").get<std::string>();
        if (type == "fat") {
            spec.components.push_back(
                FatPoint{c.at("m").get<int>(), parse_plane_point(c.at("support"), rng)});
        } else if (type == "simple") {
            spec.components.push_back(SimplePoint{parse_plane_point(c.at("support"), rng)});
        } else if (type == "32") {
            spec.components.push_back(ThreeTwoP2{parse_plane_point(c.at("support"), rng),
                                                 parse_plane_point(c.at("direction"), rng)});
        } else if (type == "jet") {
            spec.components.push_back(Jet{c.at("m").get<int>(),
                                          parse_plane_point(c.at("support"), rng),
                                          parse_plane_point(c.at("through"), rng)});
        } else if (type == "crossjet") {
            spec.components.push_back(CrossJet{
                c.at("m1").get<int>(), c.at("m2").get<int>(),
                parse_plane_point(c.at("support"), rng), parse_plane_point(c.at("dir1"), rng),
                parse_plane_point(c.at("dir2"), rng)});
        } else if (type == "32bi") {
            spec.components.push_back(ThreeTwoP1P1{parse_bi_point(c.at("support"), rng),
                                                   parse_bi_point(c.at("cosupport"), rng)});
        } else {
            throw std::invalid_argument("unknown component type: " + type);
        }
    }
    spec.validate();
    return spec;
}

ThreeTwoP2 random_32_p2(Rng& rng) {
    const PlanePoint p = PlanePoint::random(rng);
    for (;;) {
        const PlanePoint d = PlanePoint::random(rng);
        if (!(d == p)) return ThreeTwoP2{p, d};
    }
}

ThreeTwoP1P1 random_32_p1p1(Rng& rng) {
    const BiPoint p = BiPoint::random(rng);
    for (;;) {
        const BiPoint m = BiPoint::random(rng);
        if (m.left == p.left || m.right == p.right) continue;
        return ThreeTwoP1P1{p, m};
    }
}

}  // namespace svt
