#include "svt/idealcalc.hpp"

namespace svt {

namespace {

void check_same(const MonomialBasis& a, const MonomialBasis& b) {
    if (!(a == b)) throw BasisMismatch();
}

bool degree_fits(const MonomialBasis& gen, const MonomialBasis& target) {
    if (gen.ambient() != target.ambient()) return false;
    if (gen.ambient() == Ambient::Plane) return gen.degree() <= target.degree();
    auto [ga, gb] = gen.bidegree();
    auto [ta, tb] = target.bidegree();
    return ga <= ta && gb <= tb;
}

MonomialBasis complement_basis(const MonomialBasis& gen, const MonomialBasis& target) {
    if (gen.ambient() == Ambient::Plane)
        return MonomialBasis::plane(target.degree() - gen.degree());
    auto [ga, gb] = gen.bidegree();
    auto [ta, tb] = target.bidegree();
    return MonomialBasis::biprojective(ta - ga, tb - gb);
}

MonomialBasis sum_basis(const MonomialBasis& f, const MonomialBasis& g) {
    if (f.ambient() == Ambient::Plane)
        return MonomialBasis::plane(f.degree() + g.degree());
    auto [fa, fb] = f.bidegree();
    auto [ga, gb] = g.bidegree();
    return MonomialBasis::biprojective(fa + ga, fb + gb);
}

}  // namespace

SubspaceBasis make_subspace(MonomialBasis basis, const Mat& rows) {
    return SubspaceBasis{std::move(basis), rows.rref()};
}

SubspaceBasis full_space(const MonomialBasis& basis) {
    return SubspaceBasis{basis, Mat::identity(basis.size())};
}

SubspaceBasis zero_space(const MonomialBasis& basis) {
    return SubspaceBasis{basis, Mat(basis.size())};
}

SubspaceBasis ideal_degree_piece(const GeneratorIdeal& ideal, const MonomialBasis& target) {
    Mat rows(target.size());
    for (const auto& g : ideal.gens) {
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (!degree_fits(g.basis, target)) continue;
        const MonomialBasis comp = complement_basis(g.basis, target);
        for (std::size_t e = 0; e < comp.size(); ++e) {
            const PolyVec m = monomial(comp, comp.exponent(e));
            rows.add_row(poly_mul(g, m).coeffs);
        }
    }
    return make_subspace(target, rows);
}

SubspaceBasis piece_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    check_same(a.basis, b.basis);
    Mat rows = a.mat;
    rows.append(b.mat);
    return make_subspace(a.basis, rows);
}

SubspaceBasis piece_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    check_same(a.basis, b.basis);
    // x lies in both row spaces iff both annihilators kill it
    Mat ann = a.mat.nullspace();
    ann.append(b.mat.nullspace());
    return make_subspace(a.basis, ann.nullspace());
}

bool piece_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    check_same(a.basis, b.basis);
    return a.mat == b.mat;
}

bool piece_contains(const SubspaceBasis& big, const SubspaceBasis& small) {
    check_same(big.basis, small.basis);
    return stacked_rank(big.mat, small.mat) == big.dim();
}

SubspaceBasis piece_colon(const GeneratorIdeal& ideal, const PolyVec& g,
                          const MonomialBasis& target) {
    if (g.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
    const MonomialBasis bigger = sum_basis(target, g.basis);
    const SubspaceBasis piece = ideal_degree_piece(ideal, bigger);
    const Mat ann = piece.mat.nullspace();
    // multiplication-by-g matrix, columns indexed by the target basis
    Mat mul_t(bigger.size());  // row e = coeffs of g * x^e
    for (std::size_t e = 0; e < target.size(); ++e)
        mul_t.add_row(poly_mul(g, monomial(target, target.exponent(e))).coeffs);
    const Mat conditions = ann * mul_t.transpose();
    return make_subspace(target, conditions.nullspace());
}

std::pair<PolyVec, PolyVec> point_ideal_forms(const PlanePoint& p) {
    Mat m(3);
    m.add_row({p.c[0], p.c[1], p.c[2]});
    const Mat ker = m.nullspace();
    return {plane_linear({ker.at(0, 0), ker.at(0, 1), ker.at(0, 2)}),
            plane_linear({ker.at(1, 0), ker.at(1, 1), ker.at(1, 2)})};
}

namespace {

std::array<Fp, 3> cross(const std::array<Fp, 3>& a, const std::array<Fp, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

PolyVec line_dual_form(const PlanePoint& a, const PlanePoint& b) {
    const auto d = cross(a.c, b.c);
    if (d[0].is_zero() && d[1].is_zero() && d[2].is_zero())
        throw std::invalid_argument("coincident points do not span a line");
    return plane_linear(d);
}

GeneratorIdeal fat_point_ideal(const PlanePoint& p, int m) {
    auto [f1, f2] = point_ideal_forms(p);
    GeneratorIdeal ideal{Ambient::Plane, {}};
    for (int i = 0; i <= m; ++i) {
        PolyVec g = i == 0 ? poly_pow(f2, m) : (i == m ? poly_pow(f1, m) : poly_mul(poly_pow(f1, i), poly_pow(f2, m - i)));
        ideal.gens.push_back(std::move(g));
    }
    return ideal;
}

}  // namespace

GeneratorIdeal component_ideal(const SchemeComponent& c) {
    if (component_ambient(c) != Ambient::Plane)
        throw AmbientMismatch("biprojective component needs the bidegree overload");
    return std::visit(
        [](const auto& v) -> GeneratorIdeal {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FatPoint>) {
                return fat_point_ideal(v.support, v.multiplicity);
            } else if constexpr (std::is_same_v<T, SimplePoint>) {
                return fat_point_ideal(v.support, 1);
            } else if constexpr (std::is_same_v<T, ThreeTwoP2>) {
                GeneratorIdeal ideal = fat_point_ideal(v.support, 3);
                ideal.gens.push_back(poly_pow(line_dual_form(v.support, v.direction), 2));
                return ideal;
            } else if constexpr (std::is_same_v<T, Jet>) {
                const PolyVec line = line_dual_form(v.support, v.through);
                auto [f1, f2] = point_ideal_forms(v.support);
                // second generator: a form through the support independent of the line
                Mat probe(3);
                probe.add_row(line.coeffs);
                probe.add_row(f1.coeffs);
                const PolyVec other = probe.rank() == 2 ? f1 : f2;
                return GeneratorIdeal{Ambient::Plane, {line, poly_pow(other, v.m)}};
            } else if constexpr (std::is_same_v<T, CrossJet>) {
                return GeneratorIdeal{Ambient::Plane,
                                      {poly_pow(line_dual_form(v.support, v.dir1), v.m1),
                                       poly_pow(line_dual_form(v.support, v.dir2), v.m2)}};
            } else {
                throw AmbientMismatch("unreachable");
            }
        },
        c);
}

GeneratorIdeal component_ideal(const SchemeComponent& c, int a, int b) {
    if (component_ambient(c) == Ambient::Plane) return component_ideal(c);
    const auto& y = std::get<ThreeTwoP1P1>(c);
    const PolyVec xt = bi_linear_x({y.support.left[1], -y.support.left[0]});
    const PolyVec yt = bi_linear_y({y.support.right[1], -y.support.right[0]});
    GeneratorIdeal ideal{Ambient::Biprojective, {}};
    ideal.gens.push_back(poly_pow(xt, 3));
    ideal.gens.push_back(poly_mul(poly_pow(xt, 2), yt));
    ideal.gens.push_back(poly_mul(xt, poly_pow(yt, 2)));
    ideal.gens.push_back(poly_pow(yt, 3));
    ideal.gens.push_back(poly_pow(direction_form_32(y, a, b), 2));
    return ideal;
}

SubspaceBasis scheme_ideal_piece(const SchemeSpec& x, const MonomialBasis& target) {
    if (x.ambient != target.ambient())
        throw AmbientMismatch("scheme and target degree disagree");
    SubspaceBasis acc = full_space(target);
    for (const auto& c : x.components) {
        GeneratorIdeal ideal =
            target.ambient() == Ambient::Plane
                ? component_ideal(c)
                : component_ideal(c, target.bidegree().first, target.bidegree().second);
        acc = piece_intersect(acc, ideal_degree_piece(ideal, target));
    }
    return acc;
}

}  // namespace svt
