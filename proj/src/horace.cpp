#include "svt/horace.hpp"

#include <algorithm>

namespace svt {

namespace {

std::array<Fp, 3> cross(const std::array<Fp, 3>& a, const std::array<Fp, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool all_zero(const std::array<Fp, 3>& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

Fp dot(const std::array<Fp, 3>& a, const std::array<Fp, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

LineRef LineRef::through(const PlanePoint& a, const PlanePoint& b) {
    const auto d = cross(a.c, b.c);
    if (all_zero(d)) throw std::invalid_argument("coincident points do not span a line");
    return LineRef{a, b, d};
}

bool LineRef::contains(const PlanePoint& p) const { return dot(dual, p.c).is_zero(); }

PlanePoint LineRef::other_point(const PlanePoint& p) const {
    if (!(p1 == p)) return p1;
    return p2;
}

PlanePoint LineRef::random_point(Rng& rng, const std::vector<PlanePoint>& avoid) const {
    for (;;) {
        const Fp t = rng.fp();
        std::array<Fp, 3> c;
        for (int i = 0; i < 3; ++i) c[i] = p1.c[i] + t * p2.c[i];
        if (all_zero(c)) continue;
        const PlanePoint q = PlanePoint::make(c);
        if (std::find(avoid.begin(), avoid.end(), q) != avoid.end()) continue;
        return q;
    }
}

int TraceScheme::total_length() const {
    int n = 0;
    for (const auto& e : entries) n += e.length;
    return n;
}

namespace {

// a point of the line with the given dual form, distinct from avoid
PlanePoint point_on_dual_line(const std::array<Fp, 3>& dual, const PlanePoint& avoid) {
    Mat m(3);
    m.add_row({dual[0], dual[1], dual[2]});
    const Mat ker = m.nullspace();
    for (std::size_t i = 0; i < ker.nrows(); ++i) {
        const PlanePoint q = PlanePoint::make({ker.at(i, 0), ker.at(i, 1), ker.at(i, 2)});
        if (!(q == avoid)) return q;
    }
    throw std::invalid_argument("degenerate line");
}

std::vector<int> expand_j(const SchemeSpec& x, const std::vector<int>& j) {
    if (j.empty()) return std::vector<int>(x.components.size(), 1);
    if (j.size() != x.components.size())
        throw std::invalid_argument("j-vector length must match component count");
    for (int v : j)
        if (v < 1) throw std::invalid_argument("j entries must be >= 1");
    return j;
}

// express line.dual as alpha*d1 + beta*d2
std::pair<Fp, Fp> line_in_pencil(const std::array<Fp, 3>& d1, const std::array<Fp, 3>& d2,
                                 const std::array<Fp, 3>& target) {
    Mat m(3);
    m.add_row({d1[0], d1[1], d1[2]});
    m.add_row({d2[0], d2[1], d2[2]});
    m.add_row({target[0], target[1], target[2]});
    const Mat ker = m.transpose().nullspace();
    for (std::size_t i = 0; i < ker.nrows(); ++i) {
        if (!ker.at(i, 2).is_zero()) {
            const Fp g = -ker.at(i, 2).inv();
            return {ker.at(i, 0) * g, ker.at(i, 1) * g};
        }
    }
    throw NotVerticallyGraded("line does not lie in the pencil through the support");
}

struct Rewrite {
    std::vector<SchemeComponent> residue;  // empty means the component disappears
    std::optional<TraceEntry> trace;
};

Rewrite rewrite_component(const SchemeComponent& comp, const LineRef& line, int j) {
    if (component_ambient(comp) != Ambient::Plane)
        throw NotVerticallyGraded("residue and trace act on plane schemes");

    const PlanePoint sup = std::visit(
        [](const auto& v) -> PlanePoint {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ThreeTwoP1P1>)
                throw NotVerticallyGraded("unreachable");
            else
                return v.support;
        },
        comp);

    if (!line.contains(sup)) {
        if (j != 1)
            throw NotVerticallyGraded("components off the line only admit j = 1");
        return Rewrite{{comp}, std::nullopt};
    }

    if (const auto* f = std::get_if<FatPoint>(&comp)) {
        if (j != 1) throw NotVerticallyGraded("fat points only admit j = 1");
        Rewrite r;
        if (f->multiplicity > 1)
            r.residue.push_back(FatPoint{f->multiplicity - 1, f->support});
        r.trace = TraceEntry{f->support, f->multiplicity};
        return r;
    }
    if (std::holds_alternative<SimplePoint>(comp)) {
        if (j != 1) throw NotVerticallyGraded("simple points only admit j = 1");
        return Rewrite{{}, TraceEntry{sup, 1}};
    }
    if (const auto* y = std::get_if<ThreeTwoP2>(&comp)) {
        const bool along = line.contains(y->direction);
        if (along) {
            // ideal (z1^2, z1 z2^2, z2^3) graded with base the direction line
            if (j == 1)
                return Rewrite{{Jet{2, sup, line.other_point(sup)}}, TraceEntry{sup, 3}};
            if (j == 2)
                return Rewrite{{Jet{3, sup, line.other_point(sup)}}, TraceEntry{sup, 2}};
            throw NotVerticallyGraded("(3,2)-point along the line admits j <= 2");
        }
        if (j == 1 || j == 2)
            return Rewrite{{FatPoint{2, sup}}, TraceEntry{sup, 2}};
        if (j == 3)
            return Rewrite{{CrossJet{2, 2, sup, y->direction, line.other_point(sup)}},
                           TraceEntry{sup, 1}};
        throw NotVerticallyGraded("(3,2)-point transversal to the line admits j <= 3");
    }
    if (const auto* jt = std::get_if<Jet>(&comp)) {
        if (j != 1) throw NotVerticallyGraded("jets only admit j = 1");
        if (line.contains(jt->through)) {
            // the jet lies inside the line: residue empty, trace is the jet
            return Rewrite{{}, TraceEntry{sup, jt->m}};
        }
        Rewrite r;
        if (jt->m > 1) r.residue.push_back(Jet{jt->m - 1, sup, jt->through});
        r.trace = TraceEntry{sup, 1};
        return r;
    }
    if (const auto* cj = std::get_if<CrossJet>(&comp)) {
        if (j != 1) throw NotVerticallyGraded("cross-jets only admit j = 1");
        const bool on1 = line.contains(cj->dir1);
        const bool on2 = line.contains(cj->dir2);
        if (on1 || on2) {
            // residue with respect to one of its own lines
            const int keep = on1 ? cj->m2 : cj->m1;
            const int drop = (on1 ? cj->m1 : cj->m2) - 1;
            const PlanePoint line_dir = on1 ? cj->dir1 : cj->dir2;
            Rewrite r;
            if (drop >= 2)
                r.residue.push_back(on1 ? CrossJet{drop, keep, sup, cj->dir1, cj->dir2}
                                        : CrossJet{keep, drop, sup, cj->dir1, cj->dir2});
            else if (drop == 1)
                r.residue.push_back(Jet{keep, sup, line_dir});
            r.trace = TraceEntry{sup, keep};
            return r;
        }
        if (cj->m1 != 2 || cj->m2 != 2)
            throw NotVerticallyGraded("only (2,2)-jets admit a residue by a third line");
        // residue is a 2-jet along the reflected line alpha*l1 - beta*l2
        const auto d1 = cross(sup.c, cj->dir1.c);
        const auto d2 = cross(sup.c, cj->dir2.c);
        auto [alpha, beta] = line_in_pencil(d1, d2, line.dual);
        std::array<Fp, 3> refl;
        for (int i = 0; i < 3; ++i) refl[i] = alpha * d1[i] - beta * d2[i];
        if (all_zero(refl)) throw NotVerticallyGraded("reflected line degenerates");
        return Rewrite{{Jet{2, sup, point_on_dual_line(refl, sup)}}, TraceEntry{sup, 2}};
    }
    throw NotVerticallyGraded("unsupported component type");
}

}  // namespace

SchemeSpec residue_scheme(const SchemeSpec& x, const LineRef& line, const std::vector<int>& j) {
    const std::vector<int> jj = expand_j(x, j);
    SchemeSpec out;
    out.ambient = Ambient::Plane;
    for (std::size_t i = 0; i < x.components.size(); ++i) {
        Rewrite r = rewrite_component(x.components[i], line, jj[i]);
        for (auto& c : r.residue) out.components.push_back(std::move(c));
    }
    return out;
}

TraceScheme trace_scheme(const SchemeSpec& x, const LineRef& line, const std::vector<int>& j) {
    const std::vector<int> jj = expand_j(x, j);
    TraceScheme out{line, {}};
    for (std::size_t i = 0; i < x.components.size(); ++i) {
        Rewrite r = rewrite_component(x.components[i], line, jj[i]);
        if (r.trace) out.entries.push_back(*r.trace);
    }
    return out;
}

namespace {

// row of the functional "coefficient of eps^k in g(q + eps*u)" on binary
// forms of degree d
Row binary_jet_row(int d, const std::array<Fp, 2>& q, const std::array<Fp, 2>& u, int k) {
    Row out(d + 1);
    for (int e = 0; e <= d; ++e) {
        // monomial s^(d-e) t^e at (q0 + eps u0, q1 + eps u1)
        Fp acc;
        for (int k0 = 0; k0 <= std::min(k, d - e); ++k0) {
            const int k1 = k - k0;
            if (k1 > e) continue;
            Fp term = binomial_fp(d - e, k0) * binomial_fp(e, k1);
            for (int t = 0; t < d - e - k0; ++t) term *= q[0];
            for (int t = 0; t < k0; ++t) term *= u[0];
            for (int t = 0; t < e - k1; ++t) term *= q[1];
            for (int t = 0; t < k1; ++t) term *= u[1];
            acc += term;
        }
        out[e] = acc;
    }
    return out;
}

}  // namespace

int trace_rank(const TraceScheme& t, int d) {
    if (d < 0) throw std::invalid_argument("trace_rank wants d >= 0");
    Mat rows(d + 1);
    for (const auto& e : t.entries) {
        // coordinates of the support in the line's spanning frame
        Mat m(3);
        m.add_row({t.line.p1.c[0], t.line.p1.c[1], t.line.p1.c[2]});
        m.add_row({t.line.p2.c[0], t.line.p2.c[1], t.line.p2.c[2]});
        m.add_row({e.support.c[0], e.support.c[1], e.support.c[2]});
        const Mat ker = m.transpose().nullspace();
        std::array<Fp, 2> q{};
        bool found = false;
        for (std::size_t i = 0; i < ker.nrows() && !found; ++i) {
            if (!ker.at(i, 2).is_zero()) {
                const Fp g = -ker.at(i, 2).inv();
                q = {ker.at(i, 0) * g, ker.at(i, 1) * g};
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("trace support does not lie on the line");
        const std::array<Fp, 2> u = q[1].is_zero() ? std::array<Fp, 2>{Fp(), Fp(1)}
                                                   : std::array<Fp, 2>{Fp(1), Fp()};
        for (int k = 0; k < e.length; ++k) rows.add_row(binary_jet_row(d, q, u, k));
    }
    return static_cast<int>(rows.rank());
}

namespace {

int dim_linsys_plane(const SchemeSpec& x, int d) {
    const ConditionMatrix cm = condition_matrix(x, d);
    return static_cast<int>(cm.basis.size() - cm.matrix.rank());
}

}  // namespace

bool is_fixed_component(const SchemeSpec& x, const LineRef& line, int d) {
    if (d < 1) throw std::invalid_argument("is_fixed_component wants d >= 1");
    const SchemeSpec res = residue_scheme(x, line);
    return dim_linsys_plane(x, d) == dim_linsys_plane(res, d - 1);
}

HoraceStepResult horace_step_check(const SchemeSpec& x, const SchemeSpec& ytilde,
                                   const LineRef& line, const std::vector<int>& j, int d) {
    if (d < 1) throw std::invalid_argument("horace_step_check wants d >= 1");
    for (const auto& c : ytilde.components) {
        const PlanePoint sup = std::visit(
            [](const auto& v) -> PlanePoint {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, ThreeTwoP1P1>)
                    throw NotVerticallyGraded("plane schemes only");
                else
                    return v.support;
            },
            c);
        if (!line.contains(sup))
            throw NotVerticallyGraded("ytilde components must be supported on the line");
    }

    HoraceStepResult result;

    TraceScheme trace = trace_scheme(x, line);
    {
        const TraceScheme ty = trace_scheme(ytilde, line, j);
        trace.entries.insert(trace.entries.end(), ty.entries.begin(), ty.entries.end());
    }
    result.trace_length = trace.total_length();
    result.trace_rank = trace_rank(trace, d);
    result.trace_ok = result.trace_rank == result.trace_length;

    SchemeSpec residue = residue_scheme(x, line);
    {
        const SchemeSpec ry = residue_scheme(ytilde, line, j);
        residue.components.insert(residue.components.end(), ry.components.begin(),
                                  ry.components.end());
    }
    result.residue_length = residue.total_length();
    const ConditionMatrix cm = condition_matrix(residue, d - 1);
    result.residue_rank = static_cast<int>(cm.matrix.rank());
    result.residue_ok = result.residue_rank == result.residue_length;

    const int trace_dim = (d + 1) - result.trace_rank;
    const int residue_dim = static_cast<int>(cm.basis.size()) - result.residue_rank;
    result.empty_case = trace_dim == 0 && residue_dim == 0;
    result.conclusion = result.trace_ok && result.residue_ok;
    return result;
}

bool verify_degeneration(int samples, int dmax, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("verify_degeneration wants samples >= 1");
    Rng rng(derive_seed(seed, {0xde6e}));
    const PolyVec z0 = plane_linear({Fp(1), Fp(), Fp()});
    const PolyVec z1 = plane_linear({Fp(), Fp(1), Fp()});
    const PolyVec z2 = plane_linear({Fp(), Fp(), Fp(1)});
    const PolyVec z2sq = poly_pow(z2, 2);
    for (int s = 0; s < samples; ++s) {
        const Fp lambda = rng.fp_nonzero();
        const GeneratorIdeal i1{Ambient::Plane, {z2sq, z1 + z0 * lambda}};
        const GeneratorIdeal i2{Ambient::Plane, {z2sq, z1 + z0 * (-lambda)}};
        const GeneratorIdeal family{
            Ambient::Plane,
            {z2sq, poly_pow(z1, 2) + poly_pow(z0, 2) * (-(lambda * lambda))}};
        for (int d = 0; d <= dmax; ++d) {
            const MonomialBasis basis = MonomialBasis::plane(d);
            const SubspaceBasis lhs = piece_intersect(ideal_degree_piece(i1, basis),
                                                      ideal_degree_piece(i2, basis));
            if (!piece_equal(lhs, ideal_degree_piece(family, basis))) return false;
        }
    }
    // the lambda = 0 member of the family is the (2,2)-jet
    const GeneratorIdeal limit{Ambient::Plane, {z2sq, poly_pow(z1, 2)}};
    const GeneratorIdeal crossjet{Ambient::Plane, {poly_pow(z1, 2), z2sq}};
    for (int d = 0; d <= dmax; ++d) {
        const MonomialBasis basis = MonomialBasis::plane(d);
        if (!piece_equal(ideal_degree_piece(limit, basis), ideal_degree_piece(crossjet, basis)))
            return false;
    }
    return true;
}

namespace {

// rows of `piece` multiplied by g, as a subspace one degree up
SubspaceBasis multiply_piece(const SubspaceBasis& piece, const PolyVec& g) {
    const MonomialBasis target =
        MonomialBasis::plane(piece.basis.degree() + g.basis.degree());
    Mat rows(target.size());
    for (std::size_t i = 0; i < piece.mat.nrows(); ++i) {
        PolyVec f(piece.basis);
        f.coeffs = piece.mat.row(i);
        rows.add_row(poly_mul(f, g).coeffs);
    }
    return make_subspace(target, rows);
}

// degree-d piece of Res^j = I + (I : ell^j) * ell^(j-1)
SubspaceBasis residue_oracle(const GeneratorIdeal& ideal, const PolyVec& ell, int j, int d) {
    const MonomialBasis target = MonomialBasis::plane(d);
    SubspaceBasis acc = ideal_degree_piece(ideal, target);
    if (d - (j - 1) >= 0) {
        const PolyVec ellj = poly_pow(ell, j);
        const SubspaceBasis colon =
            piece_colon(ideal, ellj, MonomialBasis::plane(d - (j - 1)));
        const SubspaceBasis shifted =
            j == 1 ? colon : multiply_piece(colon, poly_pow(ell, j - 1));
        acc = piece_sum(acc, shifted);
    }
    return acc;
}

// restriction of the rows of `piece` to the line, as binary forms in the
// line's spanning frame; rref rows over d+1 columns
Mat restrict_to_line(const SubspaceBasis& piece, const LineRef& line) {
    const int d = piece.basis.degree();
    Mat rows(d + 1);
    for (std::size_t i = 0; i < piece.mat.nrows(); ++i) {
        // f(s*p1 + t*p2) as a binary form in (s, t)
        Row bin(d + 1);
        for (std::size_t mi = 0; mi < piece.basis.size(); ++mi) {
            const Fp c = piece.mat.at(i, mi);
            if (c.is_zero()) continue;
            const Exps& e = piece.basis.exponent(mi);
            // product over coordinates of (p1_c s + p2_c t)^(e_c)
            std::vector<Fp> conv = {Fp(1)};
            for (int coord = 0; coord < 3; ++coord) {
                std::vector<Fp> factor(e[coord] + 1);
                for (int k = 0; k <= e[coord]; ++k) {
                    Fp term = binomial_fp(e[coord], k);
                    for (int t = 0; t < e[coord] - k; ++t) term *= line.p1.c[coord];
                    for (int t = 0; t < k; ++t) term *= line.p2.c[coord];
                    factor[k] = term;
                }
                std::vector<Fp> next(conv.size() + factor.size() - 1);
                for (std::size_t x1 = 0; x1 < conv.size(); ++x1)
                    for (std::size_t x2 = 0; x2 < factor.size(); ++x2)
                        next[x1 + x2] += conv[x1] * factor[x2];
                conv = std::move(next);
            }
            for (int k = 0; k <= d; ++k) bin[k] += c * conv[k];
        }
        rows.add_row(std::move(bin));
    }
    return rows.rref();
}

// span of the binary monomials s^(d-e) t^e with e >= len
Mat binary_tail_span(int d, int len) {
    Mat rows(d + 1);
    for (int e = len; e <= d; ++e) {
        Row r(d + 1);
        r[e] = Fp(1);
        rows.add_row(std::move(r));
    }
    return rows.rref();
}

// residue identity at all degrees <= dmax: rewrite component pieces ==
// colon-ideal oracle == closed-form ideal
bool residue_identity(const SchemeSpec& x, const LineRef& line, int j,
                      const GeneratorIdeal& ideal, const PolyVec& ell,
                      const GeneratorIdeal& closed, int dmax) {
    const SchemeSpec res = residue_scheme(x, line, {j});
    for (int d = 0; d <= dmax; ++d) {
        const MonomialBasis basis = MonomialBasis::plane(d);
        const SubspaceBasis oracle = residue_oracle(ideal, ell, j, d);
        if (!piece_equal(oracle, ideal_degree_piece(closed, basis))) return false;
        if (!piece_equal(oracle, scheme_ideal_piece(res, basis))) return false;
    }
    return true;
}

// trace identity: restriction of (I : ell^(j-1)) to the line == (t^len),
// with len taken from the rewrite table
bool trace_identity(const SchemeSpec& x, const LineRef& line, int j,
                    const GeneratorIdeal& ideal, const PolyVec& ell, int expected_len,
                    int dmax) {
    const TraceScheme tr = trace_scheme(x, line, {j});
    if (tr.entries.size() != 1 || tr.entries[0].length != expected_len) return false;
    for (int d = 0; d <= dmax; ++d) {
        const MonomialBasis basis = MonomialBasis::plane(d);
        const SubspaceBasis colon =
            j == 1 ? ideal_degree_piece(ideal, basis)
                   : piece_colon(ideal, poly_pow(ell, j - 1), basis);
        const Mat restricted = restrict_to_line(colon, line);
        if (!(restricted == binary_tail_span(d, std::min(expected_len, d + 1)))) return false;
    }
    return true;
}

}  // namespace

bool verify_residue_example(int dmax) {
    const PlanePoint p0 = PlanePoint::make({Fp(1), Fp(), Fp()});
    const PlanePoint e1 = PlanePoint::make({Fp(), Fp(1), Fp()});
    const PlanePoint e2 = PlanePoint::make({Fp(), Fp(), Fp(1)});
    const PolyVec z1 = plane_linear({Fp(), Fp(1), Fp()});
    const PolyVec z2 = plane_linear({Fp(), Fp(), Fp(1)});

    // the worked example: support [1:0:0], direction line {z1 = 0}
    const ThreeTwoP2 y{p0, e2};
    SchemeSpec x;
    x.ambient = Ambient::Plane;
    x.components.push_back(y);

    const GeneratorIdeal ideal{
        Ambient::Plane,
        {poly_pow(z1, 2), poly_mul(z1, poly_pow(z2, 2)), poly_pow(z2, 3)}};

    // sanity: the component ideal is (z1^2, z1 z2^2, z2^3) piecewise
    for (int d = 0; d <= dmax; ++d) {
        const MonomialBasis basis = MonomialBasis::plane(d);
        if (!piece_equal(scheme_ideal_piece(x, basis), ideal_degree_piece(ideal, basis)))
            return false;
    }

    const LineRef direction_axis = LineRef::through(p0, e2);   // {z1 = 0}
    const LineRef transversal_axis = LineRef::through(p0, e1); // {z2 = 0}

    auto closed = [](std::vector<PolyVec> gens) {
        return GeneratorIdeal{Ambient::Plane, std::move(gens)};
    };

    // vertically graded with base the direction line
    if (!residue_identity(x, direction_axis, 1, ideal, z1,
                          closed({z1, poly_pow(z2, 2)}), dmax))
        return false;
    if (!trace_identity(x, direction_axis, 1, ideal, z1, 3, dmax)) return false;
    if (!residue_identity(x, direction_axis, 2, ideal, z1,
                          closed({z1, poly_pow(z2, 3)}), dmax))
        return false;
    if (!trace_identity(x, direction_axis, 2, ideal, z1, 2, dmax)) return false;

    // vertically graded with base the transversal axis
    const std::vector<PolyVec> double_point = {poly_pow(z1, 2), poly_mul(z1, z2),
                                               poly_pow(z2, 2)};
    if (!residue_identity(x, transversal_axis, 1, ideal, z2, closed(double_point), dmax))
        return false;
    if (!trace_identity(x, transversal_axis, 1, ideal, z2, 2, dmax)) return false;
    if (!residue_identity(x, transversal_axis, 2, ideal, z2, closed(double_point), dmax))
        return false;
    if (!trace_identity(x, transversal_axis, 2, ideal, z2, 2, dmax)) return false;
    if (!residue_identity(x, transversal_axis, 3, ideal, z2,
                          closed({poly_pow(z1, 2), poly_pow(z2, 2)}), dmax))
        return false;
    if (!trace_identity(x, transversal_axis, 3, ideal, z2, 1, dmax)) return false;

    return true;
}

bool verify_colon_identities(int count, int dmax, std::uint64_t seed) {
    for (int i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, {0xc010, static_cast<std::uint64_t>(i)}));
        // two independent linear forms and generic alpha, beta
        PolyVec l1(MonomialBasis::plane(1)), l2(MonomialBasis::plane(1));
        for (;;) {
            for (int c = 0; c < 3; ++c) {
                l1.coeffs[c] = rng.fp();
                l2.coeffs[c] = rng.fp();
            }
            Mat probe(3);
            probe.add_row(l1.coeffs);
            probe.add_row(l2.coeffs);
            if (probe.rank() == 2) break;
        }
        const Fp alpha = rng.fp_nonzero();
        const Fp beta = rng.fp_nonzero();
        const GeneratorIdeal ideal{Ambient::Plane, {poly_pow(l1, 2), poly_pow(l2, 2)}};
        const GeneratorIdeal first{Ambient::Plane, {l1, poly_pow(l2, 2)}};
        const PolyVec mixed = l1 * alpha + l2 * beta;
        const PolyVec reflected = l1 * alpha + l2 * (-beta);
        const GeneratorIdeal second{Ambient::Plane, {poly_pow(l1, 2), reflected}};
        for (int d = 0; d <= dmax; ++d) {
            const MonomialBasis basis = MonomialBasis::plane(d);
            if (!piece_equal(piece_colon(ideal, l1, basis), ideal_degree_piece(first, basis)))
                return false;
            if (!piece_equal(piece_colon(ideal, mixed, basis),
                             ideal_degree_piece(second, basis)))
                return false;
        }
    }
    return true;
}

bool verify_collinear_suite(int trials, std::uint64_t seed) {
    Rng rng(derive_seed(seed, {0xc011}));
    const LineRef line = LineRef::through(PlanePoint::random(rng), PlanePoint::random(rng));

    // generic double point off the line, both implications probed
    SchemeSpec double_point;
    double_point.ambient = Ambient::Plane;
    for (;;) {
        const PlanePoint a = PlanePoint::random(rng);
        if (line.contains(a)) continue;
        double_point.components.push_back(FatPoint{2, a});
        break;
    }
    if (!verify_collinear_lemma(double_point, line, 2, 2, trials, derive_seed(seed, {1})))
        return false;

    // two points on a line impose independent conditions on lines
    SchemeSpec empty;
    empty.ambient = Ambient::Plane;
    if (!verify_collinear_lemma(empty, line, 2, 1, trials, derive_seed(seed, {2})))
        return false;

    // an instance where the emptiness implication fires: residue kills lines
    {
        const ConditionMatrix cm = condition_matrix(double_point, 1);
        if (cm.basis.size() - cm.matrix.rank() != 0) return false;  // dim L_1(2A) == 0
        if (!verify_collinear_lemma(double_point, line, 3, 2, trials, derive_seed(seed, {3})))
            return false;
    }
    return true;
}

bool verify_horace_step_suite(std::uint64_t seed) {
    Rng rng(derive_seed(seed, {0x40a}));
    const LineRef line = LineRef::through(PlanePoint::random(rng), PlanePoint::random(rng));
    SchemeSpec empty;
    empty.ambient = Ambient::Plane;

    // one (3,2)-point on the line, direction along it, j = 1, d = 2
    {
        const PlanePoint sup = line.random_point(rng, {line.p1, line.p2});
        SchemeSpec ytilde;
        ytilde.ambient = Ambient::Plane;
        ytilde.components.push_back(ThreeTwoP2{sup, line.other_point(sup)});
        const HoraceStepResult r = horace_step_check(empty, ytilde, line, {1}, 2);
        if (!(r.trace_ok && r.residue_ok && r.conclusion)) return false;
        const ConditionMatrix cm = condition_matrix(ytilde, 2);
        if (cm.matrix.rank() != 5) return false;
    }

    // a double point off the line, nothing on it, d = 2
    {
        SchemeSpec x;
        x.ambient = Ambient::Plane;
        for (;;) {
            const PlanePoint a = PlanePoint::random(rng);
            if (line.contains(a)) continue;
            x.components.push_back(FatPoint{2, a});
            break;
        }
        const HoraceStepResult r = horace_step_check(x, empty, line, {}, 2);
        if (!r.conclusion) return false;
        const ConditionMatrix cm = condition_matrix(x, 2);
        if (cm.matrix.rank() != 3) return false;
    }

    // trace capacity violated: two (3,2)-points along the line at d = 2
    {
        const PlanePoint s1 = line.random_point(rng, {line.p1, line.p2});
        const PlanePoint s2 = line.random_point(rng, {line.p1, line.p2, s1});
        SchemeSpec ytilde;
        ytilde.ambient = Ambient::Plane;
        ytilde.components.push_back(ThreeTwoP2{s1, line.other_point(s1)});
        ytilde.components.push_back(ThreeTwoP2{s2, line.other_point(s2)});
        const HoraceStepResult r = horace_step_check(empty, ytilde, line, {1, 1}, 2);
        if (r.trace_ok || r.conclusion) return false;
    }
    return true;
}

bool verify_collinear_lemma(const SchemeSpec& x, const LineRef& line, int s, int d,
                            int trials, std::uint64_t seed) {
    if (s < 1) throw std::invalid_argument("verify_collinear_lemma wants s >= 1");
    std::vector<PlanePoint> avoid;
    for (const auto& c : x.components)
        avoid.push_back(std::visit(
            [](const auto& v) -> PlanePoint {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, ThreeTwoP1P1>)
                    throw NotVerticallyGraded("plane schemes only");
                else
                    return v.support;
            },
            c));

    const int dim_x = dim_linsys_plane(x, d);
    const int dim_res = dim_linsys_plane(residue_scheme(x, line), d - 1);

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, {0xc0111, static_cast<std::uint64_t>(t)}));
        std::vector<PlanePoint> pts = avoid;
        SchemeSpec with_s = x;
        SchemeSpec with_s1 = x;
        for (int i = 0; i < s; ++i) {
            const PlanePoint q = line.random_point(rng, pts);
            pts.push_back(q);
            with_s.components.push_back(SimplePoint{q});
            if (i + 1 < s) with_s1.components.push_back(SimplePoint{q});
        }
        const int dim_s = dim_linsys_plane(with_s, d);
        if (dim_linsys_plane(with_s1, d) > dim_res) {
            if (dim_s != dim_x - s) return false;
        }
        if (dim_res == 0 && dim_x <= s) {
            if (dim_s != 0) return false;
        }
    }
    return true;
}

}  // namespace svt
