#include "svt/basis.hpp"

#include <stdexcept>

namespace svt {

MonomialBasis MonomialBasis::plane(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d > kMaxDegree) throw std::invalid_argument("degree exceeds supported maximum");
    MonomialBasis b;
    b.ambient_ = Ambient::Plane;
    b.d_ = d;
    for (int e0 = d; e0 >= 0; --e0)
        for (int e1 = d - e0; e1 >= 0; --e1)
            b.exps_.push_back({e0, e1, d - e0 - e1, 0});
    for (std::size_t i = 0; i < b.exps_.size(); ++i) b.index_[b.exps_[i]] = i;
    return b;
}

MonomialBasis MonomialBasis::biprojective(int a, int bdeg) {
    if (a < 0 || bdeg < 0) throw std::invalid_argument("negative bidegree");
    if (a > kMaxDegree || bdeg > kMaxDegree)
        throw std::invalid_argument("bidegree exceeds supported maximum");
    MonomialBasis b;
    b.ambient_ = Ambient::Biprojective;
    b.a_ = a;
    b.b_ = bdeg;
    for (int i0 = a; i0 >= 0; --i0)
        for (int j0 = bdeg; j0 >= 0; --j0)
            b.exps_.push_back({i0, a - i0, j0, bdeg - j0});
    for (std::size_t i = 0; i < b.exps_.size(); ++i) b.index_[b.exps_[i]] = i;
    return b;
}

std::size_t MonomialBasis::index_of(const Exps& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::out_of_range("not a basis monomial");
    return it->second;
}

bool PolyVec::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

PolyVec PolyVec::operator+(const PolyVec& o) const {
    if (!(basis == o.basis)) throw std::invalid_argument("basis mismatch in sum");
    PolyVec r(basis);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

PolyVec PolyVec::operator*(Fp c) const {
    PolyVec r(basis);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] * c;
    return r;
}

PolyVec monomial(const MonomialBasis& basis, const Exps& e, Fp c) {
    PolyVec r(basis);
    r.coeffs[basis.index_of(e)] = c;
    return r;
}

PolyVec poly_mul(const PolyVec& f, const PolyVec& g) {
    if (f.basis.ambient() != g.basis.ambient())
        throw std::invalid_argument("ambient mismatch in product");
    MonomialBasis target =
        f.basis.ambient() == Ambient::Plane
            ? MonomialBasis::plane(f.basis.degree() + g.basis.degree())
            : MonomialBasis::biprojective(
                  f.basis.bidegree().first + g.basis.bidegree().first,
                  f.basis.bidegree().second + g.basis.bidegree().second);
    PolyVec r(target);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i].is_zero()) continue;
        const Exps& ei = f.basis.exponent(i);
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            if (g.coeffs[j].is_zero()) continue;
            const Exps& ej = g.basis.exponent(j);
            Exps e = {ei[0] + ej[0], ei[1] + ej[1], ei[2] + ej[2], ei[3] + ej[3]};
            r.coeffs[target.index_of(e)] += f.coeffs[i] * g.coeffs[j];
        }
    }
    return r;
}

PolyVec poly_pow(const PolyVec& f, int n) {
    if (n < 1) throw std::invalid_argument("poly_pow wants n >= 1");
    PolyVec r = f;
    for (int i = 1; i < n; ++i) r = poly_mul(r, f);
    return r;
}

PolyVec plane_linear(const std::array<Fp, 3>& c) {
    PolyVec r(MonomialBasis::plane(1));
    r.coeffs[0] = c[0];
    r.coeffs[1] = c[1];
    r.coeffs[2] = c[2];
    return r;
}

PolyVec bi_linear_x(const std::array<Fp, 2>& c) {
    MonomialBasis b = MonomialBasis::biprojective(1, 0);
    PolyVec r(b);
    r.coeffs[b.index_of({1, 0, 0, 0})] = c[0];
    r.coeffs[b.index_of({0, 1, 0, 0})] = c[1];
    return r;
}

PolyVec bi_linear_y(const std::array<Fp, 2>& c) {
    MonomialBasis b = MonomialBasis::biprojective(0, 1);
    PolyVec r(b);
    r.coeffs[b.index_of({0, 0, 1, 0})] = c[0];
    r.coeffs[b.index_of({0, 0, 0, 1})] = c[1];
    return r;
}

}  // namespace svt
