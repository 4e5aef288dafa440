#include "svt/field.hpp"

namespace svt {

namespace {
std::uint64_t g_modulus = kDefaultModulus;
}

std::uint64_t field_modulus() { return g_modulus; }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void set_field_modulus(std::uint64_t p) {
    if (p >= (1ull << 32))
        throw std::invalid_argument("modulus must fit in 32 bits");
    if (p <= 2ull * kMaxDegree)
        throw std::invalid_argument("modulus must exceed twice the maximum degree");
    if (!is_prime_u64(p))
        throw std::invalid_argument("modulus must be prime");
    g_modulus = p;
}

Fp Fp::inv() const {
    if (v_ == 0) throw DivisionByZero();
    // extended Euclid on (v, p)
    std::int64_t a = static_cast<std::int64_t>(v_);
    std::int64_t b = static_cast<std::int64_t>(field_modulus());
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return Fp(x0);
}

Fp binomial_fp(int n, int k) {
    if (k < 0 || k > n) return Fp();
    Fp num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= Fp(n - i);
        den *= Fp(i + 1);
    }
    return num / den;
}

}  // namespace svt
