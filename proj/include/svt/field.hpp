#pragma once

// Exact arithmetic in the prime field F_p. The modulus is a process-wide
// runtime configuration (default 2^31 - 1) so that a single --prime flag
// reaches every computation; all intermediate products fit in 64 bits as
// long as p < 2^32.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace svt {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero in F_p") {}
};

inline constexpr std::uint64_t kDefaultModulus = 2147483647ull;  // 2^31 - 1
inline constexpr int kMaxDegree = 64;  // largest (bi)degree the toolkit supports

std::uint64_t field_modulus();

// Throws std::invalid_argument unless p is prime, p < 2^32 and
// p > 2 * kMaxDegree.
void set_field_modulus(std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

class Fp {
  public:
    Fp() : v_(0) {}
    explicit Fp(std::int64_t x) {
        const auto p = static_cast<std::int64_t>(field_modulus());
        std::int64_t r = x % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }
    static Fp from_reduced(std::uint64_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const {
        std::uint64_t s = v_ + o.v_;
        const auto p = field_modulus();
        if (s >= p) s -= p;
        return from_reduced(s);
    }
    Fp operator-(Fp o) const {
        const auto p = field_modulus();
        return from_reduced(v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_);
    }
    Fp operator*(Fp o) const { return from_reduced((v_ * o.v_) % field_modulus()); }
    Fp operator-() const {
        return from_reduced(v_ == 0 ? 0 : field_modulus() - v_);
    }
    Fp inv() const;
    Fp operator/(Fp o) const { return *this * o.inv(); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    bool operator==(const Fp&) const = default;

  private:
    std::uint64_t v_;  // always in [0, p)
};

inline Fp fp(std::int64_t x) { return Fp(x); }

// Binomial coefficient C(n, k) reduced mod p. For n <= kMaxDegree < p these
// are exactly the rational values, so they are nonzero whenever C(n,k) != 0.
Fp binomial_fp(int n, int k);

// RAII modulus override for tests.
struct ModulusGuard {
    explicit ModulusGuard(std::uint64_t p) : saved_(field_modulus()) { set_field_modulus(p); }
    ~ModulusGuard() { set_field_modulus(saved_); }
    ModulusGuard(const ModulusGuard&) = delete;
    ModulusGuard& operator=(const ModulusGuard&) = delete;

  private:
    std::uint64_t saved_;
};

}  // namespace svt
