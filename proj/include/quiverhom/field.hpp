#ifndef QUIVERHOM_FIELD_HPP
#define QUIVERHOM_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qh {

/// Field elements are always stored as GMP rationals. Over a prime field the
/// stored value is the canonical integer representative in [0, p).
using Scalar = mpq_class;

class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    bool is_prime() const noexcept { return p_ != 0; }
    std::uint32_t characteristic() const noexcept { return p_; }

    Scalar reduce(const Scalar& x) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// Uniform over the prime field, or a small integer in [-bound, bound] over Q.
    Scalar random(std::mt19937_64& rng, int bound = 1000) const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Parses "n", "-n" or "n/d".
Scalar parse_rational(std::string_view text);

/// Prints "n" or "n/d" (canonical form).
std::string format_scalar(const Scalar& x);

}  // namespace qh

#endif
