#pragma once

#include "podpart/bigint.hpp"

#include <json.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace podpart::qseries {

/*
 * Truncated formal power series  c_0 + c_1 q + ... + c_N q^N  with exact
 * integer coefficients. The truncation order N travels with the value:
 * coefficients beyond N are unknown, never zero-by-assumption. Binary
 * operations truncate to the smaller of the two orders.
 *
 * Values are immutable once built; every operation returns a new series.
 */
class PowerSeries {
public:
    // The zero series trusted up to `order`.
    explicit PowerSeries(std::size_t order = 0);
    // Order is coefficients.size() - 1; an empty vector is rejected.
    explicit PowerSeries(std::vector<BigInt> coefficients);

    static PowerSeries one(std::size_t order);
    static PowerSeries monomial(std::size_t exponent, const BigInt& coefficient, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    // Unchecked access, e <= order().
    const BigInt& operator[](std::size_t e) const noexcept { return coeffs_[e]; }
    // Checked access; throws std::out_of_range past the truncation order.
    const BigInt& coefficient(std::size_t e) const;
    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const;
    std::size_t nonzero_count() const;

    PowerSeries operator-() const;
    PowerSeries scaled(const BigInt& factor) const;
    // Multiply by q^k.
    PowerSeries shifted(std::size_t k) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

private:
    std::vector<BigInt> coeffs_;
};

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Cauchy product truncated to min(a.order(), b.order()).
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

// Multiplicative inverse over the integers. Throws NotInvertible unless the
// constant coefficient is +1 or -1.
PowerSeries inverse(const PowerSeries& s);

// s(q) / t(q); t must be invertible.
PowerSeries divide(const PowerSeries& s, const PowerSeries& t);

// s(q) * (1 + sign q^e) and s(q) / (1 + sign q^e), e >= 1, sign = +-1.
PowerSeries times_binomial(const PowerSeries& s, int sign, std::size_t e);
PowerSeries over_binomial(const PowerSeries& s, int sign, std::size_t e);

// q -> q^m. A series known to order K becomes known to order m(K+1) - 1;
// the result is truncated to `order` (which must not exceed that bound).
PowerSeries substitute_power(const PowerSeries& s, std::size_t m, std::size_t order);

// (q^a; q^b)_inf truncated at N, i.e. prod_{k>=0} (1 - q^{a+kb}).
PowerSeries poch_inf(long a, long b, std::size_t order);
// (-q^a; q^b)_inf = prod_{k>=0} (1 + q^{a+kb}).
PowerSeries poch_inf_neg(long a, long b, std::size_t order);
// Finite versions with `count` factors: (q^a; q^b)_count and (-q^a; q^b)_count.
PowerSeries poch_finite(long a, long b, long count, std::size_t order);
PowerSeries poch_finite_neg(long a, long b, long count, std::size_t order);

// 1 + 2 sum_{n>=1} (-1)^n q^{scale n^2}
PowerSeries theta_square(long scale, std::size_t order);
// sum_{n>=0} (-1)^{n(n+1)/2} q^{n(n+1)/2}
PowerSeries theta_triangular(std::size_t order);
// sum_{n>=0} (-1)^{n(n+1)/2} q^{n(n+1)}
PowerSeries theta_triangular_scaled(std::size_t order);

// z = sign * q^exponent
struct SignedMonomial {
    int sign = 1;
    long exponent = 0;
};

// Both sides of the triple product
//   (z;Q)_inf (Q/z;Q)_inf (Q;Q)_inf = sum_{n in Z} (-z)^n Q^{n(n-1)/2}
// with Q = q^q_step. Requires 0 < z.exponent < q_step so that every factor is a
// genuine power series in q; throws std::invalid_argument otherwise.
PowerSeries jtp_product_side(SignedMonomial z, long q_step, std::size_t order);
PowerSeries jtp_sum_side(SignedMonomial z, long q_step, std::size_t order);
bool jacobi_triple_product_check(SignedMonomial z, long q_step, std::size_t order);

// Exact serialization: a JSON array of decimal strings.
nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

}  // namespace podpart::qseries
