#include "podpart/qseries.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace podpart::qseries {

namespace {

std::vector<std::size_t> nonzero_indices(std::span<const BigInt> c)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0)
            idx.push_back(i);
    return idx;
}

void require_positive(long v, const char* what)
{
    if (v < 1)
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
}

// In-place  c *= (1 + sign q^e), walking downwards so each source term is read
// before it is overwritten.
void times_binomial_inplace(std::vector<BigInt>& c, int sign, std::size_t e)
{
    if (e >= c.size())
        return;
    for (std::size_t i = c.size() - 1; i >= e; --i) {
        if (sign > 0)
            c[i] += c[i - e];
        else
            c[i] -= c[i - e];
        if (i == e)
            break;
    }
}

// In-place  c /= (1 + sign q^e), walking upwards (geometric series).
void over_binomial_inplace(std::vector<BigInt>& c, int sign, std::size_t e)
{
    for (std::size_t i = e; i < c.size(); ++i) {
        if (sign > 0)
            c[i] -= c[i - e];
        else
            c[i] += c[i - e];
    }
}

std::vector<BigInt> poch_coeffs(long a, long b, long count, std::size_t order, int sign)
{
    require_positive(a, "Pochhammer base exponent");
    require_positive(b, "Pochhammer step");
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (long k = 0; count < 0 || k < count; ++k) {
        const long e = a + k * b;
        if (e > static_cast<long>(order))
            break;
        times_binomial_inplace(c, sign, static_cast<std::size_t>(e));
    }
    return c;
}

void check_sign(int sign)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("binomial sign must be +1 or -1");
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw std::invalid_argument("a power series needs at least the constant coefficient");
}

PowerSeries PowerSeries::one(std::size_t order) { return monomial(0, 1, order); }

PowerSeries PowerSeries::monomial(std::size_t exponent, const BigInt& coefficient, std::size_t order)
{
    PowerSeries s(order);
    if (exponent <= order)
        s.coeffs_[exponent] = coefficient;
    return s;
}

const BigInt& PowerSeries::coefficient(std::size_t e) const
{
    if (e > order())
        throw std::out_of_range("coefficient of q^" + std::to_string(e) +
                                " is beyond truncation order " + std::to_string(order()));
    return coeffs_[e];
}

PowerSeries PowerSeries::truncated(std::size_t order) const
{
    if (order > this->order())
        throw std::invalid_argument("cannot extend a series past its truncation order");
    return PowerSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

std::size_t PowerSeries::nonzero_count() const
{
    return static_cast<std::size_t>(
        std::ranges::count_if(coeffs_, [](const BigInt& v) { return sgn(v) != 0; }));
}

PowerSeries PowerSeries::operator-() const
{
    std::vector<BigInt> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = -coeffs_[i];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::scaled(const BigInt& factor) const
{
    std::vector<BigInt> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeffs_[i] * factor;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shifted(std::size_t k) const
{
    std::vector<BigInt> c(coeffs_.size());
    for (std::size_t i = k; i < c.size(); ++i)
        c[i] = coeffs_[i - k];
    return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigInt> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = a[i] + b[i];
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigInt> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = a[i] - b[i];
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }

PowerSeries mul(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    // Drive the outer loop with the sparser operand; theta series and
    // Pochhammer products are very sparse.
    auto ia = nonzero_indices(a.coefficients().first(n + 1));
    auto ib = nonzero_indices(b.coefficients().first(n + 1));
    const PowerSeries& sparse = ia.size() <= ib.size() ? a : b;
    const PowerSeries& dense = ia.size() <= ib.size() ? b : a;
    const auto& outer = ia.size() <= ib.size() ? ia : ib;

    std::vector<BigInt> c(n + 1);
    for (std::size_t i : outer) {
        mpz_srcptr x = sparse[i].get_mpz_t();
        for (std::size_t j = 0; i + j <= n; ++j)
            mpz_addmul(c[i + j].get_mpz_t(), x, dense[j].get_mpz_t());
    }
    return PowerSeries(std::move(c));
}

PowerSeries inverse(const PowerSeries& s)
{
    const BigInt& c0 = s[0];
    if (c0 != 1 && c0 != -1)
        throw NotInvertible("constant coefficient " + to_decimal(c0) +
                            " is not a unit in the integers");
    const std::size_t n = s.order();
    auto idx = nonzero_indices(s.coefficients());
    std::vector<BigInt> r(n + 1);
    r[0] = c0;
    // r_m = -c0 * sum_{i>=1} s_i r_{m-i}   (c0^{-1} == c0 for units)
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt acc;
        for (std::size_t i : idx) {
            if (i == 0)
                continue;
            if (i > m)
                break;
            mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), r[m - i].get_mpz_t());
        }
        r[m] = c0 > 0 ? BigInt(-acc) : acc;
    }
    return PowerSeries(std::move(r));
}

PowerSeries divide(const PowerSeries& s, const PowerSeries& t) { return mul(s, inverse(t)); }

PowerSeries times_binomial(const PowerSeries& s, int sign, std::size_t e)
{
    check_sign(sign);
    if (e == 0)
        throw std::invalid_argument("binomial exponent must be positive");
    std::vector<BigInt> c(s.coefficients().begin(), s.coefficients().end());
    times_binomial_inplace(c, sign, e);
    return PowerSeries(std::move(c));
}

PowerSeries over_binomial(const PowerSeries& s, int sign, std::size_t e)
{
    check_sign(sign);
    if (e == 0)
        throw std::invalid_argument("binomial exponent must be positive");
    std::vector<BigInt> c(s.coefficients().begin(), s.coefficients().end());
    over_binomial_inplace(c, sign, e);
    return PowerSeries(std::move(c));
}

PowerSeries substitute_power(const PowerSeries& s, std::size_t m, std::size_t order)
{
    if (m == 0)
        throw std::invalid_argument("substitution exponent must be positive");
    if (order > m * (s.order() + 1) - 1)
        throw std::invalid_argument("substituted series would exceed the trusted order");
    std::vector<BigInt> c(order + 1);
    for (std::size_t i = 0; i <= s.order() && i * m <= order; ++i)
        c[i * m] = s[i];
    return PowerSeries(std::move(c));
}

PowerSeries poch_inf(long a, long b, std::size_t order)
{
    return PowerSeries(poch_coeffs(a, b, -1, order, -1));
}

PowerSeries poch_inf_neg(long a, long b, std::size_t order)
{
    return PowerSeries(poch_coeffs(a, b, -1, order, +1));
}

PowerSeries poch_finite(long a, long b, long count, std::size_t order)
{
    if (count < 0)
        throw std::invalid_argument("finite Pochhammer length must be nonnegative");
    return PowerSeries(poch_coeffs(a, b, count, order, -1));
}

PowerSeries poch_finite_neg(long a, long b, long count, std::size_t order)
{
    if (count < 0)
        throw std::invalid_argument("finite Pochhammer length must be nonnegative");
    return PowerSeries(poch_coeffs(a, b, count, order, +1));
}

PowerSeries theta_square(long scale, std::size_t order)
{
    require_positive(scale, "theta scale");
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (long n = 1;; ++n) {
        const long e = scale * n * n;
        if (e > static_cast<long>(order))
            break;
        c[e] = (n % 2 == 0) ? 2 : -2;
    }
    return PowerSeries(std::move(c));
}

namespace {

PowerSeries theta_triangular_impl(std::size_t order, long mult)
{
    std::vector<BigInt> c(order + 1);
    for (long n = 0;; ++n) {
        const long tri = n * (n + 1) / 2;
        const long e = mult * tri;
        if (e > static_cast<long>(order))
            break;
        c[e] = (tri % 2 == 0) ? 1 : -1;
    }
    return PowerSeries(std::move(c));
}

void check_jtp_args(SignedMonomial z, long q_step)
{
    check_sign(z.sign);
    require_positive(q_step, "q step");
    if (z.exponent <= 0 || z.exponent >= q_step)
        throw std::invalid_argument(
            "triple product specialization needs 0 < z exponent < q step to stay a power series");
}

}  // namespace

PowerSeries theta_triangular(std::size_t order) { return theta_triangular_impl(order, 1); }

PowerSeries theta_triangular_scaled(std::size_t order) { return theta_triangular_impl(order, 2); }

PowerSeries jtp_product_side(SignedMonomial z, long q_step, std::size_t order)
{
    check_jtp_args(z, q_step);
    // (z;Q) = prod (1 - sign q^{e + kQ}); (Q/z;Q) = prod (1 - sign q^{Q - e + kQ})
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    const int factor_sign = -z.sign;
    for (long e = z.exponent; e <= static_cast<long>(order); e += q_step)
        times_binomial_inplace(c, factor_sign, static_cast<std::size_t>(e));
    for (long e = q_step - z.exponent; e <= static_cast<long>(order); e += q_step)
        times_binomial_inplace(c, factor_sign, static_cast<std::size_t>(e));
    for (long e = q_step; e <= static_cast<long>(order); e += q_step)
        times_binomial_inplace(c, -1, static_cast<std::size_t>(e));
    return PowerSeries(std::move(c));
}

PowerSeries jtp_sum_side(SignedMonomial z, long q_step, std::size_t order)
{
    check_jtp_args(z, q_step);
    // (-z)^n Q^{n(n-1)/2} = (-sign)^n q^{e n + step n(n-1)/2}; the exponent is a
    // convex function of n, positive away from n in {0, 1}.
    std::vector<BigInt> c(order + 1);
    auto add_term = [&](long n) {
        const long e = z.exponent * n + q_step * n * (n - 1) / 2;
        if (e < 0 || e > static_cast<long>(order))
            return false;
        const bool negative = (n % 2 != 0) && (-z.sign < 0);
        c[e] += negative ? -1 : 1;
        return true;
    };
    for (long n = 0; add_term(n); ++n) {
    }
    for (long n = -1; add_term(n); --n) {
    }
    return PowerSeries(std::move(c));
}

bool jacobi_triple_product_check(SignedMonomial z, long q_step, std::size_t order)
{
    return jtp_product_side(z, q_step, order) == jtp_sum_side(z, q_step, order);
}

nlohmann::json to_json(const PowerSeries& s)
{
    auto arr = nlohmann::json::array();
    for (const auto& c : s.coefficients())
        arr.push_back(to_decimal(c));
    return arr;
}

PowerSeries series_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("series JSON must be a nonempty array of decimal strings");
    std::vector<BigInt> c;
    c.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_string())
            throw std::invalid_argument("series coefficients must be decimal strings");
        c.push_back(from_decimal(v.get<std::string>()));
    }
    return PowerSeries(std::move(c));
}

}  // namespace podpart::qseries
