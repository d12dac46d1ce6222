#pragma once

#include "podpart/report.hpp"

#include <cstddef>
#include <vector>

namespace podpart::identities {

// Each verifier evaluates both sides of every statement it covers for
// 0 <= n <= n_max (and 1 <= k <= k_max where k appears) and returns one report
// per statement, failures in-band.

// T1.i, T1.ii: signed parity splits of pod and b4 against Q0 and Q2.
std::vector<VerificationReport> verify_t1(long n_max);
// C1.i, C1.ii: Q0 = pod and Q2 = b4 (mod 2).
std::vector<VerificationReport> verify_c1(long n_max);
// T2.i, T2.ii: Q0 and Q2 as signed sums of pod at squares / oblong numbers.
std::vector<VerificationReport> verify_t2(long n_max);
// T3.i, T3.ii: triangular-number recurrences with xi_n and chi_n.
std::vector<VerificationReport> verify_t3(long n_max);
// T4 (equality with the Mbar_k convolution) and C4.2 (sign and strictness).
std::vector<VerificationReport> verify_t4(long n_max, int k_max);
// T5 (equality with the MP_k convolution) and C4.4 (sign and strictness).
std::vector<VerificationReport> verify_t5(long n_max, int k_max);
// T6, T7.i, T7.ii, W.Qodd, W.Q: sums over triangular shifts.
std::vector<VerificationReport> verify_watson(long n_max);
// Conj1, Conj2 for 1 <= k <= k_max. Never reported as pass.
std::vector<VerificationReport> check_conjectures(long n_max, int k_max);
// Theta and product identities coefficientwise to the given order:
// S.Gauss22, S.Gauss21, S.GFb, S.GFa, S.Euler, S.JTP1, S.JTP2.
std::vector<VerificationReport> verify_series_identities(std::size_t order);
// ROUTES: enumeration against generating function for every counting
// function, MP_k and Mbar_k for k <= k_max.
std::vector<VerificationReport> verify_route_agreement(long n_max, int k_max);

// Values behind the inequality families, exposed for tests and tools.
BigInt t4_lhs(long n, int k);  // (-1)^k (pod(n) + 2 sum (-1)^j pod(n-4j^2) - Q0(n))
BigInt t5_lhs(long n, int k);  // (-1)^k (Q2(n) - sum (-1)^{j(j+1)/2} pod(n-j(j+1)))
BigInt conjecture1_value(long n, int k);
BigInt conjecture2_value(long n, int k);

}  // namespace podpart::identities
