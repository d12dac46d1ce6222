#pragma once

#include "podpart/bigint.hpp"
#include "podpart/partition.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace podpart::bijections {

// Thrown when an input lies outside the domain of a map.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Glaisher: distinct parts -> odd parts, splitting 2^k c into 2^k copies of c.
Partition glaisher_split(const Partition& lambda);
// Inverse: merges equal odd parts following the binary expansion of each multiplicity.
Partition glaisher_merge(const Partition& lambda);

// Q2 -> odd parts distinct, even parts = 2 (mod 4) with even multiplicity.
Partition glaisher_variant(const Partition& eta);
Partition glaisher_variant_inverse(const Partition& lambda);

bool in_q0_tilde(const Partition& p);  // odd parts repeated at most three times
bool in_q2_tilde(const Partition& p);
bool in_phi_domain(const Partition& p);      // no part = 2 (mod 4), not in q0_tilde
bool in_epsilon_domain(const Partition& p);  // no part = 0 (mod 4), not in q2_tilde

// The case of the rule that applies to lambda: (i) or (ii).
int phi_case(const Partition& lambda);
Partition phi(const Partition& lambda);
int epsilon_case(const Partition& lambda);
Partition epsilon(const Partition& lambda);

struct TripleA {
    Partition odd_part;  // distinct odd parts
    Partition alpha;     // distinct even parts
    Partition beta;      // distinct even parts

    long size() const { return odd_part.size() + alpha.size() + beta.size(); }
    int length_difference() const { return alpha.length() - beta.length(); }
    // k <= l(alpha) - l(beta) <= k+1
    bool in_a_k(int k) const;
    std::string to_string() const;

    friend bool operator==(const TripleA&, const TripleA&) = default;
    friend auto operator<=>(const TripleA&, const TripleA&) = default;
};

nlohmann::json to_json(const TripleA& t);

// lambda has distinct odd parts and any even parts; |lambda| + k(k+1) = n.
TripleA zigzag_to_triple(const Partition& lambda, int k);
Partition triple_to_zigzag(const TripleA& t, int k);

// All triples in A_k(n). Sizes beyond the enumeration ceiling are rejected.
std::vector<TripleA> enumerate_a_k(int n, int k, int ceiling = kDefaultEnumerationCeiling);
// All triples in the union of the A_k(n).
std::vector<TripleA> enumerate_a(int n, int ceiling = kDefaultEnumerationCeiling);
// sum over k of (-1)^{k(k+1)/2} |A_k(n)|
BigInt signed_triple_count(int n, int ceiling = kDefaultEnumerationCeiling);
// (lambda^o, alpha, alpha) -> lambda^o with alpha doubled
Partition equal_triple_to_q2(const TripleA& t);

// An element of the multiset MA_0(n) or MA_2(n): a triple together with the
// index of its copy (0 or 1).
struct MultisetElement {
    TripleA triple;
    int copy = 0;

    friend bool operator==(const MultisetElement&, const MultisetElement&) = default;
    friend auto operator<=>(const MultisetElement&, const MultisetElement&) = default;
};

// Moves the larger of alpha_i, beta_i to the other side, i being the first
// index where they differ. Requires alpha != beta.
TripleA move_first_difference(const TripleA& t);

std::vector<MultisetElement> multiset_ma0(int n, int ceiling = kDefaultEnumerationCeiling);
std::vector<MultisetElement> multiset_ma2(int n, int ceiling = kDefaultEnumerationCeiling);
MultisetElement multiset_involution(const MultisetElement& e);          // MA_0 -> MA_2
MultisetElement multiset_involution_inverse(const MultisetElement& e);  // MA_2 -> MA_0
// Contribution of a triple to the signed count: 1, 0, 2 or -2.
int triple_contribution(const TripleA& t);

struct TwoQuotientDecomposition {
    Partition core;   // staircase
    Partition alpha;
    Partition beta;

    friend bool operator==(const TwoQuotientDecomposition&,
                           const TwoQuotientDecomposition&) = default;
};

nlohmann::json to_json(const TwoQuotientDecomposition& d);

// Self-conjugate partitions give alpha == beta.
TwoQuotientDecomposition two_core_quotient(const Partition& lambda);
Partition from_two_core_quotient(const TwoQuotientDecomposition& d);
bool is_staircase(const Partition& p);
int staircase_index(const Partition& p);  // k for (k, k-1, ..., 1)

// Self-conjugate partition whose diagonal hooks are the (distinct odd) parts of mu.
Partition self_conjugate_from_hooks(const Partition& mu);

struct XiImage {
    Partition image;
    int k = 0;  // |mu| = k(k+1)/2 + 4|image|
};
XiImage xi_map(const Partition& mu);

struct PsiImage {
    Partition image;  // distinct odd parts, any even parts
    int k = 0;        // |image| = (n - k(k+1)/2) / 2
};
PsiImage psi(const Partition& lambda);

struct RhoImage {
    Overpartition image;
    int k = 0;  // |image| = (n - k(k+1)/2) / 4
};
RhoImage rho(const Partition& lambda);

// b4(n) against sum_k overline_p((n - k(k+1)/2) / 2); the map behind it is not
// constructed.
struct CardinalityCheck {
    BigInt lhs;
    BigInt rhs;
    bool holds() const { return lhs == rhs; }
};
CardinalityCheck chi_cardinality(long n);

}  // namespace podpart::bijections
