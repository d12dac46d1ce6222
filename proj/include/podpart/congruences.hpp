#pragma once

#include "podpart/counting.hpp"
#include "podpart/report.hpp"

#include <vector>

namespace podpart::congruences {

// a(mn + t) = 0 (mod u) for all n, a being one of the counting functions.
struct ProgressionSpec {
    long m = 1;
    long t = 0;
    BigInt u = 2;
    counting::SequenceId sequence{counting::Sequence::b4};

    // Throws std::invalid_argument unless m >= 1, 0 <= t < m and u >= 1.
    void validate() const;
};

// Entry n holds seq(mn + t) for every mn + t inside the source table; empty
// when t itself is outside.
std::vector<BigInt> extract_progression(const counting::SequenceTable& seq, long m, long t);

// Divisibility by u for 0 <= n <= n_max; sharpness witnesses record the
// smallest n whose value is not divisible by 2u.
VerificationReport check_progression_congruence(const ProgressionSpec& spec, long n_max,
                                                const std::string& statement_id = "SCAN");

// Several progressions of the same sequence checked against one shared table.
VerificationReport check_progression_family(const std::string& statement_id, long m,
                                            const std::vector<long>& residues, const BigInt& u,
                                            long n_max);

// The Cauchy product of the progression series for each residue, checked
// coefficientwise for divisibility by u up to the given order.
VerificationReport check_product_congruence(const std::vector<long>& residues, long m,
                                            const BigInt& u, long order,
                                            const std::string& statement_id = "PRODUCT");

// TH5.1 (n <= n_max, default 40), TH5.2 (default 20), L1, L2 (order 30),
// L3.i, L3.ii (order 12).
VerificationReport verify_th5_1(long n_max = 40);
VerificationReport verify_th5_2(long n_max = 20);
std::vector<VerificationReport> verify_lemmas(long pair_order = 30, long triple_order = 12);

// The families quoted from the literature, instantiated for alpha <= alpha_max.
// Each instance is checked for n <= n_max, further limited so that no index
// exceeds `budget`.
struct LiteraturePreset {
    std::string family;  // "mod2.a", "mod2.b", "mod2.c", "mod4", "mod8"
    int alpha = 0;
    long r = 0;          // 0 where the family has no r
    long m = 0;
    long t = 0;
    long u = 0;
};
std::vector<LiteraturePreset> literature_presets(int alpha_max = 1);
VerificationReport preset_literature_congruences(long n_max, int alpha_max = 1,
                                                 long budget = 20000);

// Residues t (0 <= t < m) with seq(mn + t) divisible by u for all swept n.
std::vector<long> scan_residues(counting::SequenceId sequence, long m, const BigInt& u,
                                long n_max);

}  // namespace podpart::congruences
