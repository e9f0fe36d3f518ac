#pragma once

#include "hnnp/hnn.hpp"

#include <string>
#include <vector>

namespace hnnp {

/// Parameters of G(l, m) = <a, b; b^-1 a^l b = a^m>, normalized to
/// |m| >= l > 0.
struct BSParams {
    long long l = 1;
    long long m = 1;
};

/// Parameters of H(l, m; k) = <a, t; (t^-1 a^-k t) a^l (t^-1 a^k t) = a^m>.
struct BrunnerParams {
    long long l = 1;
    long long m = 1;
    long long k = 1;
};

/// Raw (l, m) with l, m nonzero: swap roles if |m| < |l|, then negate both
/// if l < 0. Throws ParseError for zero parameters.
BSParams normalize_bs(long long l, long long m);
BrunnerParams normalize_brunner(long long l, long long m, long long k);

/// Largest e with p^e dividing n (n != 0).
int p_adic_valuation(long long n, int p);

/// True iff n is a power of p (n >= 1).
bool is_p_power(long long n, int p);

bool bs_residually_finite(const BSParams& q);
bool bs_residually_p(const BSParams& q, int p);
bool brunner_residually_finite(const BrunnerParams& q);
bool brunner_residually_p(const BrunnerParams& q, int p);

/// |m| = l case over the infinite cyclic base A: whether A^{p^s} is
/// (A^l, A^m, p)-compatible. Throws Inapplicable when |m| != l.
bool z_subgroup_compatible(long long l, long long m, int s, int p);

/// Whether the compatible-subgroup family of the |m| = l case filters A.
/// Throws Inapplicable when |m| != l.
bool z_index_p_filtration(long long l, long long m, int p);

/// G_s(1, m): base C_{p^s}, A = B = base, phi: a -> a^m.
/// Throws NotAnAutomorphism when gcd(m, p) != 1.
HNNInstance build_Gs(int s, long long m, int p);

struct CrossValidateRow {
    int s = 0;
    long long m = 0;
    bool skipped = false;   // gcd(m, p) != 1
    bool criterion = false;
    bool arithmetic = false;

    bool agree() const { return skipped || criterion == arithmetic; }
};

struct CrossValidateReport {
    std::vector<CrossValidateRow> rows;

    bool all_agree() const;
    int disagreements() const;
    std::string to_string() const;
};

/// Compares decide(build_Gs(s, m, p)) with the l = 1 arithmetic verdict
/// m = 1 (mod p) over the grid s in [1, sMax], m in mRange.
CrossValidateReport cross_validate(int sMax, const std::vector<long long>& mRange, int p);

} // namespace hnnp
