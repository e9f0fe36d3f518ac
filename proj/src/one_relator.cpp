#include "hnnp/one_relator.hpp"

#include "hnnp/criterion.hpp"
#include "hnnp/errors.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace hnnp {

BSParams normalize_bs(long long l, long long m) {
    if (l == 0 || m == 0) throw ParseError("l and m must be nonzero");
    if (std::llabs(m) < std::llabs(l)) std::swap(l, m); // replace b by b^-1
    if (l < 0) { l = -l; m = -m; }
    return {l, m};
}

BrunnerParams normalize_brunner(long long l, long long m, long long k) {
    if (k <= 0) throw ParseError("k must be positive");
    BSParams q = normalize_bs(l, m);
    return {q.l, q.m, k};
}

int p_adic_valuation(long long n, int p) {
    if (n == 0) throw ParseError("valuation of zero");
    n = std::llabs(n);
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

bool is_p_power(long long n, int p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

bool bs_residually_finite(const BSParams& q) {
    return q.l == 1 || std::llabs(q.m) == q.l;
}

bool bs_residually_p(const BSParams& q, int p) {
    if (q.l == 1 && ((q.m % p) + p) % p == 1 % p) return true;
    if (std::llabs(q.m) != q.l || !is_p_power(q.l, p)) return false;
    return q.m > 0 || p == 2;
}

bool brunner_residually_finite(const BrunnerParams& q) {
    return std::llabs(q.m) == q.l;
}

bool brunner_residually_p(const BrunnerParams& q, int p) {
    if (std::llabs(q.m) != q.l || !is_p_power(q.l, p) || !is_p_power(q.k, p))
        return false;
    if (q.m > 0) return true;
    if (p != 2) return false;
    return p_adic_valuation(q.k, p) <= p_adic_valuation(q.l, p); // s <= r
}

bool z_subgroup_compatible(long long l, long long m, int s, int p) {
    if (std::llabs(m) != l || l <= 0) throw Inapplicable("requires |m| = l > 0");
    if (m == l) return true;
    if (s <= p_adic_valuation(l, p)) return true;
    return p == 2;
}

bool z_index_p_filtration(long long l, long long m, int p) {
    if (std::llabs(m) != l || l <= 0) throw Inapplicable("requires |m| = l > 0");
    if (!is_p_power(l, p)) return false;
    return m > 0 || p == 2;
}

HNNInstance build_Gs(int s, long long m, int p) {
    if (s < 1) throw ParseError("s must be at least 1");
    long long n = 1;
    for (int i = 0; i < s; ++i) n *= p;
    if (std::gcd(std::llabs(m), static_cast<long long>(p)) != 1)
        throw NotAnAutomorphism("a -> a^m is not invertible mod p^s");
    FiniteGroupPtr base = cyclic_group(static_cast<int>(n));
    const FiniteGroup& g = *base;
    Subgroup all = full_subgroup(g);
    PartialIso phi;
    phi.domain = all;
    phi.codomain = all;
    phi.map.resize(static_cast<std::size_t>(g.order()));
    long long e = ((m % n) + n) % n;
    for (int i = 0; i < g.order(); ++i)
        phi.map[static_cast<std::size_t>(i)] = g.power(i, e);
    return make_instance(base, all, all, phi, p);
}

bool CrossValidateReport::all_agree() const { return disagreements() == 0; }

int CrossValidateReport::disagreements() const {
    int n = 0;
    for (const auto& r : rows)
        if (!r.agree()) ++n;
    return n;
}

std::string CrossValidateReport::to_string() const {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << "s=" << r.s << " m=" << r.m << ": ";
        if (r.skipped) out << "skipped (not coprime to p)";
        else
            out << "criterion=" << (r.criterion ? "yes" : "no")
                << " arithmetic=" << (r.arithmetic ? "yes" : "no")
                << (r.agree() ? "" : "  << DISAGREE");
        out << '\n';
    }
    out << rows.size() << " rows, " << disagreements() << " disagreements\n";
    return out.str();
}

CrossValidateReport cross_validate(int sMax, const std::vector<long long>& mRange, int p) {
    CrossValidateReport rep;
    for (int s = 1; s <= sMax; ++s)
        for (long long m : mRange) {
            CrossValidateRow row;
            row.s = s;
            row.m = m;
            if (m == 0 || std::gcd(std::llabs(m), static_cast<long long>(p)) != 1) {
                row.skipped = true;
            } else {
                row.criterion = decide(build_Gs(s, m, p)).yes;
                row.arithmetic = ((m % p) + p) % p == 1 % p;
            }
            rep.rows.push_back(row);
        }
    return rep;
}

} // namespace hnnp
