#include "factorwidth/hadamard.hpp"

#include <cmath>
#include <random>

#include "factorwidth/matrix_ops.hpp"

namespace fw {

const char* power_verdict_name(PowerVerdict v) {
    switch (v) {
        case PowerVerdict::Guaranteed: return "guaranteed";
        case PowerVerdict::NotGuaranteed: return "not-guaranteed";
        case PowerVerdict::CounterexampleClass: return "counterexample-class";
    }
    return "?";
}

long fran_product_bound(long r_a, long r_b) {
    if (r_a < 1 || r_b < 1) raise(ErrorCode::BadArgs, "term counts must be >= 1");
    long out = 0;
    if (__builtin_mul_overflow(r_a, r_b, &out))
        raise(ErrorCode::Overflow, "product bound exceeds 64-bit range");
    return out;
}

long fran_power_bound(long r, long s) {
    if (r < 1 || s < 1) raise(ErrorCode::BadArgs, "need r >= 1 and s >= 1");
    // C(r+s-1, s) with the smaller symmetric index.
    const long top = r + s - 1;
    const long pick = std::min(s, top - s);
    long result = 1;
    for (long t = 1; t <= pick; ++t) {
        long next = 0;
        if (__builtin_mul_overflow(result, top - pick + t, &next))
            raise(ErrorCode::Overflow, "binomial exceeds 64-bit range");
        result = next / t;  // exact: product of t consecutive integers
    }
    return result;
}

PowerRule power_preserves_width(const SymMatrix& a, int k, double s,
                                const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    if (k < 1 || k > n) raise(ErrorCode::BadK, "k must lie in 1..n");
    if (!(s > 0)) raise(ErrorCode::BadArgs, "power must be positive");
    if (!is_psd(a, cfg).success) raise(ErrorCode::NotPsd, "input is not PSD");

    const bool integral = (s == std::floor(s));
    if (!integral && !a.entrywise_nonneg(cfg.tol_zero * a.max_abs()))
        raise(ErrorCode::NegativeEntryNonIntegerPower,
              "non-integer power of a matrix with negative entries");

    if (k == 1) return {PowerVerdict::Guaranteed, "diagonal"};
    if (integral) return {PowerVerdict::Guaranteed, "integer-power"};
    if (k == 2 && s >= 1.0) return {PowerVerdict::Guaranteed, "fw2-power"};
    if (k == n && s >= n - 2) return {PowerVerdict::Guaranteed, "fitzgerald-horn"};
    if (s < std::min(k - 1, n - 2))
        return {PowerVerdict::CounterexampleClass, "below-threshold"};
    return {PowerVerdict::NotGuaranteed, "conjectural"};
}

MinimalPowerResult minimal_power_to_fw2(const SymMatrix& a, long m_cap,
                                        const ToleranceConfig& cfg) {
    cfg.validate();
    if (m_cap < 1) raise(ErrorCode::BadArgs, "m_cap must be >= 1");
    const int n = a.dim();
    if (!is_psd(a, cfg).success) raise(ErrorCode::NotPsd, "input is not PSD");
    const double scale = std::max(a.max_diag(), 0.0);
    if (!a.entrywise_nonneg(cfg.tol_zero * a.max_abs()))
        raise(ErrorCode::BadArgs, "entrywise nonnegative input required");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a(i, i) * a(j, j) - a(i, j) * a(i, j) <= cfg.tol_psd * scale * scale)
                raise(ErrorCode::DegenerateSubmatrix,
                      "a 2x2 principal submatrix is singular; no power reaches width 2");

    // Work on the unit-diagonal rescaling: same widths power by power, and
    // all entries stay below 1 in magnitude, so large powers cannot overflow.
    const DiagonalNormalization norm = diagonal_normalize(a, cfg);
    const SymMatrix& base = norm.normalized;

    MinimalPowerResult res;
    SymMatrix power = base;
    auto passes = [&](const SymMatrix& mat) { return factor_width_le_2(mat, cfg); };
    for (long m = 1; m <= m_cap; ++m) {
        if (m > 1) power = hadamard_product(power, base);
        if (!passes(power)) {
            if (res.first_success > 0) break;  // tail interrupted
            continue;
        }
        if (res.first_success == 0) res.first_success = m;
        res.verified_through = m;
    }
    if (res.first_success == 0)
        raise(ErrorCode::CapExceeded, "no power up to m_cap reached width 2");
    return res;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

ConjectureSearchResult conjecture_search(int n, int k, double s, long trials,
                                         std::uint64_t seed, const ToleranceConfig& cfg) {
    cfg.validate();
    if (k < 2 || k > n) raise(ErrorCode::BadArgs, "need 2 <= k <= n");
    if (trials < 0) raise(ErrorCode::BadArgs, "trials must be nonnegative");
    const double threshold = std::min(k - 1, n - 2);
    if (s == std::floor(s))
        raise(ErrorCode::BadRegime, "integer powers always preserve the width; nothing to search");
    if (s < threshold)
        raise(ErrorCode::BadRegime,
              "below min(k-1, n-2) a counterexample class is already known");

    ConjectureSearchResult res;
    for (long trial = 0; trial < trials; ++trial) {
        const std::uint64_t sub_seed = splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
        std::mt19937_64 rng(sub_seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);

        // Sum of nonnegative k-support outer products: width <= k and
        // entrywise nonnegative by construction.
        SymMatrix a(n);
        const int terms = n + 2;
        for (int t = 0; t < terms; ++t) {
            std::vector<int> support(n);
            for (int i = 0; i < n; ++i) support[i] = i;
            for (int i = 0; i < k; ++i) {
                const int j = i + static_cast<int>(rng() % (n - i));
                std::swap(support[i], support[j]);
            }
            std::vector<double> values(k);
            for (int i = 0; i < k; ++i) values[i] = unif(rng);
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y)
                    if (support[x] <= support[y])
                        a.add(support[x], support[y], values[x] * values[y]);
        }

        const SymMatrix powered = hadamard_power(a, s, cfg);
        const MembershipVerdict verdict = membership(powered, k, cfg);

        TrialRecord rec;
        rec.trial = trial;
        rec.seed = sub_seed;
        rec.verdict = membership_name(verdict.status);
        rec.residual = verdict.distance_estimate;
        rec.counterexample = verdict.status == Membership::NotMember;
        res.trials.push_back(rec);
        ++res.tested;

        if (verdict.status == Membership::NotMember)
            res.counterexamples.push_back({trial, a, powered, *verdict.witness});
    }
    return res;
}

}  // namespace fw
