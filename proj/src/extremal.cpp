#include "covertool/extremal.hpp"

#include <algorithm>

#include "covertool/enumeration.hpp"

namespace covertool {

SemigroupD::SemigroupD(Int n) : n_(n) {
    if (n < 2) throw PreconditionFailed("D(n) needs n >= 2");
    Int x = n;
    for (Int p = 2; p * p <= x; ++p)
        if (x % p == 0) {
            primes_.push_back(p);
            while (x % p == 0) x /= p;
        }
    if (x > 1) primes_.push_back(x);
    member_ = {1};  // 0 is always representable
    cached_to_ = 0;
}

bool SemigroupD::contains(const BigInt& t, const Limits& limits) {
    if (sgn(t) < 0) return false;
    if (!t.fits_slong_p() || t.get_si() > limits.tuple_ceiling)
        throw EnumerationTooLarge("semigroup membership DP limited to the tuple ceiling");
    Int tt = t.get_si();
    if (tt > cached_to_) {
        member_.assign(static_cast<std::size_t>(tt) + 1, 0);
        member_[0] = 1;
        for (Int p : primes_)
            for (Int i = p; i <= tt; ++i)
                member_[static_cast<std::size_t>(i)] |=
                    member_[static_cast<std::size_t>(i - p)];
        cached_to_ = tt;
    }
    return member_[static_cast<std::size_t>(tt)] != 0;
}

bool d_membership(Int n, const BigInt& t, const Limits& limits) {
    SemigroupD d(n);
    return d.contains(t, limits);
}

namespace {

void require_plain(const System& system) {
    if (system.distinguished())
        throw PreconditionFailed("expects a plain system without a distinguished class");
}

// Trailing run of the (sorted) maximal modulus; l = k when all moduli agree.
int tail_block(const System& system) {
    const int k = system.k();
    const Int nk = system.regular(k).n;
    int l = 0;
    while (l < k && system.regular(k - l).n == nk) ++l;
    return l;
}

}  // namespace

Theorem12Result theorem_1_2_check(const System& system, int m, const Limits& limits) {
    require_plain(system);
    if (m < 1) throw PreconditionFailed("m must be positive");
    const int k = system.k();
    if (k < m) throw PreconditionFailed("needs k >= m");
    if (!system.moduli_sorted()) throw PreconditionFailed("moduli must be sorted ascending");

    Theorem12Result r;
    r.sum = system.reciprocal_sum();
    if (r.sum == Rational(m))
        throw PreconditionFailed("sum of reciprocals equals m; the bound does not apply");
    if (!is_m_system_checked(system, m, limits))
        throw PreconditionFailed("not an m-system for m = " + std::to_string(m));

    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k - m + 1));
    r.bound = Rational(m) - Rational(BigInt(1), pow2);
    r.bound_holds = r.sum <= r.bound;
    r.equality = r.sum == r.bound;

    r.extremal_form = true;
    for (int s = 1; s <= k; ++s) {
        BigInt want;
        mpz_ui_pow_ui(want.get_mpz_t(), 2,
                      static_cast<unsigned long>(std::max(s - m + 1, 0)));
        if (cmp(want, static_cast<long>(system.regular(s).n)) != 0) {
            r.extremal_form = false;
            break;
        }
    }
    if (r.equality != r.extremal_form)
        throw TheoremViolated("equality case disagrees with the power-of-two moduli form");
    return r;
}

Alternatives dual_variant_check(const System& system, int m, long long r,
                                const Limits& limits) {
    require_plain(system);
    if (m < 1) throw PreconditionFailed("m must be positive");
    if (!system.moduli_sorted()) throw PreconditionFailed("moduli must be sorted ascending");
    const int k = system.k();
    if (k < 2) throw PreconditionFailed("the tail block needs k >= 2");
    const int l = tail_block(system);
    if (l == k)
        throw PreconditionFailed("all moduli equal; the tail block needs 0 < l < k");
    const Int nk = system.regular(k).n;
    const Int below = system.regular(k - l).n;
    if (r < 0) throw PreconditionFailed("r must be nonnegative");
    if (r * below >= nk) throw PreconditionFailed("r must satisfy r < n_k / n_{k-l}");
    if (!is_m_system_checked(system, m, limits))
        throw PreconditionFailed("not an m-system for m = " + std::to_string(m));

    Alternatives alt;
    alt.alt1 = system.reciprocal_sum() <= Rational(m) - Rational(r, nk);
    alt.alt2 = d_membership(nk, binomial(static_cast<long long>(l) + r - 1, r), limits);
    if (!alt.alt1 && !alt.alt2)
        throw TheoremViolated("dual variant: neither alternative holds for r = " +
                              std::to_string(r));
    return alt;
}

bool newman_znam_check(const System& system, const Limits& limits) {
    require_plain(system);
    if (system.k() < 1) throw PreconditionFailed("needs at least one class");
    if (!system.moduli_sorted()) throw PreconditionFailed("moduli must be sorted ascending");
    CoveringProfile prof = covering_profile(system, limits);
    if (prof.min_multiplicity < 1 || prof.min_multiplicity != prof.max_multiplicity)
        throw PreconditionFailed("not an exact m-cover");
    const Int nk = system.regular(system.k()).n;
    if (nk < 2) throw PreconditionFailed("largest modulus must exceed 1");

    const int l = tail_block(system);
    Int least_prime = nk;
    for (Int p = 2; p * p <= nk; ++p)
        if (nk % p == 0) {
            least_prime = p;
            break;
        }
    return l >= least_prime;
}

ClassicalChecks classical_disjoint_checks(const System& system, const Limits& limits) {
    require_plain(system);
    if (!is_m_system_by_compatibility(system.regulars(), 1))
        throw PreconditionFailed("system is not disjoint");
    System sorted = system.sorted_by_modulus();
    const int k = sorted.k();

    ClassicalChecks out;
    Rational sum = sorted.reciprocal_sum();
    // For a disjoint system, covering is equivalent to sum 1/n_s = 1.
    bool is_cover = k >= 1 && sum == Rational(1);
    if (is_cover && sorted.regular(1).n > 1 && k >= 2)
        out.dmnr = sorted.regular(k - 1).n == sorted.regular(k).n;

    bool strict = k >= 1 && sorted.regular(1).n > 1;
    for (int s = 2; s <= k && strict; ++s)
        strict = sorted.regular(s - 1).n < sorted.regular(s).n;
    if (strict && k >= 1) {
        BigInt pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k));
        out.erdos62 = sum <= Rational(1) - Rational(BigInt(1), pow2);
    }

    if (!out.dmnr && !out.erdos62)
        throw PreconditionFailed(
            "neither pattern applies (disjoint cover with n_1 > 1, or strict moduli 1 < n_1 < ... < n_k)");
    (void)limits;
    return out;
}

System extremal_m_system(int k, int m) {
    if (m < 1 || k < m) throw Error("extremal family needs 1 <= m <= k");
    if (k - m + 1 > 62) throw Error("power-of-two moduli would overflow");
    std::vector<ResidueClass> classes;
    for (int i = 0; i < m - 1; ++i) classes.emplace_back(0, 1);
    Int mod = 2;
    for (int j = 1; j <= k - m + 1; ++j) {
        classes.emplace_back(mod / 2, mod);
        mod *= 2;
    }
    return System(std::move(classes), false);
}

}  // namespace covertool
