#include "covertool/characterizations.hpp"

#include <algorithm>
#include <numeric>

#include "covertool/enumeration.hpp"

namespace covertool {

namespace {

Int checked_order(const System& system, const Limits& limits) {
    BigInt big_n = system.modulus_lcm();
    if (cmp(big_n, static_cast<long>(limits.sieve_ceiling)) > 0)
        throw SieveTooLarge("lcm of moduli " + big_n.get_str() +
                            " exceeds the cyclotomic/sieve ceiling");
    return big_n.get_si();
}

void require_plain(const System& system) {
    if (system.distinguished())
        throw PreconditionFailed("expects a plain system without a distinguished class");
}

// Dense accumulator indexed by (fractional-part index t, floor j, phase p),
// with the running max |entry| tracked so assembly can pick the int64 path.
struct PhaseBuckets {
    Int order;
    int jdim;
    std::vector<std::int64_t> data;
    std::int64_t max_abs = 0;

    PhaseBuckets(Int order, int jdim_in)
        : order(order), jdim(jdim_in) {
        unsigned long long cells = static_cast<unsigned long long>(order) * order *
                                   static_cast<unsigned long long>(std::max(jdim, 1));
        if (cells > 50'000'000ULL)
            throw EnumerationTooLarge("phase bucket table would need " + std::to_string(cells) +
                                      " cells");
        data.assign(cells, 0);
    }

    void add(Int t, int j, Int p, std::int64_t d) {
        auto& cell = data[(static_cast<std::size_t>(t) * jdim + j) * order +
                          static_cast<std::size_t>(p)];
        cell += d;
        std::int64_t a = cell < 0 ? -cell : cell;
        max_abs = std::max(max_abs, a);
    }

    const std::int64_t* slice(Int t, int j) const {
        return &data[(static_cast<std::size_t>(t) * jdim + j) * order];
    }
};

// Exact vanish test of sum_j weights[j] * slice(t, j) - constant. Uses the
// machine-int path when a safe a-priori bound holds, exact mpz otherwise.
bool weighted_vanish(const PhaseBuckets& b, Int t, std::span<const BigInt> weights,
                     const BigInt& subtract_const) {
    bool fast = subtract_const.fits_slong_p();
    unsigned long long wsum = 0;
    for (const auto& w : weights) {
        if (!w.fits_slong_p()) { fast = false; break; }
        long long v = w.get_si();
        wsum += static_cast<unsigned long long>(v < 0 ? -v : v);
    }
    if (fast && b.max_abs > 0 && wsum > (1ULL << 61) / static_cast<unsigned long long>(b.max_abs))
        fast = false;

    if (fast) {
        std::vector<std::int64_t> vec(static_cast<std::size_t>(b.order), 0);
        bool any = subtract_const != 0;
        for (int j = 0; j < static_cast<int>(weights.size()); ++j) {
            long long w = weights[static_cast<std::size_t>(j)].get_si();
            if (w == 0) continue;
            const std::int64_t* row = b.slice(t, j);
            for (Int p = 0; p < b.order; ++p) {
                vec[static_cast<std::size_t>(p)] += w * row[p];
                any |= row[p] != 0;
            }
        }
        if (!any) return true;
        vec[0] -= subtract_const.get_si();
        return vanishes_in_cyclotomic(vec, b.order);
    }

    CyclotomicElement e(b.order);
    for (int j = 0; j < static_cast<int>(weights.size()); ++j) {
        const BigInt& w = weights[static_cast<std::size_t>(j)];
        if (sgn(w) == 0) continue;
        const std::int64_t* row = b.slice(t, j);
        for (Int p = 0; p < b.order; ++p)
            if (row[p] != 0) e.add_term(p, w * row[p]);
    }
    e.add_term(0, -subtract_const);
    return e.is_zero();
}

}  // namespace

Lemma21Certificate lemma_2_1_certificate(const WeightedSystem& ws, int m,
                                         const Limits& limits) {
    require_plain(ws.system);
    if (m < 1) throw PreconditionFailed("m must be positive");
    const Int n = checked_order(ws.system, limits);

    Lemma21Certificate cert;
    cert.multiplicities.assign(static_cast<std::size_t>(n), 0);
    for (int s = 1; s <= ws.k(); ++s) {
        const ResidueClass& c = ws.system.regular(s);
        Int mu = ws.weights[static_cast<std::size_t>(s - 1)] % c.n;
        if (mu == 0) {
            // n_s divides m_s: every r qualifies.
            for (Int r = 0; r < n; ++r) cert.multiplicities[static_cast<std::size_t>(r)]++;
            continue;
        }
        Int g = std::gcd(mu, c.n);
        Int np = c.n / g;  // r must satisfy r = -a_s (mod n_s/g)
        Int r0 = (np - c.a % np) % np;
        for (Int r = r0; r < n; r += np) cert.multiplicities[static_cast<std::size_t>(r)]++;
    }
    auto min_m = *std::min_element(cert.multiplicities.begin(), cert.multiplicities.end());
    cert.divides = min_m >= m;
    cert.weights_coprime = ws.weights_coprime();

    if (cert.weights_coprime) {
        bool cover = classify(ws.system, m, limits).is_m_cover;
        if (cover != cert.divides)
            throw CharacterizationMismatch(
                "divisibility certificate disagrees with the m-cover scan");
    }
    return cert;
}

bool lemma_2_1_division_crosscheck(const WeightedSystem& ws, int m, const Limits& limits) {
    require_plain(ws.system);
    const Int n = checked_order(ws.system, limits);
    if (n > 48)
        throw EnumerationTooLarge("literal polynomial route is limited to lcm <= 48");

    BigInt deg_big = 0;
    for (int s = 1; s <= ws.k(); ++s)
        deg_big += to_big(ws.weights[static_cast<std::size_t>(s - 1)]) *
                   to_big(n / ws.system.regular(s).n);
    if (cmp(deg_big, 100'000) > 0)
        throw EnumerationTooLarge("product polynomial degree " + deg_big.get_str() +
                                  " too large");
    const Int deg = deg_big.get_si();
    if (deg < static_cast<Int>(m) * n) return false;  // too low a degree to be divisible

    auto rotated = [&](const CyclotomicElement& e, Int by) {
        CyclotomicElement r(n);
        const auto& cs = e.coeffs();
        for (std::size_t idx = 0; idx < cs.size(); ++idx)
            if (sgn(cs[idx]) != 0) r.add_term(static_cast<Int>(idx) + by, cs[idx]);
        return r;
    };

    // prod_s (1 - zeta^(phase_s) z^(e_s)) with coefficients in Z[zeta_N].
    std::vector<CyclotomicElement> poly(static_cast<std::size_t>(deg) + 1,
                                        CyclotomicElement(n));
    poly[0] = CyclotomicElement::from_integer(n, 1);
    Int cur = 0;
    for (int s = 1; s <= ws.k(); ++s) {
        const ResidueClass& c = ws.system.regular(s);
        Int w = ws.weights[static_cast<std::size_t>(s - 1)];
        Int e = w * (n / c.n);
        Int ph = ((c.a % c.n) * (w % c.n)) % c.n * (n / c.n) % n;
        for (Int i = cur + e; i >= 0; --i) {
            if (i >= e) {
                CyclotomicElement sub = rotated(poly[static_cast<std::size_t>(i - e)], ph);
                poly[static_cast<std::size_t>(i)] -= sub;
            }
        }
        cur += e;
    }

    // Divide by (1 - z^N) m times; exact iff the trailing window vanishes.
    for (int round = 0; round < m; ++round) {
        std::vector<CyclotomicElement> q(static_cast<std::size_t>(cur) + 1,
                                         CyclotomicElement(n));
        for (Int j = 0; j <= cur; ++j) {
            q[static_cast<std::size_t>(j)] = poly[static_cast<std::size_t>(j)];
            if (j >= n) q[static_cast<std::size_t>(j)] += q[static_cast<std::size_t>(j - n)];
        }
        for (Int j = cur - n + 1; j <= cur; ++j)
            if (!q[static_cast<std::size_t>(j)].is_zero()) return false;
        cur -= n;
        poly.assign(q.begin(), q.begin() + cur + 1);
    }
    return true;
}

SAlphaSum s_alpha(const System& system, long long n, const Rational& alpha,
                  const Limits& limits) {
    require_plain(system);
    if (n < 0) throw PreconditionFailed("n must be nonnegative");
    if (alpha.sign() < 0) throw PreconditionFailed("alpha must be nonnegative");
    const Int order = checked_order(system, limits);
    const int k = system.k();

    SAlphaSum out{n, alpha, CyclotomicElement(order)};
    Rational ta_rat = alpha * Rational(order);
    if (!ta_rat.is_integer()) return out;  // no tuple sum has this fractional part
    BigInt ta_big = ta_rat.num();
    if (!ta_big.fits_slong_p())
        throw EnumerationTooLarge("alpha too large for the tuple enumeration");
    const Int ta = ta_big.get_si();
    const Int tmax = ta + static_cast<Int>(n) * order;

    std::vector<Int> step(static_cast<std::size_t>(k)), phase(static_cast<std::size_t>(k));
    std::vector<Int> min_rest(static_cast<std::size_t>(k) + 1, 0);
    for (int s = 1; s <= k; ++s) {
        const ResidueClass& c = system.regular(s);
        step[static_cast<std::size_t>(s - 1)] = order / c.n;
        phase[static_cast<std::size_t>(s - 1)] = c.a % c.n * (order / c.n) % order;
    }
    for (int s = k; s-- > 0;)
        min_rest[static_cast<std::size_t>(s)] =
            min_rest[static_cast<std::size_t>(s) + 1] + step[static_cast<std::size_t>(s)];

    long long nodes = 0;
    auto rec = [&](auto&& self, int s, Int t, Int ph) -> void {
        if (++nodes > limits.tuple_ceiling)
            throw EnumerationTooLarge("tuple enumeration exceeded the ceiling");
        if (s == k) {
            if (t < ta || (t - ta) % order != 0) return;
            Int j = (t - ta) / order;
            BigInt coeff = binomial(static_cast<long long>(n), j);
            if (j % 2 != 0) coeff = -coeff;
            out.value.add_term(ph, coeff);
            return;
        }
        const auto i = static_cast<std::size_t>(s);
        for (Int ms = 1;; ++ms) {
            Int tt = t + ms * step[i];
            if (tt + min_rest[i + 1] > tmax) break;
            self(self, s + 1, tt, (ph + ms % order * phase[i]) % order);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

bool theorem_1_3_check(const System& system, int m, const Limits& limits) {
    require_plain(system);
    if (m < 1) throw PreconditionFailed("m must be positive");
    const bool direct = classify(system, m, limits).is_m_system;
    const int k = system.k();

    bool identities = true;
    if (m < k) {
        const Int order = checked_order(system, limits);
        PhaseBuckets buckets(order, k);  // floors 0..k-1 (sums < k)

        std::vector<Int> step(static_cast<std::size_t>(k)), phase(static_cast<std::size_t>(k));
        std::vector<Int> min_rest(static_cast<std::size_t>(k) + 1, 0);
        for (int s = 1; s <= k; ++s) {
            const ResidueClass& c = system.regular(s);
            step[static_cast<std::size_t>(s - 1)] = order / c.n;
            phase[static_cast<std::size_t>(s - 1)] = c.a % c.n * (order / c.n) % order;
        }
        for (int s = k; s-- > 0;)
            min_rest[static_cast<std::size_t>(s)] =
                min_rest[static_cast<std::size_t>(s) + 1] + step[static_cast<std::size_t>(s)];

        const Int tmax = static_cast<Int>(k) * order - 1;  // sums strictly below k
        long long nodes = 0;
        auto rec = [&](auto&& self, int s, Int t, Int ph) -> void {
            if (++nodes > limits.tuple_ceiling)
                throw EnumerationTooLarge("tuple enumeration exceeded the ceiling");
            if (s == k) {
                buckets.add(t % order, static_cast<int>(t / order), ph, 1);
                return;
            }
            const auto i = static_cast<std::size_t>(s);
            for (Int ms = 1;; ++ms) {
                Int tt = t + ms * step[i];
                if (tt + min_rest[i + 1] > tmax) break;
                self(self, s + 1, tt, (ph + ms % order * phase[i]) % order);
            }
        };
        rec(rec, 0, 0, 0);

        const BigInt minus_one_k = k % 2 == 0 ? 1 : -1;
        std::vector<BigInt> weights(static_cast<std::size_t>(k));
        for (long long n = m; n < k && identities; ++n) {
            for (int j = 0; j < k; ++j) {
                weights[static_cast<std::size_t>(j)] = binomial(n, j);
                if (j % 2 != 0)
                    weights[static_cast<std::size_t>(j)] = -weights[static_cast<std::size_t>(j)];
            }
            for (Int t = 0; t < order && identities; ++t)
                identities = weighted_vanish(buckets, t, weights,
                                             t == 0 ? minus_one_k : BigInt(0));
        }
    }

    if (identities != direct)
        throw CharacterizationMismatch("S(n, alpha) identities disagree with the m-system scan");
    return identities;
}

bool lemma_3_1_check(const WeightedSystem& ws, int m, const Limits& limits) {
    require_plain(ws.system);
    if (m < 1) throw PreconditionFailed("m must be positive");
    const int k = ws.k();
    if (k > 30) throw TooManySubsets("k = " + std::to_string(k) + " exceeds the 2^30 guard");
    const Int order = checked_order(ws.system, limits);

    BigInt total_scaled = 0;
    for (int s = 1; s <= k; ++s)
        total_scaled += to_big(ws.weights[static_cast<std::size_t>(s - 1)]) *
                        to_big(order / ws.system.regular(s).n);
    if (!total_scaled.fits_slong_p())
        throw EnumerationTooLarge("weights too large for the subset enumeration");
    const int jdim = static_cast<int>(total_scaled.get_si() / order) + 1;
    if (jdim > 1024) throw EnumerationTooLarge("floor(sum m_s/n_s) too large");

    PhaseBuckets buckets(order, jdim);
    std::vector<Int> step(static_cast<std::size_t>(k)), phase(static_cast<std::size_t>(k));
    for (int s = 1; s <= k; ++s) {
        const ResidueClass& c = ws.system.regular(s);
        Int w = ws.weights[static_cast<std::size_t>(s - 1)];
        step[static_cast<std::size_t>(s - 1)] = w * (order / c.n);
        phase[static_cast<std::size_t>(s - 1)] = (c.a % c.n * (w % c.n)) % c.n * (order / c.n) % order;
    }

    auto rec = [&](auto&& self, int s, Int t, Int ph, int sign) -> void {
        if (s == 0) {
            buckets.add(t % order, static_cast<int>(t / order), ph, sign);
            return;
        }
        const auto i = static_cast<std::size_t>(s - 1);
        self(self, s - 1, t, ph, sign);
        self(self, s - 1, t + step[i], (ph + phase[i]) % order, -sign);
    };
    rec(rec, k, 0, 0, 1);

    bool identities = true;
    std::vector<BigInt> weights(static_cast<std::size_t>(jdim));
    for (long long n = 0; n < m && identities; ++n) {
        for (int j = 0; j < jdim; ++j) weights[static_cast<std::size_t>(j)] = binomial(j, n);
        for (Int t = 0; t < order && identities; ++t)
            identities = weighted_vanish(buckets, t, weights, 0);
    }

    if (ws.weights_coprime()) {
        bool cover = classify(ws.system, m, limits).is_m_cover;
        if (cover != identities)
            throw CharacterizationMismatch(
                "subset-sum identities disagree with the m-cover scan");
    }
    return identities;
}

bool theorem_3_1_check(const System& system, int m, const Limits& limits) {
    require_plain(system);
    if (m < 1) throw PreconditionFailed("m must be positive");
    const bool direct = classify(system, m, limits).is_m_system;
    const int k = system.k();

    bool identities = true;
    if (m < k) {
        BigInt product = 1;
        for (const auto& c : system.regulars()) product *= to_big(c.n);
        if (cmp(product, static_cast<long>(limits.tuple_ceiling)) > 0)
            throw EnumerationTooLarge("product of moduli exceeds the tuple ceiling");
        const Int order = checked_order(system, limits);

        PhaseBuckets buckets(order, k);  // sums over x_s in [0, n_s) stay below k
        std::vector<Int> step(static_cast<std::size_t>(k)), phase(static_cast<std::size_t>(k));
        for (int s = 1; s <= k; ++s) {
            const ResidueClass& c = system.regular(s);
            step[static_cast<std::size_t>(s - 1)] = order / c.n;
            phase[static_cast<std::size_t>(s - 1)] = c.a % c.n * (order / c.n) % order;
        }

        auto rec = [&](auto&& self, int s, Int t, Int ph) -> void {
            if (s == k) {
                buckets.add(t % order, static_cast<int>(t / order), ph, 1);
                return;
            }
            const auto i = static_cast<std::size_t>(s);
            const Int n_s = system.regular(s + 1).n;
            for (Int x = 0; x < n_s; ++x)
                self(self, s + 1, t + x * step[i], (ph + x * phase[i]) % order);
        };
        rec(rec, 0, 0, 0);

        std::vector<BigInt> weights(static_cast<std::size_t>(k));
        for (long long n = 0; n < k - m && identities; ++n) {
            for (int j = 0; j < k; ++j) weights[static_cast<std::size_t>(j)] = binomial(j, n);
            for (Int t = 0; t < order && identities; ++t)
                identities = weighted_vanish(buckets, t, weights, 0);
        }
    }

    if (identities != direct)
        throw CharacterizationMismatch("tuple identities disagree with the m-system scan");
    return identities;
}

bool corollary_1_5_check(const System& system, const Limits& limits) {
    require_plain(system);
    const int k = system.k();
    if (k < 1) throw PreconditionFailed("needs at least one class");
    if (!is_m_system_by_compatibility(system.regulars(), 1))
        throw PreconditionFailed("system is not disjoint");
    BigInt product = 1;
    for (const auto& c : system.regulars()) product *= to_big(c.n);
    if (cmp(product, static_cast<long>(limits.tuple_ceiling)) > 0)
        throw EnumerationTooLarge("product of moduli exceeds the tuple ceiling");
    const Int order = checked_order(system, limits);

    std::vector<Int> step(static_cast<std::size_t>(k)), phase(static_cast<std::size_t>(k));
    std::vector<Int> min_rest(static_cast<std::size_t>(k) + 1, 0);
    for (int s = 1; s <= k; ++s) {
        const ResidueClass& c = system.regular(s);
        step[static_cast<std::size_t>(s - 1)] = order / c.n;
        phase[static_cast<std::size_t>(s - 1)] = c.a % c.n * (order / c.n) % order;
    }
    for (int s = k; s-- > 0;)
        min_rest[static_cast<std::size_t>(s)] =
            min_rest[static_cast<std::size_t>(s) + 1] + step[static_cast<std::size_t>(s)];

    CyclotomicElement acc(order);
    auto rec = [&](auto&& self, int s, Int t, Int ph) -> void {
        if (s == k) {
            if (t == order) acc.add_term(ph, 1);
            return;
        }
        const auto i = static_cast<std::size_t>(s);
        const Int n_s = system.regular(s + 1).n;
        for (Int ms = 1; ms <= n_s; ++ms) {
            Int tt = t + ms * step[i];
            if (tt + min_rest[i + 1] > order) break;
            self(self, s + 1, tt, (ph + ms * phase[i]) % order);
        }
    };
    rec(rec, 0, 0, 0);

    const BigInt want = (k - 1) % 2 == 0 ? 1 : -1;
    return acc.equals(CyclotomicElement::from_integer(order, want));
}

bool corollary_3_1_check(const System& system, int m, const Limits& limits) {
    require_plain(system);
    if (m < 1) throw PreconditionFailed("m must be positive");
    if (!is_m_system_checked(system, m, limits))
        throw PreconditionFailed("not an m-system for m = " + std::to_string(m));
    const int k = system.k();
    BigInt product = 1;
    for (const auto& c : system.regulars()) product *= to_big(c.n);
    if (cmp(product, static_cast<long>(limits.tuple_ceiling)) > 0)
        throw EnumerationTooLarge("product of moduli exceeds the tuple ceiling");
    const Int order = checked_order(system, limits);

    std::vector<Int> step(static_cast<std::size_t>(k)), phase(static_cast<std::size_t>(k));
    std::vector<Int> min_rest(static_cast<std::size_t>(k) + 1, 0);
    for (int s = 1; s <= k; ++s) {
        const ResidueClass& c = system.regular(s);
        step[static_cast<std::size_t>(s - 1)] = order / c.n;
        phase[static_cast<std::size_t>(s - 1)] = c.a % c.n * (order / c.n) % order;
    }
    for (int s = k; s-- > 0;)
        min_rest[static_cast<std::size_t>(s)] =
            min_rest[static_cast<std::size_t>(s) + 1] + step[static_cast<std::size_t>(s)];

    const Int tmax = static_cast<Int>(m) * order;
    CyclotomicElement acc(order);
    auto rec = [&](auto&& self, int s, Int t, Int ph) -> void {
        if (s == k) {
            if (t % order != 0) return;
            long long sigma = t / order;  // m - sigma is a nonnegative integer here
            acc.add_term(ph, binomial(static_cast<long long>(k) - 1 - sigma,
                                      static_cast<long long>(m) - sigma));
            return;
        }
        const auto i = static_cast<std::size_t>(s);
        const Int n_s = system.regular(s + 1).n;
        for (Int ms = 1; ms <= n_s; ++ms) {
            Int tt = t + ms * step[i];
            if (tt + min_rest[i + 1] > tmax) break;
            self(self, s + 1, tt, (ph + ms * phase[i]) % order);
        }
    };
    rec(rec, 0, 0, 0);

    const BigInt want = (k - m) % 2 == 0 ? 1 : -1;
    return acc.equals(CyclotomicElement::from_integer(order, want));
}

}  // namespace covertool
