#include "covertool/cyclotomic.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

namespace covertool {

namespace {

// Exact division of p by a monic divisor d; the remainder must vanish.
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> p, const std::vector<BigInt>& d) {
    const auto dd = d.size() - 1;  // degree of divisor
    if (p.size() < d.size()) throw Error("polynomial division underflow");
    std::vector<BigInt> q(p.size() - dd);
    for (std::size_t i = p.size(); i-- > dd;) {
        BigInt lead = p[i];
        if (sgn(lead) == 0) continue;
        q[i - dd] = lead;
        for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= lead * d[j];
    }
    for (const auto& c : p)
        if (sgn(c) != 0) throw Error("polynomial division was not exact");
    return q;
}

std::mutex phi_mutex;
std::map<Int, CyclotomicPolynomial> phi_cache;

// Assumes phi_mutex is held. Divisors of n are filled in ascending order, so
// every proper divisor is present before it is needed.
const CyclotomicPolynomial& phi_locked(Int n) {
    if (auto it = phi_cache.find(n); it != phi_cache.end()) return it->second;
    for (Int d = 1; d <= n; ++d) {
        if (n % d != 0 || phi_cache.count(d)) continue;
        std::vector<BigInt> p(static_cast<std::size_t>(d) + 1);
        p[0] = -1;
        p[static_cast<std::size_t>(d)] = 1;
        for (Int e = 1; e < d; ++e)
            if (d % e == 0) p = poly_divide_exact(std::move(p), phi_cache.at(e).coeffs);
        phi_cache.emplace(d, CyclotomicPolynomial{d, std::move(p)});
    }
    return phi_cache.at(n);
}

// Rows of x^j mod Phi_N for j in [0, N), plus a flattened int64 copy when the
// entries are small enough for the machine-int fast path.
struct ReductionTable {
    Int order = 1;
    std::size_t deg = 1;
    std::vector<std::vector<BigInt>> rows;
    bool has_fast = false;
    std::vector<std::int64_t> rows64;
    std::int64_t max_abs = 0;
};

std::mutex red_mutex;
std::map<Int, ReductionTable> red_cache;

const ReductionTable& reduction_table(Int n) {
    std::scoped_lock lock(red_mutex);
    if (auto it = red_cache.find(n); it != red_cache.end()) return it->second;

    std::vector<BigInt> phi;
    {
        std::scoped_lock phi_lock(phi_mutex);
        phi = phi_locked(n).coeffs;
    }
    ReductionTable t;
    t.order = n;
    t.deg = phi.size() - 1;
    t.rows.assign(static_cast<std::size_t>(n), std::vector<BigInt>(t.deg));
    t.rows[0][0] = 1;
    for (std::size_t j = 1; j < t.rows.size(); ++j) {
        // x * rows[j-1], reduced by the monic Phi_N.
        BigInt lead = t.rows[j - 1][t.deg - 1];
        for (std::size_t i = t.deg; i-- > 1;) t.rows[j][i] = t.rows[j - 1][i - 1];
        t.rows[j][0] = 0;
        if (sgn(lead) != 0)
            for (std::size_t i = 0; i < t.deg; ++i) t.rows[j][i] -= lead * phi[i];
    }

    t.has_fast = true;
    for (const auto& row : t.rows)
        for (const auto& c : row) {
            if (!c.fits_slong_p()) { t.has_fast = false; break; }
            t.max_abs = std::max(t.max_abs, std::int64_t(std::llabs(c.get_si())));
        }
    if (t.has_fast) {
        t.rows64.reserve(t.rows.size() * t.deg);
        for (const auto& row : t.rows)
            for (const auto& c : row) t.rows64.push_back(c.get_si());
    }
    return red_cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

CyclotomicElement::CyclotomicElement(Int order) : order_(order) {
    if (order < 1) throw Error("cyclotomic order must be positive");
    coeffs_.resize(static_cast<std::size_t>(order));
}

CyclotomicElement CyclotomicElement::from_integer(Int order, BigInt value) {
    CyclotomicElement e(order);
    e.coeffs_[0] = std::move(value);
    return e;
}

CyclotomicElement root_of_unity(Int order, Int exponent) {
    CyclotomicElement e(order);
    e.add_term(exponent, 1);
    return e;
}

void CyclotomicElement::add_term(Int exponent, const BigInt& c) {
    Int j = exponent % order_;
    if (j < 0) j += order_;
    coeffs_[static_cast<std::size_t>(j)] += c;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (order_ != o.order_) throw Error("cyclotomic order mismatch");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
    if (order_ != o.order_) throw Error("cyclotomic order mismatch");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
    if (order_ != o.order_) throw Error("cyclotomic order mismatch");
    CyclotomicElement r(order_);
    const auto n = coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(o.coeffs_[j]) == 0) continue;
            std::size_t k = i + j;
            if (k >= n) k -= n;
            r.coeffs_[k] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r(order_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) r.coeffs_[j] = -coeffs_[j];
    return r;
}

bool CyclotomicElement::is_zero() const {
    const auto& t = reduction_table(order_);
    std::vector<BigInt> rem(t.deg);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) continue;
        const auto& row = t.rows[j];
        for (std::size_t i = 0; i < t.deg; ++i) rem[i] += coeffs_[j] * row[i];
    }
    for (const auto& c : rem)
        if (sgn(c) != 0) return false;
    return true;
}

bool CyclotomicElement::equals(const CyclotomicElement& o) const {
    CyclotomicElement d = *this;
    d -= o;
    return d.is_zero();
}

BigInt CyclotomicElement::galois_norm() const {
    CyclotomicElement prod = from_integer(order_, 1);
    const auto n = static_cast<std::size_t>(order_);
    for (Int r = 1; r <= order_; ++r) {
        if (std::gcd(r, order_) != 1) continue;
        CyclotomicElement conj(order_);
        for (std::size_t j = 0; j < n; ++j)
            conj.coeffs_[static_cast<std::size_t>((j * static_cast<std::size_t>(r)) % n)] +=
                coeffs_[j];
        prod = prod * conj;
    }
    const auto& t = reduction_table(order_);
    std::vector<BigInt> rem(t.deg);
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(prod.coeffs_[j]) == 0) continue;
        for (std::size_t i = 0; i < t.deg; ++i) rem[i] += prod.coeffs_[j] * t.rows[j][i];
    }
    for (std::size_t i = 1; i < t.deg; ++i)
        if (sgn(rem[i]) != 0)
            throw NormNotRationalInteger("conjugate product is not a rational integer");
    return rem[0];
}

std::string CyclotomicElement::str() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const BigInt& c = coeffs_[j];
        if (sgn(c) == 0) continue;
        BigInt mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (j == 0)
            out += mag.get_str();
        else {
            if (mag != 1) out += mag.get_str() + "*";
            out += "z^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

const CyclotomicPolynomial& cyclotomic_poly(Int n) {
    if (n < 1) throw Error("cyclotomic index must be positive");
    std::scoped_lock lock(phi_mutex);
    return phi_locked(n);
}

bool vanishes_in_cyclotomic(std::span<const std::int64_t> coeffs, Int order) {
    if (coeffs.size() != static_cast<std::size_t>(order))
        throw Error("coefficient vector length must equal the order");
    const auto& t = reduction_table(order);
    if (t.has_fast) {
        // Saturating |c| sum: overflow must fall back to the exact path, never
        // sneak through the bound check.
        const unsigned long long cap = 1ULL << 62;
        unsigned long long weight = 0;
        bool all_zero = true;
        for (auto c : coeffs) {
            unsigned long long a =
                c == std::numeric_limits<std::int64_t>::min()
                    ? (1ULL << 63)
                    : static_cast<unsigned long long>(c < 0 ? -c : c);
            weight = (weight > cap - std::min(a, cap)) ? cap : weight + std::min(a, cap);
            all_zero &= c == 0;
        }
        if (all_zero) return true;
        if (weight < cap &&
            (t.max_abs == 0 ||
             weight <= cap / static_cast<unsigned long long>(t.max_abs))) {
            std::vector<std::int64_t> rem(t.deg, 0);
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                if (coeffs[j] == 0) continue;
                const std::int64_t* row = &t.rows64[j * t.deg];
                for (std::size_t i = 0; i < t.deg; ++i) rem[i] += coeffs[j] * row[i];
            }
            for (auto v : rem)
                if (v != 0) return false;
            return true;
        }
    }
    CyclotomicElement e(order);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        e.add_term(static_cast<Int>(j), coeffs[j]);
    return e.is_zero();
}

namespace {

std::mutex lemma32_mutex;
std::map<Int, std::vector<char>> lemma32_cache;

// Elementary-symmetric DP over the variables zeta_n^1 .. zeta_n^(n-1): after
// all items, e[l] is exactly the sum over l-subsets J of [1,n) of
// zeta_n^(sum of J).
std::vector<char> lemma32_table(Int n) {
    std::vector<CyclotomicElement> e;
    e.reserve(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) e.emplace_back(n);
    e[0].add_term(0, 1);
    for (Int j = 1; j < n; ++j)
        for (Int l = std::min<Int>(j, n - 1); l >= 1; --l) {
            CyclotomicElement shifted(n);
            const auto& prev = e[static_cast<std::size_t>(l - 1)].coeffs();
            for (std::size_t idx = 0; idx < prev.size(); ++idx)
                shifted.add_term(static_cast<Int>(idx) + j, prev[idx]);
            e[static_cast<std::size_t>(l)] += shifted;
        }
    std::vector<char> ok(static_cast<std::size_t>(n));
    for (Int l = 0; l < n; ++l) {
        CyclotomicElement want = CyclotomicElement::from_integer(n, l % 2 == 0 ? 1 : -1);
        ok[static_cast<std::size_t>(l)] = e[static_cast<std::size_t>(l)].equals(want);
    }
    return ok;
}

}  // namespace

bool lemma_3_2_check(Int n, Int l) {
    if (n < 1 || l < 0 || l >= n) throw Error("lemma_3_2_check needs 0 <= l < n");
    std::scoped_lock lock(lemma32_mutex);
    auto it = lemma32_cache.find(n);
    if (it == lemma32_cache.end()) it = lemma32_cache.emplace(n, lemma32_table(n)).first;
    return it->second[static_cast<std::size_t>(l)] != 0;
}

}  // namespace covertool
