#include "covertool/system.hpp"

#include <algorithm>
#include <numeric>

namespace covertool {

ResidueClass::ResidueClass(Int residue, Int modulus) : n(modulus) {
    if (modulus <= 0)
        throw InvalidModulus("modulus must be positive, got " + std::to_string(modulus));
    a = residue % modulus;
    if (a < 0) a += modulus;
}

bool ResidueClass::contains(Int x) const {
    Int r = x % n;
    if (r < 0) r += n;
    return r == a;
}

bool ResidueClass::intersects(const ResidueClass& other) const {
    Int g = std::gcd(n, other.n);
    return (a - other.a) % g == 0;
}

std::string ResidueClass::str() const {
    return std::to_string(a) + "(" + std::to_string(n) + ")";
}

System::System(std::vector<ResidueClass> classes, bool distinguished)
    : classes_(std::move(classes)), distinguished_(distinguished) {
    if (distinguished_ && classes_.empty())
        throw Error("distinguished system needs at least the index-0 class");
}

const ResidueClass& System::head() const {
    if (!distinguished_) throw Error("system has no distinguished class");
    return classes_.front();
}

const ResidueClass& System::regular(int s) const {
    if (s < 1 || s > k()) throw Error("class index out of range");
    return classes_[static_cast<std::size_t>(s) - (distinguished_ ? 0 : 1)];
}

std::span<const ResidueClass> System::regulars() const {
    std::span<const ResidueClass> s(classes_);
    return distinguished_ ? s.subspan(1) : s;
}

BigInt System::modulus_lcm() const {
    BigInt l = 1;
    for (const auto& c : classes_) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), c.n);
    return l;
}

Rational System::reciprocal_sum() const {
    Rational s;
    for (const auto& c : regulars()) s += Rational(1, c.n);
    return s;
}

System System::sorted_by_modulus() const {
    std::vector<ResidueClass> sorted(classes_.begin(), classes_.end());
    std::sort(sorted.begin(), sorted.end());
    return System(std::move(sorted), false);
}

bool System::moduli_sorted() const {
    return std::is_sorted(classes_.begin(), classes_.end(),
                          [](const ResidueClass& x, const ResidueClass& y) { return x.n < y.n; });
}

}  // namespace covertool
