#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "covertool/rational.hpp"

namespace covertool {

// One congruence class a(n) = { x : x = a (mod n) }, kept canonical: 0 <= a < n.
struct ResidueClass {
    Int a = 0;
    Int n = 1;

    ResidueClass() = default;
    ResidueClass(Int residue, Int modulus);

    bool contains(Int x) const;
    // a(m) and b(n) share an integer iff gcd(m, n) divides a - b.
    bool intersects(const ResidueClass& other) const;

    std::string str() const;  // "a(n)"

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
    friend std::strong_ordering operator<=>(const ResidueClass& x, const ResidueClass& y) {
        if (auto c = x.n <=> y.n; c != 0) return c;
        return x.a <=> y.a;
    }
};

// An ordered list of residue classes. When `distinguished` is set, the first
// class plays the role of the index-0 class a_0(n_0) and the remaining k
// classes are indexed 1..k; otherwise all classes are indexed 1..k.
class System {
public:
    System() = default;
    System(std::vector<ResidueClass> classes, bool distinguished = false);

    bool distinguished() const { return distinguished_; }
    int k() const { return static_cast<int>(classes_.size()) - (distinguished_ ? 1 : 0); }
    std::size_t size() const { return classes_.size(); }
    bool empty() const { return classes_.empty(); }

    const ResidueClass& head() const;            // requires distinguished()
    const ResidueClass& regular(int s) const;    // s in [1, k]
    std::span<const ResidueClass> all() const { return classes_; }
    std::span<const ResidueClass> regulars() const;

    BigInt modulus_lcm() const;        // over all classes; 1 when empty
    Rational reciprocal_sum() const;   // sum of 1/n_s over the regular classes

    // Classes reordered by (modulus, residue); drops no class. Head flag is
    // preserved only for non-distinguished systems (sorting a distinguished
    // system would lose the index-0 role).
    System sorted_by_modulus() const;
    bool moduli_sorted() const;

    friend bool operator==(const System&, const System&) = default;

private:
    std::vector<ResidueClass> classes_;
    bool distinguished_ = false;
};

}  // namespace covertool
