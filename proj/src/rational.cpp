#include "covertool/rational.hpp"

namespace covertool {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

BigInt Rational::floor() const {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

BigInt Rational::ceil() const {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
    auto fail = [&](const std::string& why) {
        throw ParseError("bad rational '" + text + "': " + why, 1, 1);
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail("empty");
    if (s.find('.') != std::string::npos) fail("floats are not accepted, use u/v");
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(s)) fail("not an integer");
        return Rational(BigInt(s));
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) fail("not of the form u/v");
    BigInt den(ds);
    if (sgn(den) == 0) fail("zero denominator");
    return Rational(BigInt(ns), den);
}

BigInt binomial(const BigInt& top, long long j) {
    if (j < 0) return 0;
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
    return r;
}

}  // namespace covertool
