#include "grasscoh/rational.hpp"

#include <cctype>
#include <ostream>

namespace grasscoh {

Rational::Rational(long num, long den) {
    if (den == 0) throw error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    // Strip spaces; mpq set_str rejects them.
    std::string compact;
    compact.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty()) throw parse_error("Rational: empty string");
    mpq_class v;
    if (v.set_str(compact, 10) != 0)
        throw parse_error("Rational: cannot parse '" + std::string(text) + "'");
    if (v.get_den() == 0) throw parse_error("Rational: zero denominator in '" + compact + "'");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned long e) const {
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    // num/den already coprime, so powers are coprime too.
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational::parse(b.get_str());
}

}  // namespace grasscoh
