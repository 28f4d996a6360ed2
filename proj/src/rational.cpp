#include "qbounds/rational.hpp"

#include "qbounds/errors.hpp"

#include <cctype>

namespace qbounds {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParameterError("malformed rational '" + std::string(text) + "'");
    return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw ParameterError("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer ipow(std::int64_t base, unsigned exp) {
    Integer out;
    Integer b(static_cast<long>(base));
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
    return out;
}

Rational pow2(std::int64_t exp) {
    if (exp >= 0) return Rational(ipow(2, static_cast<unsigned>(exp)));
    return make_rational(1, ipow(2, static_cast<unsigned>(-exp)));
}

std::int64_t floor_log2(const Rational& r) {
    if (r <= 0) throw ParameterError("floor_log2 of a nonpositive value");
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    // Initial guess from bit lengths, then correct by at most one.
    auto m = static_cast<std::int64_t>(mpz_sizeinbase(p.get_mpz_t(), 2)) -
             static_cast<std::int64_t>(mpz_sizeinbase(q.get_mpz_t(), 2));
    while (pow2(m) > r) --m;
    while (pow2(m + 1) <= r) ++m;
    return m;
}

Rational falling_binomial(const Rational& x, unsigned j) {
    Rational out = 1;
    for (unsigned i = 0; i < j; ++i) {
        out *= x - i;
        out /= i + 1;
    }
    return out;
}

}  // namespace qbounds
