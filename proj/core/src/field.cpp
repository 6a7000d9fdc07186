#include "sumref/field.hpp"

#include <cctype>

namespace sumref {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; this base set decides primality for all
// 64-bit integers.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw InvalidInput("field modulus " + std::to_string(p) + " is not prime");
    FieldSpec s;
    s.kind = Kind::prime;
    s.p = p;
    return s;
}

FieldSpec FieldSpec::rationals() {
    FieldSpec s;
    s.kind = Kind::rational;
    s.p = 0;
    return s;
}

std::string FieldSpec::name() const {
    return kind == Kind::prime ? "F_" + std::to_string(p) : "Q";
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw InvalidInput("field modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw InvalidInput("division by zero in F_" + std::to_string(p_));
    // extended Euclid on (a, p); p prime so gcd is 1
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Element>(m);
}

PrimeField::Element PrimeField::from_fraction(long long num, long long den) const {
    if (den == 0) throw InvalidInput("fraction with zero denominator");
    Element d = from_int(den);
    if (d == 0)
        throw InvalidInput("denominator " + std::to_string(den) + " is not invertible mod " + std::to_string(p_));
    return mul(from_int(num), inv(d));
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty rational literal");
    // strict shape check: optional sign, digits, optionally "/" digits
    auto digits = [](const std::string& s, std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::size_t slash = text.find('/');
    std::size_t num_begin = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(text, num_begin, text.size());
    } else {
        ok = digits(text, num_begin, slash) && digits(text, slash + 1, text.size());
    }
    if (!ok) throw InvalidInput("malformed rational literal '" + text + "'");
    Rational q;
    if (q.set_str(text, 10) != 0) throw InvalidInput("malformed rational literal '" + text + "'");
    if (sgn(q.get_den()) == 0) throw InvalidInput("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace sumref
