#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sumref/errors.hpp"

namespace sumref {

/// Exact arbitrary-precision rational, always kept in canonical form
/// (reduced, positive denominator).
using Rational = mpq_class;

bool is_prime_u64(std::uint64_t n);

/// Runtime description of the scalar field: integers mod a prime p,
/// or the rationals.
struct FieldSpec {
    enum class Kind { prime, rational };

    Kind kind = Kind::rational;
    std::uint64_t p = 0; // meaningful only when kind == prime

    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals();

    bool operator==(const FieldSpec&) const = default;
    std::string name() const;
};

/// Arithmetic in F_p for a machine-word prime p. Elements are the
/// canonical representatives in [0, p).
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    FieldSpec spec() const { return FieldSpec::prime(p_); }

    Element zero() const { return 0; }
    Element one() const { return 1; }

    Element add(Element a, Element b) const {
        Element s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }

    /// Reduce an arbitrary signed integer into [0, p).
    Element from_int(long long v) const;
    /// Reduce num/den into the field; fails when den ≡ 0 (mod p).
    Element from_fraction(long long num, long long den) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

/// Arithmetic in ℚ via GMP rationals. No floating point anywhere.
class RationalField {
public:
    using Element = Rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const {
        if (sgn(a) == 0) throw InvalidInput("division by zero in rational field");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return a * inv(b); }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    Element from_int(long long v) const { return Rational(static_cast<long>(v)); }

    bool operator==(const RationalField&) const { return true; }
};

/// Canonical text form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string rational_to_string(const Rational& q);
/// Accepts "a" and "a/b"; canonicalizes. Throws InvalidInput on anything else.
Rational rational_from_string(const std::string& text);

template <class F>
concept FieldType = requires(const F f, typename F::Element a, typename F::Element b) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.add(a, b) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, b) } -> std::convertible_to<bool>;
    { f == f } -> std::convertible_to<bool>;
};

template <FieldType F>
using Vec = std::vector<typename F::Element>;

} // namespace sumref
