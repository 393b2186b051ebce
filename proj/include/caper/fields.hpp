#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "caper/errors.hpp"
#include "caper/rational.hpp"

namespace caper {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) -> std::uint64_t {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Runtime description of a coefficient field: F_q for a prime q, or Q.
struct FieldSpec {
    enum class Kind : std::uint8_t { Prime, Rational };
    Kind kind = Kind::Prime;
    std::uint64_t q = 2;

    static FieldSpec prime(std::uint64_t q) {
        if (!is_prime_u64(q)) throw BadParameter("field order " + std::to_string(q) + " is not prime");
        return FieldSpec{Kind::Prime, q};
    }
    static FieldSpec rational() { return FieldSpec{Kind::Rational, 0}; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && (a.kind != Kind::Prime || a.q == b.q);
    }

    std::string str() const { return kind == Kind::Prime ? "F_" + std::to_string(q) : "Q"; }
};

/// Prime field F_q with elements stored as canonical residues 0..q-1.
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t q) : q_(q) {
        if (!is_prime_u64(q)) throw BadParameter("field order " + std::to_string(q) + " is not prime");
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::Prime, q_}; }
    std::uint64_t order() const { return q_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % q_; }
    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }

    Element add(Element a, Element b) const {
        Element s = a + b;  // q < 2^63, no overflow
        return s >= q_ ? s - q_ : s;
    }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % q_);
    }
    Element inv(Element a) const {
        if (a == 0) throw DivisionByZero();
        // extended Euclid on (a, q)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(q_), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t quot = r / new_r;
            t = std::exchange(new_t, t - quot * new_t);
            r = std::exchange(new_r, r - quot * new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(q_);
        return static_cast<Element>(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element from_integer(const BigInt& n) const {
        BigInt m = n % BigInt(q_);
        if (m < 0) m += q_;
        return m.convert_to<Element>();
    }
    Element from_rational(const Rational& r) const {
        Element den = from_integer(denominator(r));
        if (den == 0) throw DivisionByZero();
        return mul(from_integer(numerator(r)), inv(den));
    }
    /// Any exact rational string maps into F_q when its denominator is a unit.
    Element parse(const std::string& s) const { return from_rational(parse_rational(s)); }
    std::string to_string(Element a) const { return std::to_string(a); }

private:
    std::uint64_t q_;
};

/// The field of rationals with arbitrary-precision arithmetic.
class RationalField {
public:
    using Element = Rational;

    FieldSpec spec() const { return FieldSpec::rational(); }

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const {
        if (a == 0) throw DivisionByZero();
        return Rational(1) / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    Element from_integer(const BigInt& n) const { return Rational(n); }
    Element from_rational(const Rational& r) const { return r; }
    Element parse(const std::string& s) const { return parse_rational(s); }
    std::string to_string(const Element& a) const { return caper::to_string(a); }
};

template <class F>
concept Field = requires(const F f, const typename F::Element& a, const typename F::Element& b,
                         const std::string& s) {
    typename F::Element;
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, b) } -> std::convertible_to<bool>;
    { f.add(a, b) } -> std::same_as<typename F::Element>;
    { f.sub(a, b) } -> std::same_as<typename F::Element>;
    { f.mul(a, b) } -> std::same_as<typename F::Element>;
    { f.neg(a) } -> std::same_as<typename F::Element>;
    { f.inv(a) } -> std::same_as<typename F::Element>;
    { f.parse(s) } -> std::same_as<typename F::Element>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.spec() } -> std::same_as<FieldSpec>;
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

/// Runs fn with the concrete field named by spec.  The callable must accept
/// both PrimeField and RationalField; return types must agree.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::Prime) return std::forward<Fn>(fn)(PrimeField(spec.q));
    return std::forward<Fn>(fn)(RationalField());
}

}  // namespace caper
