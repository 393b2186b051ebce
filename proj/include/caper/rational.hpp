#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "caper/errors.hpp"

namespace caper {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "7", "-3", "5/2" (reduced, positive denominator).
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "3", "-12", "2.5", "-0.125", "7/4", "-7/4" exactly.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = (s[pos] == '-');
        ++pos;
    }
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (digits.empty()) throw ParseError("not a number: '" + s + "'");

    BigInt num(digits);
    BigInt den(1);
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::string frac;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac += s[pos++];
        if (frac.empty()) throw ParseError("trailing decimal point: '" + s + "'");
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) d += s[pos++];
        if (d.empty()) throw ParseError("missing denominator: '" + s + "'");
        den = BigInt(d);
        if (den == 0) throw ParseError("zero denominator: '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("trailing characters in number: '" + s + "'");
    Rational r = Rational(num) / Rational(den);
    return neg ? Rational(-r) : r;
}

/// An element of R with the two infinities adjoined.  Used for births,
/// filtration levels, window endpoints, deaths, and persistence values.
class Extended {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    Extended() : kind_(Kind::Finite), value_(0) {}
    Extended(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT: implicit by design
    Extended(int v) : kind_(Kind::Finite), value_(v) {}                  // NOLINT

    static Extended pos_inf() { return Extended(Kind::PosInf); }
    static Extended neg_inf() { return Extended(Kind::NegInf); }

    bool finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    /// Finite value; valid only when finite().
    const Rational& value() const { return value_; }

    friend bool operator==(const Extended& a, const Extended& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend bool operator!=(const Extended& a, const Extended& b) { return !(a == b); }
    friend bool operator<(const Extended& a, const Extended& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.kind_ == Kind::Finite && a.value_ < b.value_;
    }
    friend bool operator<=(const Extended& a, const Extended& b) { return a < b || a == b; }
    friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
    friend bool operator>=(const Extended& a, const Extended& b) { return b <= a; }

    /// a - b, with inf - finite = inf and finite - (-inf) = +inf.
    /// Throws BadParameter for inf - inf of the same sign.
    friend Extended operator-(const Extended& a, const Extended& b) {
        if (a.finite() && b.finite()) return Extended(Rational(a.value_ - b.value_));
        if (a.kind_ == b.kind_) throw BadParameter("inf - inf is undefined");
        if (a.is_pos_inf() || b.is_neg_inf()) return pos_inf();
        return neg_inf();
    }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "inf";
            default: return to_string(value_);
        }
    }

    /// Accepts "inf", "+inf", "-inf", or any finite form parse_rational takes.
    static Extended parse(const std::string& s) {
        if (s == "inf" || s == "+inf") return pos_inf();
        if (s == "-inf") return neg_inf();
        return Extended(parse_rational(s));
    }

private:
    explicit Extended(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    Rational value_;
};

/// Largest integer strictly less than x; the bracket [x] used to integerize
/// persistence values.  [2.5] = 2, [3] = 2, [-0.5] = -1.
inline BigInt strict_bracket(const Extended& x) {
    if (!x.finite()) throw Unbounded();
    const BigInt& num = numerator(x.value());
    const BigInt& den = denominator(x.value());
    if (den == 1) return num - 1;
    BigInt q = num / den;  // truncates toward zero
    if (num < 0) q -= 1;   // floor for non-integers
    return q;
}

}  // namespace caper
