#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace parknap {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Kept canonical at all times: the denominator is
/// positive and coprime to the numerator, so equality is structural and
/// comparisons never need an extra reduction pass.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}   // NOLINT(google-explicit-constructor)
    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    /// Largest integer <= *this. (cpp_int division truncates toward zero,
    /// so negative values need the usual adjustment.)
    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }
    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) ++q;
        return q;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Serialized as "num/den", with "/den" omitted for integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Accepts "a", "a/b" and exact decimals like "-1.25" (converted to -5/4).
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("Rational: empty string");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            BigInt n = parse_int(text.substr(0, slash));
            BigInt d = parse_int(text.substr(slash + 1));
            return Rational(std::move(n), std::move(d));
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(parse_int(text));
        std::string head = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("Rational: bad decimal '" + text + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head == "+" || head.empty()) head += "0";
        BigInt whole = parse_int(head);
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt n = whole.sign() < 0 || neg ? whole * scale - BigInt(frac) : whole * scale + BigInt(frac);
        return Rational(std::move(n), std::move(scale));
    }

    /// Approximate value for display only; never used in decisions.
    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ == 1) return;
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static BigInt parse_int(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty integer");
        size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
            throw std::invalid_argument("Rational: bad integer '" + s + "'");
        return s[0] == '+' ? BigInt(s.substr(1)) : BigInt(s);
    }

    BigInt num_;
    BigInt den_;
};

/// A rational extended with the two infinities. NegInf < every finite value < PosInf.
class ExtRational {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtRational() : kind_(Kind::Finite) {}
    ExtRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
    static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
    static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    const Rational& value() const {
        if (!is_finite()) throw std::logic_error("ExtRational: infinite value");
        return value_;
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.value_ < b.value_;
        if (a.kind_ == Kind::NegInf) return true;
        if (b.kind_ == Kind::PosInf) return true;
        return false;
    }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "+inf";
            default: return value_.str();
        }
    }

    static ExtRational parse(const std::string& s) {
        if (s == "-inf") return neg_inf();
        if (s == "+inf" || s == "inf") return pos_inf();
        return ExtRational(Rational::parse(s));
    }

private:
    explicit ExtRational(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_;
};

}  // namespace parknap
