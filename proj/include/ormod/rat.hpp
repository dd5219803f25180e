#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "ormod/error.hpp"

namespace ormod {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always in lowest terms with a positive
/// denominator; the canonical zero is 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}
    Rat(long v) : num_(v), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(BigInt v) : num_(std::move(v)), den_(1) {}
    Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) fail(Errc::InvalidArgument, "rational with zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) fail(Errc::InvalidArgument, "division by zero rational");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat inverse() const {
        if (num_ == 0) fail(Errc::InvalidArgument, "inverse of zero rational");
        return Rat(den_, num_);
    }

    /// Exact integer power; negative exponents invert (nonzero base required).
    Rat pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        Rat result(1);
        Rat base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Renders "p" for integers, "p/q" otherwise, in lowest terms.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "p" or "p/q" with an optional leading sign.
    static Rat parse(std::string_view text);

private:
    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rat Rat::parse(std::string_view text) {
    if (text.empty()) fail(Errc::SyntaxError, "empty rational");
    std::string s(text);
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) fail(Errc::SyntaxError, "zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::SyntaxError, "malformed rational '" + s + "'");
    }
}

}  // namespace ormod
