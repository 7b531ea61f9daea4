#pragma once

// Laurent polynomials over Z with arbitrary-precision integer coefficients.
// These are the elements of the universal coefficient ring Z[t, t^-1].

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qschur {

using BigInt = boost::multiprecision::cpp_int;

class LaurentInt {
public:
    // exponent -> nonzero coefficient; empty map is 0
    using TermMap = std::map<int, BigInt>;

    LaurentInt() = default;
    LaurentInt(long v) { if (v != 0) terms_[0] = v; }           // NOLINT(google-explicit-constructor)
    LaurentInt(const BigInt& v) { if (v != 0) terms_[0] = v; }  // NOLINT(google-explicit-constructor)

    static LaurentInt term(const BigInt& coeff, int exp) {
        LaurentInt x;
        if (coeff != 0) x.terms_[exp] = coeff;
        return x;
    }
    static LaurentInt t_power(int exp) { return term(1, exp); }
    static LaurentInt t() { return t_power(1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    // units of Z[t,t^-1] are +-t^k
    bool is_unit() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    BigInt coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    friend LaurentInt operator+(const LaurentInt& a, const LaurentInt& b) {
        LaurentInt r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentInt operator-(const LaurentInt& a, const LaurentInt& b) {
        LaurentInt r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend LaurentInt operator-(const LaurentInt& a) {
        LaurentInt r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
        LaurentInt r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentInt& operator+=(const LaurentInt& o) { return *this = *this + o; }
    LaurentInt& operator-=(const LaurentInt& o) { return *this = *this - o; }
    LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }

    friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }
    friend bool operator<(const LaurentInt& a, const LaurentInt& b) { return a.terms_ < b.terms_; }

    // Exact division; throws if the division does not come out exact.
    // Quotient computed from the lowest exponent upward.
    friend LaurentInt divide_exact(const LaurentInt& a, const LaurentInt& b) {
        if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
        LaurentInt rem = a, quot;
        const int ble = b.min_exp();
        const BigInt& blc = b.terms_.begin()->second;
        while (!rem.is_zero()) {
            const int re = rem.min_exp();
            const BigInt rc = rem.terms_.begin()->second;
            if (rc % blc != 0) throw std::domain_error("inexact Laurent division");
            const BigInt qc = rc / blc;
            const int qe = re - ble;
            quot.add_term(qe, qc);
            rem -= b * LaurentInt::term(qc, qe);
            if (!rem.is_zero() && rem.min_exp() <= re)
                throw std::domain_error("inexact Laurent division");
        }
        return quot;
    }

    // gcd of integer coefficients (positive; 0 for the zero polynomial)
    BigInt content() const {
        BigInt g = 0;
        for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, c < 0 ? BigInt(-c) : c);
        return g;
    }

    // size measure used for pivot selection: sum |coeff| * (1 + exponent span)
    BigInt size_measure() const {
        if (terms_.empty()) return 0;
        const BigInt span = max_exp() - min_exp();
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += (c < 0 ? BigInt(-c) : c) * (1 + span);
        return s;
    }

    std::string str() const;
    static LaurentInt parse(const std::string& s);

private:
    void add_term(int e, const BigInt& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    TermMap terms_;
};

// Text grammar, ascending exponents:
//   sum of terms separated by `+`/`-`; term := INT | INT `*t^` INT | `t^` INT | `t`
// e.g. "3*t^-1 - 2 + t^2". Parsing round-trips printing bit-exactly.
inline std::string LaurentInt::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

inline LaurentInt LaurentInt::parse(const std::string& s) {
    LaurentInt out;
    size_t p = 0;
    auto skip_ws = [&] { while (p < s.size() && s[p] == ' ') ++p; };
    auto parse_int = [&]() -> BigInt {
        size_t start = p;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
        size_t digits = 0;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) { ++p; ++digits; }
        if (digits == 0) throw std::invalid_argument("laurent parse: expected integer in '" + s + "'");
        return BigInt(s.substr(start, p - start));
    };
    skip_ws();
    if (p == s.size()) throw std::invalid_argument("laurent parse: empty input");
    bool first = true;
    while (p < s.size()) {
        int sign = 1;
        skip_ws();
        if (!first) {
            if (s[p] == '+') sign = 1;
            else if (s[p] == '-') sign = -1;
            else throw std::invalid_argument("laurent parse: expected +/- in '" + s + "'");
            ++p;
            skip_ws();
        } else if (s[p] == '-') {
            sign = -1;
            ++p;
            skip_ws();
        }
        BigInt coeff = 1;
        int exp = 0;
        if (p < s.size() && s[p] == 't') {
            ++p;
            exp = 1;
            if (p < s.size() && s[p] == '^') { ++p; exp = static_cast<int>(parse_int()); }
        } else {
            coeff = parse_int();
            skip_ws();
            if (p < s.size() && s[p] == '*') {
                ++p;
                skip_ws();
                if (p >= s.size() || s[p] != 't') throw std::invalid_argument("laurent parse: expected t after *");
                ++p;
                exp = 1;
                if (p < s.size() && s[p] == '^') { ++p; exp = static_cast<int>(parse_int()); }
            }
        }
        out.add_term(exp, sign * coeff);
        first = false;
        skip_ws();
    }
    return out;
}

}  // namespace qschur
