#pragma once

// Coefficient rings: the generic ring Z[t,t^-1], the rationals with t
// specialised to q, and prime fields with t specialised to a unit q mod p.
// All arithmetic is exact.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "qschur/laurent.hpp"

namespace qschur {

using Rational = boost::multiprecision::cpp_rational;

// residue mod a prime, value normalised to [0, p)
struct FpElem {
    std::int64_t value = 0;
    std::int64_t p = 0;

    friend bool operator==(const FpElem&, const FpElem&) = default;
    friend auto operator<=>(const FpElem&, const FpElem&) = default;
};

inline std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = mod_norm(a, p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return mod_norm(t, p);
}

enum class RingKind { Generic, Rationals, PrimeField };

class Scalar;

// Selector for the coefficient ring. Generic means Z[t,t^-1] with ranks taken
// over Q(t); the other variants evaluate t at a unit q.
class RingSpec {
public:
    static RingSpec generic() { return RingSpec{}; }
    static RingSpec rationals_at(const Rational& q) {
        if (q == 0) throw std::invalid_argument("q must be nonzero");
        RingSpec r;
        r.kind_ = RingKind::Rationals;
        r.q_ = q;
        return r;
    }
    static RingSpec prime_field_at(std::int64_t p, std::int64_t q) {
        if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("p must be prime");
        if (mod_norm(q, p) == 0) throw std::invalid_argument("q must be a unit mod p");
        RingSpec r;
        r.kind_ = RingKind::PrimeField;
        r.p_ = p;
        r.qmod_ = mod_norm(q, p);
        return r;
    }

    RingKind kind() const { return kind_; }
    bool is_generic() const { return kind_ == RingKind::Generic; }
    const Rational& q_rational() const { return q_; }
    std::int64_t prime() const { return p_; }
    std::int64_t q_mod_p() const { return qmod_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar q() const;            // the image of t
    Scalar q_power(int k) const; // q^k, k may be negative (q is a unit)
    Scalar from_int(long v) const;
    Scalar specialize(const LaurentInt& x) const;  // evaluate at t = q

    // selector grammar: `generic` | `Q:<rational>` | `F<p>:<q>`
    static RingSpec parse(const std::string& s);
    std::string str() const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_ && a.p_ == b.p_ && a.qmod_ == b.qmod_;
    }
    friend bool operator<(const RingSpec& a, const RingSpec& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        if (a.q_ != b.q_) return a.q_ < b.q_;
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.qmod_ < b.qmod_;
    }

private:
    RingKind kind_ = RingKind::Generic;
    Rational q_ = 0;
    std::int64_t p_ = 0;
    std::int64_t qmod_ = 0;
};

// A value in the ring named by an ambient RingSpec.
class Scalar {
public:
    Scalar() : v_(LaurentInt{}) {}
    explicit Scalar(LaurentInt x) : v_(std::move(x)) {}
    explicit Scalar(Rational x) : v_(std::move(x)) {}
    explicit Scalar(FpElem x) : v_(x) {}

    RingKind kind() const { return static_cast<RingKind>(v_.index()); }
    bool is_zero() const {
        return std::visit([](const auto& x) { return scalar_is_zero(x); }, v_);
    }

    const LaurentInt& laurent() const { return std::get<LaurentInt>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const FpElem& fp() const { return std::get<FpElem>(v_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return binop(a, b, [](const auto& x, const auto& y) { return scalar_add(x, y); });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return binop(a, b, [](const auto& x, const auto& y) { return scalar_sub(x, y); });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return binop(a, b, [](const auto& x, const auto& y) { return scalar_mul(x, y); });
    }
    friend Scalar operator-(const Scalar& a) {
        Scalar r = a;
        std::visit([](auto& x) { scalar_negate(x); }, r.v_);
        return r;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar&, const Scalar&) = default;
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    std::string str() const {
        if (kind() == RingKind::Generic) return laurent().str();
        if (kind() == RingKind::Rationals) return rational().str();
        return std::to_string(fp().value);
    }

private:
    template <class F>
    static Scalar binop(const Scalar& a, const Scalar& b, F f) {
        if (a.v_.index() != b.v_.index())
            throw std::invalid_argument("scalar ring mismatch");
        switch (a.kind()) {
            case RingKind::Generic: return Scalar(f(a.laurent(), b.laurent()));
            case RingKind::Rationals: return Scalar(f(a.rational(), b.rational()));
            default: return Scalar(f(a.fp(), b.fp()));
        }
    }
    static bool scalar_is_zero(const LaurentInt& x) { return x.is_zero(); }
    static bool scalar_is_zero(const Rational& x) { return x == 0; }
    static bool scalar_is_zero(const FpElem& x) { return x.value == 0; }
    static LaurentInt scalar_add(const LaurentInt& x, const LaurentInt& y) { return x + y; }
    static Rational scalar_add(const Rational& x, const Rational& y) { return x + y; }
    static FpElem scalar_add(const FpElem& x, const FpElem& y) {
        check_p(x, y);
        return {mod_norm(x.value + y.value, x.p), x.p};
    }
    static LaurentInt scalar_sub(const LaurentInt& x, const LaurentInt& y) { return x - y; }
    static Rational scalar_sub(const Rational& x, const Rational& y) { return x - y; }
    static FpElem scalar_sub(const FpElem& x, const FpElem& y) {
        check_p(x, y);
        return {mod_norm(x.value - y.value, x.p), x.p};
    }
    static LaurentInt scalar_mul(const LaurentInt& x, const LaurentInt& y) { return x * y; }
    static Rational scalar_mul(const Rational& x, const Rational& y) { return x * y; }
    static FpElem scalar_mul(const FpElem& x, const FpElem& y) {
        check_p(x, y);
        return {mod_norm(x.value * y.value, x.p), x.p};
    }
    static void scalar_negate(LaurentInt& x) { x = -x; }
    static void scalar_negate(Rational& x) { x = -x; }
    static void scalar_negate(FpElem& x) { x.value = mod_norm(-x.value, x.p); }
    static void check_p(const FpElem& x, const FpElem& y) {
        if (x.p != y.p) throw std::invalid_argument("prime field mismatch");
    }

    std::variant<LaurentInt, Rational, FpElem> v_;
};

inline Scalar RingSpec::zero() const {
    switch (kind_) {
        case RingKind::Generic: return Scalar(LaurentInt{});
        case RingKind::Rationals: return Scalar(Rational(0));
        default: return Scalar(FpElem{0, p_});
    }
}

inline Scalar RingSpec::one() const { return from_int(1); }

inline Scalar RingSpec::from_int(long v) const {
    switch (kind_) {
        case RingKind::Generic: return Scalar(LaurentInt(v));
        case RingKind::Rationals: return Scalar(Rational(v));
        default: return Scalar(FpElem{mod_norm(v, p_), p_});
    }
}

inline Scalar RingSpec::q() const { return q_power(1); }

inline Scalar RingSpec::q_power(int k) const {
    switch (kind_) {
        case RingKind::Generic:
            return Scalar(LaurentInt::t_power(k));
        case RingKind::Rationals: {
            Rational r = 1;
            for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= q_;
            if (k < 0) r = 1 / r;
            return Scalar(r);
        }
        default: {
            std::int64_t base = k < 0 ? mod_inverse(qmod_, p_) : qmod_;
            std::int64_t r = 1;
            for (int i = 0; i < (k < 0 ? -k : k); ++i) r = mod_norm(r * base, p_);
            return Scalar(FpElem{r, p_});
        }
    }
}

inline Scalar RingSpec::specialize(const LaurentInt& x) const {
    if (kind_ == RingKind::Generic) return Scalar(x);
    Scalar acc = zero();
    for (const auto& [e, c] : x.terms()) {
        Scalar coeff = kind_ == RingKind::Rationals
                           ? Scalar(Rational(c))
                           : Scalar(FpElem{mod_norm(static_cast<std::int64_t>(c % p_), p_), p_});
        acc += coeff * q_power(e);
    }
    return acc;
}

inline RingSpec RingSpec::parse(const std::string& s) {
    if (s == "generic") return generic();
    if (s.rfind("Q:", 0) == 0) {
        const std::string body = s.substr(2);
        if (body.empty()) throw std::invalid_argument("ring selector: missing rational after Q:");
        return rationals_at(Rational(body));
    }
    if (!s.empty() && s[0] == 'F') {
        auto colon = s.find(':');
        if (colon == std::string::npos || colon < 2)
            throw std::invalid_argument("ring selector: expected F<p>:<q>");
        const std::int64_t p = std::stoll(s.substr(1, colon - 1));
        const std::int64_t q = std::stoll(s.substr(colon + 1));
        return prime_field_at(p, q);
    }
    throw std::invalid_argument("unknown ring selector: " + s);
}

inline std::string RingSpec::str() const {
    switch (kind_) {
        case RingKind::Generic: return "generic";
        case RingKind::Rationals: return "Q:" + q_.str();
        default: return "F" + std::to_string(p_) + ":" + std::to_string(qmod_);
    }
}

}  // namespace qschur
