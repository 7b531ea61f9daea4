#pragma once

// The quantised Schur algebra S_{R,q}(n,r) on the xi_{ij} basis, with two
// independent multiplications (the Hecke model and the comultiplication
// pairing oracle), the Borel supports S+/S- and the L + J split, the
// anti-automorphism J, rank-one weight modules and the Schur functor data.

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qschur/combin.hpp"
#include "qschur/hecke.hpp"
#include "qschur/qpoly.hpp"
#include "qschur/rings.hpp"

namespace qschur {

struct Ambient {
    int n = 0;
    int r = 0;
    RingSpec ring;

    friend bool operator==(const Ambient& a, const Ambient& b) {
        return a.n == b.n && a.r == b.r && a.ring == b.ring;
    }
};

class SchurElem {
public:
    SchurElem(int n, int r, RingSpec ring) : amb_{n, r, std::move(ring)} {}
    explicit SchurElem(Ambient amb) : amb_(std::move(amb)) {}

    const Ambient& ambient() const { return amb_; }
    int n() const { return amb_.n; }
    int r() const { return amb_.r; }
    const RingSpec& ring() const { return amb_.ring; }
    const std::map<YPair, Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Scalar coeff(const YPair& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? amb_.ring.zero() : it->second;
    }
    void add(const YPair& p, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(p);
        if (it == coeffs_.end()) {
            coeffs_.emplace(p, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    static SchurElem basis(const Ambient& amb, const YPair& p) {
        SchurElem x(amb);
        x.add(p, amb.ring.one());
        return x;
    }
    // the weight idempotent xi_lambda = xi_{l(lambda), l(lambda)}
    static SchurElem xi_of(const Ambient& amb, const Composition& lam) {
        const MultiIndex l = l_of(lam);
        return basis(amb, YPair{l, l});
    }
    // the identity sum_lambda xi_lambda
    static SchurElem unit(const Ambient& amb) {
        SchurElem x(amb);
        for (const auto& lam : compositions(amb.n, amb.r)) {
            const MultiIndex l = l_of(lam);
            x.add(YPair{l, l}, amb.ring.one());
        }
        return x;
    }

    friend SchurElem operator+(const SchurElem& a, const SchurElem& b) {
        a.check(b);
        SchurElem out = a;
        for (const auto& [p, c] : b.coeffs_) out.add(p, c);
        return out;
    }
    friend SchurElem operator-(const SchurElem& a, const SchurElem& b) {
        a.check(b);
        SchurElem out = a;
        for (const auto& [p, c] : b.coeffs_) out.add(p, -c);
        return out;
    }
    friend SchurElem operator*(const Scalar& s, const SchurElem& a) {
        SchurElem out(a.amb_);
        for (const auto& [p, c] : a.coeffs_) out.add(p, s * c);
        return out;
    }
    friend bool operator==(const SchurElem& a, const SchurElem& b) {
        return a.amb_ == b.amb_ && a.coeffs_ == b.coeffs_;
    }

    void check(const SchurElem& o) const {
        if (!(amb_ == o.amb_)) throw std::invalid_argument("ambient mismatch");
    }

private:
    Ambient amb_;
    std::map<YPair, Scalar> coeffs_;
};

namespace detail {

struct YDecomp {
    Composition lam;  // content of i; i = l(lam)
    Composition mu;   // content of j
    Perm d;           // image under the (7.1) correspondence
};

struct YdTables {
    std::map<YPair, YDecomp> fwd;
    std::map<std::tuple<Composition, Composition, Perm>, YPair> bwd;
};

inline const YdTables& yd_tables(int n, int r) {
    static std::map<std::pair<int, int>, YdTables> cache;
    static std::mutex m;
    const std::pair<int, int> key{n, r};
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    YdTables t;
    for (const auto& p : y_pairs(n, r)) {
        const Composition lam = p.i.content(n);
        const Composition mu = p.j.content(n);
        const Perm d = y_to_dcoset(lam, p.j);
        t.fwd.emplace(p, YDecomp{lam, mu, d});
        t.bwd.emplace(std::make_tuple(lam, mu, d), p);
    }
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, std::move(t)).first->second;
}

// memoized product of two basis elements through the Hecke model
inline const std::map<YPair, Scalar>& basis_mul(const Ambient& amb, const YPair& a,
                                                const YPair& b) {
    using Key = std::tuple<int, int, RingSpec, YPair, YPair>;
    static std::map<Key, std::map<YPair, Scalar>> cache;
    static std::mutex m;
    const Key key{amb.n, amb.r, amb.ring, a, b};
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const auto& tables = yd_tables(amb.n, amb.r);
    const YDecomp& da = tables.fwd.at(a);
    const YDecomp& db = tables.fwd.at(b);
    std::map<YPair, Scalar> result;
    if (da.mu == db.lam) {
        const HomElem fa = phi_basis(da.lam, da.mu, da.d, amb.ring);
        const HomElem fb = phi_basis(db.lam, db.mu, db.d, amb.ring);
        const HomElem comp = phi_compose(fa, fb);
        for (const auto& [d, c] : comp.coords)
            result.emplace(tables.bwd.at(std::make_tuple(da.lam, db.mu, d)), c);
    }
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

// product through the Hecke model: xi_{l(lam),j} corresponds to phi^{lam,mu}_d
// under (7.1)/(8.1) and mul(a,b) = phi_a . phi_b; this agrees with mul_oracle
inline SchurElem mul(const SchurElem& a, const SchurElem& b) {
    a.check(b);
    SchurElem out(a.ambient());
    for (const auto& [ka, va] : a.coeffs())
        for (const auto& [kb, vb] : b.coeffs()) {
            const Scalar s = va * vb;
            for (const auto& [k, c] : detail::basis_mul(a.ambient(), ka, kb)) out.add(k, s * c);
        }
    return out;
}

// product via the comultiplication pairing at every target basis element;
// intended as the independent oracle for small n, r
inline SchurElem mul_oracle(const SchurElem& a, const SchurElem& b) {
    a.check(b);
    SchurElem out(a.ambient());
    const RingSpec& ring = a.ring();
    for (const auto& target : y_pairs(a.n(), a.r())) {
        Scalar total = ring.zero();
        for (const auto& [ka, va] : a.coeffs())
            for (const auto& [kb, vb] : b.coeffs()) {
                const LaurentInt c = pairing_product(ka, kb, target, a.n());
                if (!c.is_zero()) total += va * vb * ring.specialize(c);
            }
        out.add(target, total);
    }
    return out;
}

inline bool is_plus(const SchurElem& a) {
    for (const auto& [p, c] : a.coeffs())
        if (!leq(p.i, p.j)) return false;
    return true;
}
inline bool is_minus(const SchurElem& a) {
    for (const auto& [p, c] : a.coeffs())
        if (!leq(p.j, p.i)) return false;
    return true;
}
// the L part: diagonal pairs i = j = l(lambda)
inline SchurElem project_L(const SchurElem& a) {
    SchurElem out(a.ambient());
    for (const auto& [p, c] : a.coeffs())
        if (p.i == p.j) out.add(p, c);
    return out;
}
// the split ideal part: strictly ascending pairs i < j
inline SchurElem project_J(const SchurElem& a) {
    SchurElem out(a.ambient());
    for (const auto& [p, c] : a.coeffs())
        if (leq(p.i, p.j) && !(p.i == p.j)) out.add(p, c);
    return out;
}

// action on the rank-one module R_lambda: the coefficient at (l(lam), l(lam));
// the ideal J acts as zero
inline Scalar act_on_R(const SchurElem& a, const Composition& lam) {
    if (!is_plus(a) && !is_minus(a))
        throw std::invalid_argument("element is not supported in S+ or S-");
    const MultiIndex l = l_of(lam);
    return a.coeff(YPair{l, l});
}

// number of pairs a < b with i_a < i_b
inline int d_stat(const MultiIndex& i) {
    int count = 0;
    for (int a = 0; a < i.size(); ++a)
        for (int b = a + 1; b < i.size(); ++b)
            if (i[a] < i[b]) ++count;
    return count;
}

// the involutary anti-automorphism J: (J xi)(c_{ij}) = q^{d(j)-d(i)} xi(c_{ji})
inline SchurElem J_inv(const SchurElem& a) {
    SchurElem out(a.ambient());
    const RingSpec& ring = a.ring();
    for (const auto& target : y_pairs(a.n(), a.r())) {
        Scalar total = ring.zero();
        const Word reversed = Word::of(target.j, target.i);
        for (const auto& [p, c] : a.coeffs()) {
            const LaurentInt v = eval_dual(p, reversed);
            if (!v.is_zero()) total += c * ring.specialize(v);
        }
        if (!total.is_zero())
            out.add(target, total * ring.q_power(d_stat(target.j) - d_stat(target.i)));
    }
    return out;
}

// the algebra isomorphism xi_omega S xi_omega -> H, xi_{u,u pi} -> T_{pi^{-1}}
inline HeckeElem omega_block(const SchurElem& a) {
    if (a.n() < a.r()) throw std::invalid_argument("needs n >= r");
    const int r = a.r();
    const MultiIndex u = l_of(Composition([&] {
        std::vector<int> parts(a.n(), 0);
        for (int k = 0; k < r; ++k) parts[k] = 1;
        return parts;
    }()));
    HeckeElem out(r, a.ring());
    for (const auto& [p, c] : a.coeffs()) {
        if (!(p.i == u)) throw std::invalid_argument("element is not in the omega block");
        const Perm pi{std::vector<int>(p.j.entries())};
        out.add(pi.inverse(), c);
    }
    return out;
}

// the basis {xi_{u,j} : j in mu} of xi_omega S xi_mu, identified with
// Hom_H(M^mu, H) through (8.1)
inline std::vector<YPair> schur_functor_basis(int n, int r, const Composition& mu) {
    if (n < r) throw std::invalid_argument("needs n >= r");
    std::vector<int> uparts(n, 0);
    for (int k = 0; k < r; ++k) uparts[k] = 1;
    const MultiIndex u = l_of(Composition(uparts));
    std::vector<YPair> out;
    for (const auto& j : multi_indices(n, r))
        if (j.content(n) == mu) out.push_back(YPair{u, j});
    return out;
}

}  // namespace qschur
