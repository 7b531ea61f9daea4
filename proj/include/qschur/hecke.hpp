#pragma once

// The Hecke algebra H_{R,q} of Sigma_r in the T basis, permutation modules
// M^lambda = x_lambda H, the hom bases phi^{lambda,mu}_d, the bilinear form f
// and the isomorphism frak_F between Hom_H(M, H) and Hom_R(M, R).

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qschur/combin.hpp"
#include "qschur/rings.hpp"

namespace qschur {

class MembershipError : public std::runtime_error {
public:
    explicit MembershipError(const std::string& what) : std::runtime_error(what) {}
};

class HeckeElem {
public:
    HeckeElem(int r, RingSpec ring) : r_(r), ring_(std::move(ring)) {}

    int r() const { return r_; }
    const RingSpec& ring() const { return ring_; }
    const std::map<Perm, Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Scalar coeff(const Perm& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? ring_.zero() : it->second;
    }
    void add(const Perm& p, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(p);
        if (it == coeffs_.end()) {
            coeffs_.emplace(p, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    static HeckeElem basis(int r, const RingSpec& ring, const Perm& p) {
        HeckeElem h(r, ring);
        h.add(p, ring.one());
        return h;
    }
    static HeckeElem unit(int r, const RingSpec& ring) {
        return basis(r, ring, Perm::identity(r));
    }

    friend HeckeElem operator+(const HeckeElem& a, const HeckeElem& b) {
        a.check(b);
        HeckeElem out = a;
        for (const auto& [p, c] : b.coeffs_) out.add(p, c);
        return out;
    }
    friend HeckeElem operator-(const HeckeElem& a, const HeckeElem& b) {
        a.check(b);
        HeckeElem out = a;
        for (const auto& [p, c] : b.coeffs_) out.add(p, -c);
        return out;
    }
    friend HeckeElem operator*(const Scalar& s, const HeckeElem& a) {
        HeckeElem out(a.r_, a.ring_);
        for (const auto& [p, c] : a.coeffs_) out.add(p, s * c);
        return out;
    }
    friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
        return a.r_ == b.r_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

    void check(const HeckeElem& o) const {
        if (r_ != o.r_ || !(ring_ == o.ring_)) throw std::invalid_argument("ambient mismatch");
    }

private:
    int r_;
    RingSpec ring_;
    std::map<Perm, Scalar> coeffs_;
};

namespace detail {

// T_{s_a} * x, by the generator rule
inline HeckeElem ts_mul(int a, const HeckeElem& x) {
    const int r = x.r();
    const RingSpec& ring = x.ring();
    const Perm sa = Perm::simple(a, r);
    HeckeElem out(r, ring);
    for (const auto& [sig, c] : x.coeffs()) {
        const Perm ssig = sa * sig;
        if (ssig.lng() == sig.lng() + 1) {
            out.add(ssig, c);
        } else {
            out.add(ssig, ring.q() * c);
            out.add(sig, (ring.q() - ring.one()) * c);
        }
    }
    return out;
}

// memoized T_sigma * T_pi
inline const std::map<Perm, Scalar>& t_basis_mul(const RingSpec& ring, const Perm& sigma,
                                                 const Perm& pi) {
    using Key = std::tuple<RingSpec, Perm, Perm>;
    static std::map<Key, std::map<Perm, Scalar>> cache;
    static std::mutex m;
    const Key key{ring, sigma, pi};
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int r = sigma.degree();
    HeckeElem acc = HeckeElem::basis(r, ring, pi);
    const auto word = SymmetricGroup::reduced_word(sigma);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = ts_mul(*it, acc);
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, acc.coeffs()).first->second;
}

}  // namespace detail

inline HeckeElem t_mul(const HeckeElem& a, const HeckeElem& b) {
    a.check(b);
    HeckeElem out(a.r(), a.ring());
    for (const auto& [s, c] : a.coeffs())
        for (const auto& [p, d] : b.coeffs()) {
            const Scalar cd = c * d;
            for (const auto& [k, v] : detail::t_basis_mul(a.ring(), s, p)) out.add(k, cd * v);
        }
    return out;
}

// the anti-automorphism T_pi -> T_{pi^{-1}}
inline HeckeElem star(const HeckeElem& a) {
    HeckeElem out(a.r(), a.ring());
    for (const auto& [p, c] : a.coeffs()) out.add(p.inverse(), c);
    return out;
}

// f(a, b) = sum over sigma of a_sigma b_{sigma^{-1}} q^{lng sigma}
inline Scalar form_f(const HeckeElem& a, const HeckeElem& b) {
    a.check(b);
    Scalar total = a.ring().zero();
    for (const auto& [s, c] : a.coeffs()) {
        const Scalar d = b.coeff(s.inverse());
        if (d.is_zero()) continue;
        total += c * d * a.ring().q_power(s.lng());
    }
    return total;
}

// x_lambda = sum of T_pi over the Young subgroup
inline HeckeElem x_of(const Composition& lam, const RingSpec& ring) {
    HeckeElem out(lam.degree(), ring);
    for (const auto& p : SymmetricGroup::young_subgroup(lam)) out.add(p, ring.one());
    return out;
}

// element of M^mu in the basis {x_mu T_d : d in D_mu}
struct PermModElem {
    Composition shape;
    RingSpec ring;
    std::map<Perm, Scalar> coords;  // keys in D_shape

    static PermModElem unit(const Composition& mu, const RingSpec& ring) {
        PermModElem v{mu, ring, {}};
        v.coords.emplace(Perm::identity(mu.degree()), ring.one());
        return v;
    }
};

// read h in x_lam H off in the {x_lam T_d} basis; requires the coefficient
// function to be constant on every coset Sigma_lam d
inline PermModElem expand_in_M(const HeckeElem& h, const Composition& lam) {
    if (lam.degree() != h.r()) throw std::invalid_argument("degree mismatch");
    const auto& sub = SymmetricGroup::young_subgroup(lam);
    PermModElem out{lam, h.ring(), {}};
    for (const auto& d : SymmetricGroup::dist_reps(lam)) {
        const Scalar v0 = h.coeff(sub.front() * d);
        for (const auto& pi : sub)
            if (!(h.coeff(pi * d) == v0))
                throw MembershipError("element is not in x_lambda H");
        if (!v0.is_zero()) out.coords.emplace(d, v0);
    }
    return out;
}

// hom between permutation modules in the phi^{lambda,mu}_d basis
struct HomElem {
    Composition target;  // lambda
    Composition source;  // mu
    RingSpec ring;
    std::map<Perm, Scalar> coords;  // keys in D_{lambda,mu}
};

// phi^{lambda,mu}_d as a basis HomElem
inline HomElem phi_basis(const Composition& lam, const Composition& mu, const Perm& d,
                         const RingSpec& ring) {
    const auto& reps = SymmetricGroup::double_reps(lam, mu);
    if (std::find(reps.begin(), reps.end(), d) == reps.end())
        throw std::invalid_argument("d is not in D_{lambda,mu}");
    HomElem f{lam, mu, ring, {}};
    f.coords.emplace(d, ring.one());
    return f;
}

// the image of x_mu under phi^{lambda,mu}_d: the sum of T_pi over the double coset
inline HeckeElem phi_image_of_x(const Composition& lam, const Composition& mu, const Perm& d,
                                const RingSpec& ring) {
    HeckeElem out(lam.degree(), ring);
    std::map<Perm, bool> seen;
    for (const auto& a : SymmetricGroup::young_subgroup(lam))
        for (const auto& b : SymmetricGroup::young_subgroup(mu)) {
            Perm p = a * d * b;
            if (seen.emplace(p, true).second) out.add(p, ring.one());
        }
    return out;
}

// apply f to v; computed inside H and projected back to M^lambda
inline PermModElem phi_apply(const HomElem& f, const PermModElem& v) {
    if (!(f.source == v.shape)) throw std::invalid_argument("shape mismatch");
    const int r = f.target.degree();
    HeckeElem acc(r, f.ring);
    for (const auto& [d, c] : f.coords) {
        const HeckeElem base = phi_image_of_x(f.target, f.source, d, f.ring);
        for (const auto& [dp, vc] : v.coords) {
            const Scalar cv = c * vc;
            for (const auto& [s, bc] : base.coeffs())
                for (const auto& [k, w] : detail::t_basis_mul(f.ring, s, dp))
                    acc.add(k, cv * bc * w);
        }
    }
    return expand_in_M(acc, f.target);
}

// read an element of x_lam H, given in M^lambda coordinates, as a hom
// M^nu -> M^lambda; the value must be constant on each double coset
inline HomElem hom_from_coords(const Composition& lam, const Composition& nu,
                               const PermModElem& v) {
    HomElem out{lam, nu, v.ring, {}};
    std::map<Perm, Scalar> by_rep;
    for (const auto& d : SymmetricGroup::double_reps(lam, nu)) by_rep.emplace(d, v.ring.zero());
    for (const auto& d : SymmetricGroup::dist_reps(lam)) {
        const Perm rep = SymmetricGroup::double_coset_rep(lam, nu, d);
        const Scalar val = [&] {
            auto it = v.coords.find(d);
            return it == v.coords.end() ? v.ring.zero() : it->second;
        }();
        // first member of each double coset in D_lam is the representative itself
        if (d == rep) {
            by_rep[rep] = val;
        } else if (!(by_rep.at(rep) == val)) {
            throw MembershipError("coefficients not constant on double cosets");
        }
    }
    for (const auto& [d, c] : by_rep)
        if (!c.is_zero()) out.coords.emplace(d, c);
    return out;
}

// composition of homs: (f . g)(x_nu) = f(g(x_nu))
inline HomElem phi_compose(const HomElem& f, const HomElem& g) {
    if (!(f.source == g.target)) throw std::invalid_argument("shapes do not chain");
    const PermModElem gx = phi_apply(g, PermModElem::unit(g.source, g.ring));
    const PermModElem fgx = phi_apply(f, gx);
    return hom_from_coords(f.target, g.source, fgx);
}

// linear functional on M^mu in the basis dual to {x_mu T_d}
struct LinFunc {
    Composition source;  // mu
    RingSpec ring;
    std::map<Perm, Scalar> coords;  // keys in D_mu

    Scalar apply(const PermModElem& v) const {
        if (!(v.shape == source)) throw std::invalid_argument("shape mismatch");
        Scalar total = ring.zero();
        for (const auto& [d, c] : coords) {
            auto it = v.coords.find(d);
            if (it != v.coords.end()) total += c * it->second;
        }
        return total;
    }
};

// the left H action on Hom_R(M^mu, R): (h phi)(m) = phi(m h)
inline LinFunc linfunc_act(const HeckeElem& h, const LinFunc& phi) {
    LinFunc out{phi.source, phi.ring, {}};
    for (const auto& d : SymmetricGroup::dist_reps(phi.source)) {
        // m = x_mu T_d; m h
        HeckeElem mh(h.r(), h.ring());
        const HeckeElem xd = t_mul(x_of(phi.source, h.ring()),
                                   HeckeElem::basis(h.r(), h.ring(), d));
        for (const auto& [s, c] : xd.coeffs())
            for (const auto& [p, c2] : h.coeffs())
                for (const auto& [k, v] : detail::t_basis_mul(h.ring(), s, p))
                    mh.add(k, c * c2 * v);
        const Scalar val = phi.apply(expand_in_M(mh, phi.source));
        if (!val.is_zero()) out.coords.emplace(d, val);
    }
    return out;
}

inline bool is_omega(const Composition& c) {
    for (int a = 0; a < c.arity(); ++a)
        if (c[a] > 1) return false;
    return true;
}

// frak_F(psi)(m) = coefficient of T_id in psi(m), for psi : M^mu -> M^omega = H
inline LinFunc frak_F(const HomElem& psi) {
    if (!is_omega(psi.target)) throw std::invalid_argument("target must be omega");
    const int r = psi.source.degree();
    LinFunc out{psi.source, psi.ring, {}};
    for (const auto& d : SymmetricGroup::dist_reps(psi.source)) {
        PermModElem m{psi.source, psi.ring, {}};
        m.coords.emplace(d, psi.ring.one());
        const PermModElem img = phi_apply(psi, m);  // coords over D_omega = Sigma_r
        auto it = img.coords.find(Perm::identity(r));
        if (it != img.coords.end()) out.coords.emplace(d, it->second);
    }
    return out;
}

// hat(phi)(m) = sum over sigma of q^{-lng sigma} phi(m T*_sigma) T_sigma,
// the inverse of frak_F
inline HomElem hat(const LinFunc& phi, const Composition& omega) {
    if (!is_omega(omega)) throw std::invalid_argument("omega must be (1,...,1,0,...)");
    const int r = phi.source.degree();
    if (omega.degree() != r) throw std::invalid_argument("degree mismatch");
    const RingSpec& ring = phi.ring;
    // the image of x_mu determines the hom
    HeckeElem img(r, ring);
    const HeckeElem xmu = x_of(phi.source, ring);
    for (const auto& sigma : SymmetricGroup::elements(r)) {
        // x_mu T*_sigma = x_mu T_{sigma^{-1}}
        HeckeElem ms(r, ring);
        for (const auto& [s, c] : xmu.coeffs())
            for (const auto& [k, v] : detail::t_basis_mul(ring, s, sigma.inverse()))
                ms.add(k, c * v);
        const Scalar val = phi.apply(expand_in_M(ms, phi.source));
        if (!val.is_zero()) img.add(sigma, ring.q_power(-sigma.lng()) * val);
    }
    return hom_from_coords(omega, phi.source, expand_in_M(img, omega));
}

}  // namespace qschur
