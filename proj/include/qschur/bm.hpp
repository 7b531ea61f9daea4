#pragma once

// The Boltje-Maisch complex C~ of a partition, built from dual permutation
// modules and the ascending hom spaces Hom^, and the chain isomorphism tau
// from the Schur functor image F(B_lambda) given degreewise by frak_F on the
// first tensor slot.

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/bar.hpp"
#include "qschur/combin.hpp"
#include "qschur/complex.hpp"
#include "qschur/hecke.hpp"
#include "qschur/schur.hpp"

namespace qschur {

namespace detail {

// D^wedge_{lam,mu}: images under (7.1) of the ascending pairs
// (l(lam), j), j in mu, l(lam) <= j; ordered like j_block_basis plus the
// possible diagonal pair (the wedge condition is <=, not <)
inline std::vector<Perm> d_wedge(int n, const Composition& lam, const Composition& mu) {
    const int r = lam.degree();
    const MultiIndex llam = l_of(lam);
    std::vector<Perm> out;
    for (const auto& j : multi_indices(n, r)) {
        if (!(j.content(n) == mu) || !is_y_pair(llam, j) || !leq(llam, j)) continue;
        out.push_back(y_to_dcoset(lam, j));
    }
    return out;
}

// matrix of phi^{lam,mu}_d on the permutation module bases:
// value at (row d' in D_lam, col d in D_mu) is [phi(x_mu T_d)]_{x_lam T_d'}
inline const std::map<std::pair<Perm, Perm>, Scalar>& hom_matrix(const RingSpec& ring,
                                                                 const Composition& lam,
                                                                 const Composition& mu,
                                                                 const Perm& d) {
    using Key = std::tuple<RingSpec, Composition, Composition, Perm>;
    static std::map<Key, std::map<std::pair<Perm, Perm>, Scalar>> cache;
    static std::mutex m;
    const Key key{ring, lam, mu, d};
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const HomElem f = phi_basis(lam, mu, d, ring);
    std::map<std::pair<Perm, Perm>, Scalar> mat;
    for (const auto& dcol : SymmetricGroup::dist_reps(mu)) {
        PermModElem v{mu, ring, {}};
        v.coords.emplace(dcol, ring.one());
        for (const auto& [drow, c] : phi_apply(f, v).coords) mat.emplace(std::make_pair(drow, dcol), c);
    }
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, std::move(mat)).first->second;
}

// memoized composition of basis homs, phi^{lam,mu}_{d1} . phi^{mu,nu}_{d2}
inline const std::map<Perm, Scalar>& hom_compose(const RingSpec& ring, const Composition& lam,
                                                 const Composition& mu, const Composition& nu,
                                                 const Perm& d1, const Perm& d2) {
    using Key = std::tuple<RingSpec, Composition, Composition, Composition, Perm, Perm>;
    static std::map<Key, std::map<Perm, Scalar>> cache;
    static std::mutex m;
    const Key key{ring, lam, mu, nu, d1, d2};
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const HomElem comp = phi_compose(phi_basis(lam, mu, d1, ring), phi_basis(mu, nu, d2, ring));
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, comp.coords).first->second;
}

inline std::vector<BasisLabel> bm_degree_labels(int n, int r, const Composition& lam, int k) {
    std::vector<BasisLabel> labels;
    for (const auto& ch : chains(lam, k)) {
        std::vector<Composition> mus = ch.compositions;
        mus.push_back(lam);
        std::vector<std::vector<Perm>> slots;
        slots.push_back(SymmetricGroup::dist_reps(mus[0]));
        for (int t = 0; t < k; ++t) slots.push_back(d_wedge(n, mus[t], mus[t + 1]));
        std::vector<std::size_t> idx(slots.size(), 0);
        bool any = true;
        for (const auto& s : slots)
            if (s.empty()) any = false;
        while (any) {
            BasisLabel lab;
            lab.chain = ch.compositions;
            for (std::size_t s = 0; s < slots.size(); ++s) lab.tuple.emplace_back(slots[s][idx[s]]);
            labels.push_back(std::move(lab));
            int pos = static_cast<int>(slots.size()) - 1;
            while (pos >= 0 && ++idx[pos] == slots[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return labels;
}

}  // namespace detail

// the Boltje-Maisch complex in degrees >= 0; degree -1 and the restriction
// map d_0 are not constructed (exactness at 0 is certified against syt_count)
inline ChainComplex build_bm(int n, int r, const Composition& lam, const RingSpec& ring) {
    if (!lam.is_partition()) throw std::invalid_argument("lambda must be a partition");
    if (lam.arity() != n || lam.degree() != r)
        throw std::invalid_argument("lambda is not in Lambda(n,r)");
    ChainComplex c(ring, "boltje_maisch");
    std::vector<std::vector<BasisLabel>> degs;
    for (int k = 0;; ++k) {
        auto labels = detail::bm_degree_labels(n, r, lam, k);
        if (labels.empty()) break;
        degs.push_back(std::move(labels));
    }
    for (const auto& d : degs) c.push_degree(d);
    for (int k = 1; k < static_cast<int>(degs.size()); ++k) {
        const auto& src = degs[k];
        const auto& dst = degs[k - 1];
        std::map<BasisLabel, std::size_t> dst_idx;
        for (std::size_t i = 0; i < dst.size(); ++i) dst_idx.emplace(dst[i], i);
        SparseMatrix m(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            const BasisLabel& lab = src[col];
            std::vector<Composition> mus = lab.chain;
            mus.push_back(lam);
            // d_{k0}: pair the dual vector with phi_1
            const Perm& d_eps = std::get<Perm>(lab.tuple[0]);
            const Perm& d1 = std::get<Perm>(lab.tuple[1]);
            const auto& mat = detail::hom_matrix(ring, mus[0], mus[1], d1);
            for (const auto& d : SymmetricGroup::dist_reps(mus[1])) {
                auto it = mat.find({d_eps, d});
                if (it == mat.end() || it->second.is_zero()) continue;
                BasisLabel target;
                target.chain.assign(lab.chain.begin() + 1, lab.chain.end());
                target.tuple.push_back(d);
                target.tuple.insert(target.tuple.end(), lab.tuple.begin() + 2, lab.tuple.end());
                m.add(dst_idx.at(target), col, it->second);
            }
            // d_{kt}: compose slots t and t+1
            for (int t = 1; t < k; ++t) {
                const Perm& da = std::get<Perm>(lab.tuple[t]);
                const Perm& db = std::get<Perm>(lab.tuple[t + 1]);
                const bool negate = (t % 2) == 1;
                for (const auto& [d, cval] :
                     detail::hom_compose(ring, mus[t - 1], mus[t], mus[t + 1], da, db)) {
                    BasisLabel target;
                    target.chain = lab.chain;
                    target.chain.erase(target.chain.begin() + t);
                    target.tuple = lab.tuple;
                    target.tuple.erase(target.tuple.begin() + t);
                    target.tuple[t] = d;
                    auto it = dst_idx.find(target);
                    if (it == dst_idx.end())
                        throw std::logic_error("composition leaves the ascending hom basis");
                    m.add(it->second, col, negate ? -cval : cval);
                }
            }
        }
        c.push_diff(std::move(m));
    }
    return c;
}

// the matrix of frak_F on xi_omega S xi_mu: rows indexed by D_mu (dual basis),
// columns by the basis {xi_{u,j} : j in mu} in the g-slot order
inline SparseMatrix frakF_matrix(int n, int r, const Composition& mu, const RingSpec& ring) {
    const auto& dreps = SymmetricGroup::dist_reps(mu);
    std::map<Perm, std::size_t> row_of;
    for (std::size_t i = 0; i < dreps.size(); ++i) row_of.emplace(dreps[i], i);
    const auto cols = detail::g_slot_basis(n, r, mu, BarFlavor::Omega);
    SparseMatrix m(dreps.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Composition lam_g = cols[c].i.content(n);  // omega
        const Perm dg = y_to_dcoset(lam_g, cols[c].j);
        const HomElem psi = phi_basis(lam_g, mu, dg, ring);
        const LinFunc f = frak_F(psi);
        for (const auto& [d, v] : f.coords) m.add(row_of.at(d), c, v);
    }
    return m;
}

// tau_k: F(B_lambda)_k -> C~_k, the direct sum of frak_F on the first slot and
// the (7.1) relabeling on the J slots
inline ChainMap tau_iso(int n, int r, const Composition& lam, const ChainComplex& fb,
                        const ChainComplex& bm) {
    if (!(fb.ring() == bm.ring())) throw std::invalid_argument("ring mismatch");
    const RingSpec& ring = fb.ring();
    if (fb.top_degree() != bm.top_degree()) throw std::invalid_argument("length mismatch");
    const auto& tables = detail::yd_tables(n, r);
    // frak_F matrices per head composition, with row index D_mu and column index j
    std::map<Composition, SparseMatrix> fmat;
    std::map<Composition, std::map<MultiIndex, std::size_t>> fcol;
    std::map<Composition, std::vector<Perm>> frows;
    ChainMap tau;
    for (int k = 0; k <= fb.top_degree(); ++k) {
        const auto& src = fb.labels(k);
        const auto& dst = bm.labels(k);
        if (src.size() != dst.size()) throw std::invalid_argument("degree dimension mismatch");
        std::map<BasisLabel, std::size_t> dst_idx;
        for (std::size_t i = 0; i < dst.size(); ++i) dst_idx.emplace(dst[i], i);
        SparseMatrix m(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            const BasisLabel& lab = src[col];
            const Composition mu1 = lab.chain.empty() ? lam : lab.chain.front();
            if (!fmat.count(mu1)) {
                fmat.emplace(mu1, frakF_matrix(n, r, mu1, ring));
                const auto cols = detail::g_slot_basis(n, r, mu1, BarFlavor::Omega);
                for (std::size_t i = 0; i < cols.size(); ++i) fcol[mu1].emplace(cols[i].j, i);
                frows.emplace(mu1, SymmetricGroup::dist_reps(mu1));
            }
            const YPair& g = std::get<YPair>(lab.tuple[0]);
            std::vector<SlotLabel> rest;
            for (std::size_t t = 1; t < lab.tuple.size(); ++t)
                rest.emplace_back(tables.fwd.at(std::get<YPair>(lab.tuple[t])).d);
            const SparseMatrix& F = fmat.at(mu1);
            const std::size_t fc = fcol.at(mu1).at(g.j);
            for (const auto& [rc, v] : F.entries()) {
                if (rc.second != fc) continue;
                BasisLabel target;
                target.chain = lab.chain;
                target.tuple.push_back(frows.at(mu1)[rc.first]);
                target.tuple.insert(target.tuple.end(), rest.begin(), rest.end());
                m.add(dst_idx.at(target), col, v);
            }
        }
        tau.mats.push_back(std::move(m));
    }
    return tau;
}

struct TauReport {
    bool squares_commute = false;
    bool degreewise_square = false;
    bool invertible = false;  // every tau_k invertible over the ring
    bool pass = false;
};

inline TauReport verify_tau(int n, int r, const Composition& lam, const ChainComplex& fb,
                            const ChainComplex& bm, const ChainMap& tau) {
    TauReport rep;
    rep.squares_commute = tau.commutes(fb, bm);
    rep.degreewise_square = true;
    for (std::size_t k = 0; k < tau.mats.size(); ++k)
        if (tau.mats[k].rows() != tau.mats[k].cols()) rep.degreewise_square = false;
    // tau_k is a permuted block sum of frak_F matrices of the chain heads, so
    // it is invertible over the ring iff each of those blocks is
    rep.invertible = true;
    std::map<Composition, bool> checked;
    for (int k = 0; k <= fb.top_degree(); ++k)
        for (const auto& lab : fb.labels(k)) {
            const Composition mu1 = lab.chain.empty() ? lam : lab.chain.front();
            if (checked.count(mu1)) continue;
            checked.emplace(mu1, true);
            if (!has_unit_determinant(frakF_matrix(n, r, mu1, fb.ring()), fb.ring()))
                rep.invertible = false;
        }
    rep.pass = rep.squares_commute && rep.degreewise_square && rep.invertible;
    return rep;
}

}  // namespace qschur
