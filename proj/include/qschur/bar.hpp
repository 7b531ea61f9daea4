#pragma once

// Builders for the bar-type resolutions: B+ (over the positive Borel-Schur
// algebra), B (the induced resolution of the Weyl module), and the Schur
// functor image F(B) on the omega block. Also the Tor vanishing report.
//
// Degree-k basis labels: a dominance chain mu^(1) |> ... |> mu^(k) |> lambda
// together with a tuple (g, x_1, ..., x_k), where g runs over a basis of
// S xi_{mu^(1)} (restricted by the flavor) and x_t over the basis of
// xi_{mu^(t)} J xi_{mu^(t+1)} (with mu^(k+1) = lambda). The differential is
// d_k = sum_{t=0}^{k-1} (-1)^t d_{kt}: d_{k0} multiplies g x_1, d_{kt}
// multiplies x_t x_{t+1}; the d_{kk} term vanishes because J kills R_lambda.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/combin.hpp"
#include "qschur/complex.hpp"
#include "qschur/schur.hpp"

namespace qschur {

enum class BarFlavor { Plus, Full, Omega };

namespace detail {

// basis of (the flavor's algebra) xi_mu: pairs with j of content mu
inline std::vector<YPair> g_slot_basis(int n, int r, const Composition& mu, BarFlavor flavor) {
    std::vector<int> uparts(n, 0);
    for (int k = 0; k < r && k < n; ++k) uparts[k] = 1;
    const MultiIndex u = l_of(Composition(uparts));
    std::vector<YPair> out;
    for (const auto& p : y_pairs(n, r)) {
        if (!(p.j.content(n) == mu)) continue;
        if (flavor == BarFlavor::Plus && !leq(p.i, p.j)) continue;
        if (flavor == BarFlavor::Omega && !(p.i == u)) continue;
        out.push_back(p);
    }
    return out;
}

// basis of xi_mu J xi_nu: i < j entrywise, i of content mu, j of content nu
inline std::vector<YPair> j_block_basis(int n, const Composition& mu, const Composition& nu) {
    const int r = mu.degree();
    std::vector<YPair> out;
    for (const auto& p : y_pairs(n, r)) {
        if (!(p.i.content(n) == mu) || !(p.j.content(n) == nu)) continue;
        if (leq(p.i, p.j) && !(p.i == p.j)) out.push_back(p);
    }
    return out;
}

inline std::vector<BasisLabel> bar_degree_labels(int n, int r, const Composition& lam, int k,
                                                 BarFlavor flavor) {
    std::vector<BasisLabel> labels;
    for (const auto& ch : chains(lam, k)) {
        std::vector<Composition> mus = ch.compositions;
        mus.push_back(lam);
        std::vector<std::vector<YPair>> slots;
        slots.push_back(g_slot_basis(n, r, mus[0], flavor));
        for (int t = 0; t < k; ++t) slots.push_back(j_block_basis(n, mus[t], mus[t + 1]));
        // cartesian product, last slot varying fastest
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

inline ChainComplex build_bar(int n, int r, const Composition& lam, const RingSpec& ring,
                              BarFlavor flavor, const std::string& name) {
    if (lam.arity() != n || lam.degree() != r)
        throw std::invalid_argument("lambda is not in Lambda(n,r)");
    if (flavor == BarFlavor::Omega && n < r) throw std::invalid_argument("needs n >= r");
    const Ambient amb{n, r, ring};
    ChainComplex c(ring, name);
    std::vector<std::vector<BasisLabel>> degs;
    for (int k = 0;; ++k) {
        auto labels = bar_degree_labels(n, r, lam, k, flavor);
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
            for (int t = 0; t < k; ++t) {
                const YPair& left = std::get<YPair>(lab.tuple[t]);
                const YPair& right = std::get<YPair>(lab.tuple[t + 1]);
                const bool negate = (t % 2) == 1;
                for (const auto& [key, cval] : basis_mul(amb, left, right)) {
                    BasisLabel target;
                    target.chain = lab.chain;
                    target.chain.erase(target.chain.begin() + t);
                    target.tuple = lab.tuple;
                    target.tuple.erase(target.tuple.begin() + t);
                    target.tuple[t] = key;
                    auto it = dst_idx.find(target);
                    if (it == dst_idx.end())
                        throw std::logic_error("differential term leaves the labeled basis");
                    m.add(it->second, col, negate ? -cval : cval);
                }
            }
        }
        c.push_diff(std::move(m));
    }
    return c;
}

}  // namespace detail

// the projective resolution of R_lambda over S+
inline ChainComplex build_bar_plus(int n, int r, const Composition& lam, const RingSpec& ring) {
    return detail::build_bar(n, r, lam, ring, BarFlavor::Plus, "bar_plus");
}

// the induced resolution of the Weyl module W_lambda over S (W_lambda is
// represented as coker(d_1), never as a separate object)
inline ChainComplex build_weyl(int n, int r, const Composition& lam, const RingSpec& ring) {
    return detail::build_bar(n, r, lam, ring, BarFlavor::Full, "weyl");
}

// the omega-block complex F(B_lambda), built directly
inline ChainComplex build_schur_functor(int n, int r, const Composition& lam,
                                        const RingSpec& ring) {
    return detail::build_bar(n, r, lam, ring, BarFlavor::Omega, "schur_functor");
}

// restrict a complex from build_weyl to the omega block: keep the labels whose
// g slot has i = u, with differentials the corresponding submatrices
inline ChainComplex apply_F(const ChainComplex& c, int n, int r) {
    if (n < r) throw std::invalid_argument("needs n >= r");
    std::vector<int> uparts(n, 0);
    for (int k = 0; k < r; ++k) uparts[k] = 1;
    const MultiIndex u = l_of(Composition(uparts));
    ChainComplex out(c.ring(), "schur_functor");
    std::vector<std::vector<std::size_t>> kept(c.top_degree() + 1);
    for (int k = 0; k <= c.top_degree(); ++k) {
        std::vector<BasisLabel> labels;
        for (std::size_t i = 0; i < c.labels(k).size(); ++i) {
            const auto& lab = c.labels(k)[i];
            if (std::get<YPair>(lab.tuple.at(0)).i == u) {
                kept[k].push_back(i);
                labels.push_back(lab);
            }
        }
        out.push_degree(std::move(labels));
    }
    for (int k = 1; k <= static_cast<int>(c.num_diffs()); ++k) {
        const SparseMatrix& full = c.diff(k);
        std::map<std::size_t, std::size_t> row_of, col_of;
        for (std::size_t i = 0; i < kept[k - 1].size(); ++i) row_of.emplace(kept[k - 1][i], i);
        for (std::size_t i = 0; i < kept[k].size(); ++i) col_of.emplace(kept[k][i], i);
        SparseMatrix m(kept[k - 1].size(), kept[k].size());
        for (const auto& [rc, v] : full.entries()) {
            auto cit = col_of.find(rc.second);
            if (cit == col_of.end()) continue;
            auto rit = row_of.find(rc.first);
            if (rit == row_of.end())
                throw std::logic_error("omega block is not closed under the differential");
            m.add(rit->second, cit->second, v);
        }
        out.push_diff(std::move(m));
    }
    return out;
}

struct TorReport {
    Composition lam;
    RingSpec ring;
    bool dominant = false;
    std::vector<long long> tor;  // Tor_i for i >= 1
    bool vanishes = false;       // all Tor_i = 0, i >= 1
};

// Tor_i^{S+}(S, R_lambda) as the positive-degree homology of build_weyl
inline TorReport tor_report(int n, int r, const Composition& lam, const RingSpec& ring) {
    const ChainComplex c = build_weyl(n, r, lam, ring);
    const auto betti = homology_ranks(c);
    TorReport rep{lam, ring, lam.is_partition(), {}, true};
    for (std::size_t k = 1; k < betti.size(); ++k) {
        rep.tor.push_back(betti[k]);
        if (betti[k] != 0) rep.vanishes = false;
    }
    return rep;
}

}  // namespace qschur
