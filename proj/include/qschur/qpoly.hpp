#pragma once

// The quantum polynomial algebra A(n,r) over Z[t,t^-1]: straightening of
// monomial words in the coordinate generators c_{ij} into the Y(n,r) basis,
// the dual-basis evaluation, the comultiplication pairing that serves as the
// structure-constant oracle for the Schur algebra, and the A^+/A^- quotient
// membership tests.
//
// Defining relations used for rewriting (rows i < j, any columns):
//   (R1) c_{ir} c_{is} = c_{is} c_{ir}
//   (R2) c_{jr} c_{is} = q c_{is} c_{jr}              for r <= s
//   (R3) c_{js} c_{ir} = c_{ir} c_{js} + (q-1) c_{is} c_{jr}   for r < s

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qschur/combin.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

// a monomial word c_{i1 j1} ... c_{ir jr}; any factor sequence is admissible
struct Word {
    std::vector<std::pair<int, int>> factors;  // (row, col), 1-based

    static Word of(const MultiIndex& i, const MultiIndex& j) {
        if (i.size() != j.size()) throw std::invalid_argument("length mismatch");
        Word w;
        w.factors.reserve(i.size());
        for (int a = 0; a < i.size(); ++a) w.factors.emplace_back(i[a], j[a]);
        return w;
    }

    friend bool operator<(const Word& a, const Word& b) { return a.factors < b.factors; }
    friend bool operator==(const Word&, const Word&) = default;
};

// finitely supported expansion in the Y(n,r) monomial basis
using PolyElem = std::map<YPair, LaurentInt>;

namespace detail {

inline void poly_add(PolyElem& acc, const YPair& key, const LaurentInt& c) {
    auto it = acc.find(key);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

inline void poly_accumulate(PolyElem& acc, const PolyElem& other, const LaurentInt& scale) {
    for (const auto& [k, v] : other) poly_add(acc, k, v * scale);
}

}  // namespace detail

// unique expansion of the product of w's factors in the Y(n,r) basis.
// Rewrites the leftmost adjacent row inversion first; terminates because both
// branch words have strictly fewer row inversions, then columns are sorted
// within row blocks by (R1).
inline const PolyElem& normal_form(const Word& w) {
    static std::map<Word, PolyElem> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
    }
    const auto& f = w.factors;
    const int r = static_cast<int>(f.size());
    PolyElem result;
    bool rewritten = false;
    for (int p = 0; p + 1 < r && !rewritten; ++p) {
        const auto [a, b] = f[p];
        const auto [c, d] = f[p + 1];
        if (a <= c) continue;
        rewritten = true;
        Word swapped = w;
        std::swap(swapped.factors[p], swapped.factors[p + 1]);
        if (b <= d) {
            // (R2)
            detail::poly_accumulate(result, normal_form(swapped), LaurentInt::t());
        } else {
            // (R3)
            Word cross = w;
            cross.factors[p] = {c, b};
            cross.factors[p + 1] = {a, d};
            detail::poly_accumulate(result, normal_form(swapped), LaurentInt(1));
            detail::poly_accumulate(result, normal_form(cross),
                                    LaurentInt::t() - LaurentInt(1));
        }
    }
    if (!rewritten) {
        // rows weakly increasing; sort columns within equal-row blocks
        std::vector<int> iv(r), jv(r);
        for (int p = 0; p < r; ++p) iv[p] = f[p].first;
        int p = 0;
        while (p < r) {
            int q = p;
            while (q < r && f[q].first == f[p].first) ++q;
            std::vector<int> cols;
            for (int k = p; k < q; ++k) cols.push_back(f[k].second);
            std::sort(cols.begin(), cols.end());
            for (int k = p; k < q; ++k) jv[k] = cols[k - p];
            p = q;
        }
        result.emplace(YPair{MultiIndex(iv), MultiIndex(jv)}, LaurentInt(1));
    }
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(w, std::move(result)).first->second;
}

// coefficient of the basis monomial c_p in normal_form(w)
inline LaurentInt eval_dual(const YPair& p, const Word& w) {
    if (static_cast<int>(w.factors.size()) != p.i.size())
        throw std::invalid_argument("length mismatch");
    const auto& nf = normal_form(w);
    auto it = nf.find(p);
    return it == nf.end() ? LaurentInt{} : it->second;
}

// the comultiplication pairing: coefficient of xi_target in xi_a * xi_b,
// (xi_a xi_b)(c_{i,j}) = sum over h in I(n,r) of xi_a(c_{i,h}) xi_b(c_{h,j})
inline LaurentInt pairing_product(const YPair& a, const YPair& b, const YPair& target, int n) {
    LaurentInt total;
    for (const auto& h : multi_indices(n, target.i.size())) {
        const LaurentInt x = eval_dual(a, Word::of(target.i, h));
        if (x.is_zero()) continue;
        const LaurentInt y = eval_dual(b, Word::of(h, target.j));
        if (y.is_zero()) continue;
        total += x * y;
    }
    return total;
}

// monomial survives in the quotient A^+ (kernel spanned by c_{ij}, not i <= j)
inline bool in_plus_quotient(const YPair& p) { return leq(p.i, p.j); }
// monomial survives in the quotient A^- = A-bar (i >= j entrywise)
inline bool in_minus_quotient(const YPair& p) { return leq(p.j, p.i); }

}  // namespace qschur
