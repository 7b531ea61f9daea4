#pragma once

// Index combinatorics: compositions and the dominance order, multi-indices,
// the Y(n,r) basis index set, symmetric group and coset machinery,
// tableaux, dominance chains, Omega^+ sets and the b(lambda) bound.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qschur {

// ---------------------------------------------------------------------------
// compositions

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("negative part");
    }

    const std::vector<int>& parts() const { return parts_; }
    int arity() const { return static_cast<int>(parts_.size()); }
    int operator[](int a) const { return parts_[a]; }
    int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const {
        return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p != 0; }));
    }
    bool is_partition() const {
        return std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>());
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

    std::string str() const {
        std::string s = "(";
        for (int a = 0; a < arity(); ++a) s += (a ? "," : "") + std::to_string(parts_[a]);
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

// all of Lambda(n,r) in reverse lexicographic order, e.g. (2,0),(1,1),(0,2)
inline std::vector<Composition> compositions(int n, int r) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<Composition> out;
    std::vector<int> cur(n);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.emplace_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, r);
    return out;
}

// mu >= lam in the dominance order (prefix sums), equal arity and degree
inline bool dominates(const Composition& mu, const Composition& lam) {
    if (mu.arity() != lam.arity()) throw std::invalid_argument("arity mismatch");
    if (mu.degree() != lam.degree()) throw std::invalid_argument("degree mismatch");
    int s1 = 0, s2 = 0;
    for (int a = 0; a < mu.arity(); ++a) {
        s1 += mu[a];
        s2 += lam[a];
        if (s1 < s2) return false;
    }
    return true;
}

inline bool strictly_dominates(const Composition& mu, const Composition& lam) {
    return !(mu == lam) && dominates(mu, lam);
}

// ---------------------------------------------------------------------------
// multi-indices

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int a) const { return entries_[a]; }

    Composition content(int n) const {
        std::vector<int> c(n, 0);
        for (int v : entries_) {
            if (v < 1 || v > n) throw std::invalid_argument("entry out of range");
            ++c[v - 1];
        }
        return Composition(c);
    }
    bool weakly_increasing() const { return std::is_sorted(entries_.begin(), entries_.end()); }

    // entrywise i <= j
    friend bool leq(const MultiIndex& a, const MultiIndex& b) {
        if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
        for (int k = 0; k < a.size(); ++k)
            if (a[k] > b[k]) return false;
        return true;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.entries_ < b.entries_; }

    std::string str() const {
        std::string s = "(";
        for (int a = 0; a < size(); ++a) s += (a ? "," : "") + std::to_string(entries_[a]);
        return s + ")";
    }

private:
    std::vector<int> entries_;
};

// l(lambda) = (1^{lam_1}, 2^{lam_2}, ..., n^{lam_n})
inline MultiIndex l_of(const Composition& lam) {
    std::vector<int> e;
    e.reserve(lam.degree());
    for (int a = 0; a < lam.arity(); ++a)
        for (int k = 0; k < lam[a]; ++k) e.push_back(a + 1);
    return MultiIndex(std::move(e));
}

// all of I(n,r) in lexicographic order
inline std::vector<MultiIndex> multi_indices(int n, int r) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(r, 1);
    while (true) {
        out.emplace_back(cur);
        int pos = r - 1;
        while (pos >= 0 && cur[pos] == n) cur[pos--] = 1;
        if (pos < 0) break;
        ++cur[pos];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Y(n,r)

struct YPair {
    MultiIndex i, j;

    friend bool operator==(const YPair&, const YPair&) = default;
    friend bool operator<(const YPair& a, const YPair& b) {
        if (a.i == b.i) return a.j < b.j;
        return a.i < b.i;
    }
    std::string str() const { return "(" + i.str() + "," + j.str() + ")"; }
};

inline bool is_y_pair(const MultiIndex& i, const MultiIndex& j) {
    if (i.size() != j.size()) return false;
    for (int a = 0; a + 1 < i.size(); ++a) {
        if (i[a] > i[a + 1]) return false;
        if (i[a] == i[a + 1] && j[a] > j[a + 1]) return false;
    }
    return true;
}

// all of Y(n,r); i runs lexicographically, then j
inline std::vector<YPair> y_pairs(int n, int r) {
    std::vector<YPair> out;
    for (const auto& i : multi_indices(n, r)) {
        if (!i.weakly_increasing()) continue;
        for (const auto& j : multi_indices(n, r))
            if (is_y_pair(i, j)) out.push_back({i, j});
    }
    return out;
}

// ---------------------------------------------------------------------------
// permutations; product is composition, (pi*tau)(a) = pi(tau(a)),
// and multi-indices compose on the right: (i pi)_a = i_{pi(a)}

class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
                throw std::invalid_argument("not a permutation");
            seen[v - 1] = true;
        }
    }
    static Perm identity(int r) {
        std::vector<int> img(r);
        std::iota(img.begin(), img.end(), 1);
        return Perm(std::move(img));
    }
    // adjacent transposition (a, a+1), 1-based
    static Perm simple(int a, int r) {
        Perm p = identity(r);
        std::swap(p.img_[a - 1], p.img_[a]);
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int a) const { return img_[a - 1]; }
    const std::vector<int>& images() const { return img_; }

    int lng() const {
        int inv = 0;
        for (int a = 0; a < degree(); ++a)
            for (int b = a + 1; b < degree(); ++b)
                if (img_[a] > img_[b]) ++inv;
        return inv;
    }

    friend Perm operator*(const Perm& p, const Perm& t) {
        if (p.degree() != t.degree()) throw std::invalid_argument("degree mismatch");
        std::vector<int> img(p.degree());
        for (int a = 1; a <= p.degree(); ++a) img[a - 1] = p(t(a));
        return Perm(std::move(img));
    }
    Perm inverse() const {
        std::vector<int> img(degree());
        for (int a = 1; a <= degree(); ++a) img[img_[a - 1] - 1] = a;
        return Perm(std::move(img));
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    std::string str() const {
        std::string s = "[";
        for (int a = 0; a < degree(); ++a) s += (a ? " " : "") + std::to_string(img_[a]);
        return s + "]";
    }

private:
    std::vector<int> img_;
};

inline MultiIndex apply(const MultiIndex& i, const Perm& p) {
    if (i.size() != p.degree()) throw std::invalid_argument("size mismatch");
    std::vector<int> e(i.size());
    for (int a = 1; a <= i.size(); ++a) e[a - 1] = i[p(a) - 1];
    return MultiIndex(std::move(e));
}

// length-then-lex order on one-line notation
inline bool length_lex_less(const Perm& a, const Perm& b) {
    const int la = a.lng(), lb = b.lng();
    if (la != lb) return la < lb;
    return a.images() < b.images();
}

// ---------------------------------------------------------------------------
// symmetric group cache: elements, Young subgroups, coset representatives

class SymmetricGroup {
public:
    // elements of Sigma_r in length-then-lex order
    static const std::vector<Perm>& elements(int r);
    // the Young subgroup Sigma_lam (block permutations)
    static const std::vector<Perm>& young_subgroup(const Composition& lam);
    // D_lam: minimal-length representatives of right cosets Sigma_lam \ Sigma_r
    static const std::vector<Perm>& dist_reps(const Composition& lam);
    // D_{lam,mu} = D_lam cap D_mu^{-1}: minimal-length double coset representatives
    static const std::vector<Perm>& double_reps(const Composition& lam, const Composition& mu);
    // the representative in D_{lam,mu} of Sigma_lam * p * Sigma_mu
    static Perm double_coset_rep(const Composition& lam, const Composition& mu, const Perm& p);
    // a reduced word for p: p = s_{w[0]} * s_{w[1]} * ... (values are 1-based)
    static std::vector<int> reduced_word(const Perm& p);

private:
    static std::mutex& mutex() {
        static std::mutex m;
        return m;
    }
};

inline const std::vector<Perm>& SymmetricGroup::elements(int r) {
    static std::map<int, std::vector<Perm>> cache;
    std::lock_guard<std::mutex> lock(mutex());
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    std::vector<int> img(r);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    std::stable_sort(out.begin(), out.end(), length_lex_less);
    return cache.emplace(r, std::move(out)).first->second;
}

inline const std::vector<Perm>& SymmetricGroup::young_subgroup(const Composition& lam) {
    static std::map<Composition, std::vector<Perm>> cache;
    std::lock_guard<std::mutex> lock(mutex());
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
    const int r = lam.degree();
    // block-wise permutations, built as products over blocks
    std::vector<Perm> out = {Perm::identity(r)};
    int pos = 0;
    for (int a = 0; a < lam.arity(); ++a) {
        const int len = lam[a];
        if (len > 1) {
            std::vector<int> block(len);
            std::iota(block.begin(), block.end(), pos + 1);
            std::vector<Perm> next;
            std::vector<int> b = block;
            do {
                for (const auto& base : out) {
                    std::vector<int> img = base.images();
                    for (int k = 0; k < len; ++k) img[block[k] - 1] = b[k];
                    next.emplace_back(std::move(img));
                }
            } while (std::next_permutation(b.begin(), b.end()));
            out = std::move(next);
        }
        pos += len;
    }
    std::sort(out.begin(), out.end());
    return cache.emplace(lam, std::move(out)).first->second;
}

inline const std::vector<Perm>& SymmetricGroup::dist_reps(const Composition& lam) {
    static std::map<Composition, std::vector<Perm>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex());
        auto it = cache.find(lam);
        if (it != cache.end()) return it->second;
    }
    const int r = lam.degree();
    const auto& sub = young_subgroup(lam);
    const auto& all = elements(r);
    std::vector<Perm> reps;
    std::map<Perm, bool> seen;
    for (const auto& s : all) {  // length-then-lex: first hit per coset is distinguished
        if (seen.count(s)) continue;
        reps.push_back(s);
        for (const auto& pi : sub) seen.emplace(pi * s, true);
    }
    std::lock_guard<std::mutex> lock(mutex());
    return cache.emplace(lam, std::move(reps)).first->second;
}

inline const std::vector<Perm>& SymmetricGroup::double_reps(const Composition& lam,
                                                            const Composition& mu) {
    static std::map<std::pair<Composition, Composition>, std::vector<Perm>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex());
        auto it = cache.find({lam, mu});
        if (it != cache.end()) return it->second;
    }
    if (lam.degree() != mu.degree()) throw std::invalid_argument("degree mismatch");
    const int r = lam.degree();
    const auto& sl = young_subgroup(lam);
    const auto& sm = young_subgroup(mu);
    const auto& all = elements(r);
    std::vector<Perm> reps;
    std::map<Perm, bool> seen;
    for (const auto& s : all) {
        if (seen.count(s)) continue;
        reps.push_back(s);
        for (const auto& a : sl)
            for (const auto& b : sm) seen.emplace(a * s * b, true);
    }
    std::lock_guard<std::mutex> lock(mutex());
    return cache.emplace(std::make_pair(lam, mu), std::move(reps)).first->second;
}

inline Perm SymmetricGroup::double_coset_rep(const Composition& lam, const Composition& mu,
                                             const Perm& p) {
    const auto& sl = young_subgroup(lam);
    const auto& sm = young_subgroup(mu);
    Perm best = p;
    bool have = false;
    for (const auto& a : sl)
        for (const auto& b : sm) {
            Perm cand = a * p * b;
            if (!have || length_lex_less(cand, best)) {
                best = cand;
                have = true;
            }
        }
    return best;
}

inline std::vector<int> SymmetricGroup::reduced_word(const Perm& p) {
    // peel simple reflections off the left; word is in product order,
    // p = s_{w[0]} * s_{w[1]} * ...
    const int r = p.degree();
    std::vector<int> word;
    Perm s = p;
    while (!(s == Perm::identity(r))) {
        const Perm si = s.inverse();
        for (int a = 1; a < r; ++a) {
            if (si(a) > si(a + 1)) {
                word.push_back(a);
                s = Perm::simple(a, r) * s;
                break;
            }
        }
    }
    return word;
}

// ---------------------------------------------------------------------------
// the (7.1) correspondence {(l(lam), j) in Y : j in mu} -> D_{lam,mu}

inline Perm y_to_dcoset(const Composition& lam, const MultiIndex& j) {
    const int r = lam.degree();
    if (j.size() != r) throw std::invalid_argument("size mismatch");
    const MultiIndex llam = l_of(lam);
    if (!is_y_pair(llam, j)) throw std::invalid_argument("(l(lam), j) not in Y(n,r)");
    const int n = lam.arity();
    const Composition mu = j.content(n);
    const MultiIndex lmu = l_of(mu);
    // minimal-length pi with l(mu) pi^{-1} = j; solutions form a left coset of Sigma_mu
    const auto& all = SymmetricGroup::elements(r);
    for (const auto& pi : all) {  // length-then-lex, so first hit is distinguished
        if (apply(lmu, pi.inverse()) == j)
            return SymmetricGroup::double_coset_rep(lam, mu, pi);
    }
    throw std::logic_error("no solution for l(mu) pi^{-1} = j");
}

// inverse of (7.1): the j of content mu with y_to_dcoset(lam, j) = d
inline MultiIndex dcoset_to_y(const Composition& lam, const Composition& mu, const Perm& d) {
    const MultiIndex llam = l_of(lam);
    for (const auto& j : multi_indices(lam.arity(), lam.degree())) {
        if (!(j.content(lam.arity()) == mu) || !is_y_pair(llam, j)) continue;
        if (y_to_dcoset(lam, j) == d) return j;
    }
    throw std::invalid_argument("d is not in D_{lam,mu}");
}

// ---------------------------------------------------------------------------
// tableaux

class Tableau {
public:
    Tableau(const Composition& shape, const MultiIndex& j) : shape_(shape) {
        if (j.size() != shape.degree()) throw std::invalid_argument("size mismatch");
        int pos = 0;
        for (int a = 0; a < shape.arity(); ++a) {
            std::vector<int> row;
            for (int k = 0; k < shape[a]; ++k) row.push_back(j[pos++]);
            rows_.push_back(std::move(row));
        }
    }

    const Composition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool is_row_semistandard() const {
        for (const auto& row : rows_)
            if (!std::is_sorted(row.begin(), row.end())) return false;
        return true;
    }
    // row a contains only entries >= a (1-based)
    bool is_ascending() const {
        for (int a = 0; a < static_cast<int>(rows_.size()); ++a)
            for (int v : rows_[a])
                if (v < a + 1) return false;
        return true;
    }

private:
    Composition shape_;
    std::vector<std::vector<int>> rows_;
};

inline Tableau tableau_of(const Composition& lam, const MultiIndex& j) { return Tableau(lam, j); }

// ---------------------------------------------------------------------------
// dominance chains and Omega^+

struct DominanceChain {
    std::vector<Composition> compositions;  // mu^(1) |> ... |> mu^(k), all |> lam
};

// all strict dominance chains of length k above lam within Lambda(n, deg lam)
inline std::vector<DominanceChain> chains(const Composition& lam, int k) {
    const int n = lam.arity(), r = lam.degree();
    const auto all = compositions(n, r);
    std::vector<DominanceChain> out;
    std::vector<Composition> cur(k);
    auto rec = [&](auto&& self, int pos, const Composition& below) -> void {
        if (pos < 0) {
            out.push_back({cur});
            return;
        }
        for (const auto& mu : all) {
            if (strictly_dominates(mu, below)) {
                cur[pos] = mu;
                self(self, pos - 1, mu);
            }
        }
    };
    if (k == 0) return {DominanceChain{}};
    rec(rec, k - 1, lam);
    return out;
}

// Omega^+_k(lam, mu): sequences ((i1,j1),...,(ik,jk)) of Y pairs with
// i1 in mu, jk in lam, i(t) < j(t) entrywise, content j(t) = content i(t+1)
inline std::vector<std::vector<YPair>> omega_plus(const Composition& lam, const Composition& mu,
                                                  int k) {
    const int n = lam.arity(), r = lam.degree();
    std::vector<YPair> ascending;
    for (const auto& p : y_pairs(n, r))
        if (leq(p.i, p.j) && !(p.i == p.j)) ascending.push_back(p);
    std::vector<std::vector<YPair>> out;
    std::vector<YPair> cur(k);
    auto rec = [&](auto&& self, int t, const Composition& want_i) -> void {
        if (t == k) {
            if (cur[k - 1].j.content(n) == lam) out.push_back(cur);
            return;
        }
        for (const auto& p : ascending) {
            if (!(p.i.content(n) == want_i)) continue;
            cur[t] = p;
            self(self, t + 1, p.j.content(n));
        }
    };
    if (k == 0) return {};
    rec(rec, 0, mu);
    return out;
}

// ---------------------------------------------------------------------------
// the b(lambda) bound of the vanishing theorem

inline int b_of(const Composition& lam) {
    static std::map<Composition, int> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(lam);
        if (it != cache.end()) return it->second;
    }
    const int n = lam.arity();
    int result = -1;
    if (lam.is_partition()) {
        result = 0;
    } else {
        for (int a = 0; a + 1 < n && result != 0; ++a)
            if (lam[a] - lam[a + 1] == -1) result = 0;
    }
    if (result != 0) {
        // b(lam) = min over j with lam_j - lam_{j+1} <= -2 of
        //          max over 0 < t < m_j of b(lam + t(e_j - e_{j+1})) + 1
        int best = -1;
        for (int a = 0; a + 1 < n; ++a) {
            const int m_j = lam[a + 1] - lam[a];
            if (m_j < 2) continue;
            int worst = 0;
            for (int t = 1; t < m_j; ++t) {
                std::vector<int> parts = lam.parts();
                parts[a] += t;
                parts[a + 1] -= t;
                worst = std::max(worst, b_of(Composition(parts)));
            }
            const int cand = worst + 1;
            if (best < 0 || cand < best) best = cand;
        }
        if (best < 0) throw std::logic_error("b recursion: no descent found");
        result = best;
    }
    std::lock_guard<std::mutex> lock(m);
    cache.emplace(lam, result);
    return result;
}

// ---------------------------------------------------------------------------
// tableau counting oracles (brute force)

inline std::int64_t ssyt_count(const Composition& lam, int n) {
    if (!lam.is_partition()) throw std::invalid_argument("shape must be a partition");
    std::vector<int> shape;
    for (int a = 0; a < lam.arity(); ++a)
        if (lam[a] > 0) shape.push_back(lam[a]);
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) t[i].assign(shape[i], 0);
    std::int64_t count = 0;
    auto rec = [&](auto&& self, std::size_t row, int col) -> void {
        if (row == shape.size()) {
            ++count;
            return;
        }
        const auto [nr, nc] = (col + 1 < shape[row]) ? std::pair<std::size_t, int>{row, col + 1}
                                                     : std::pair<std::size_t, int>{row + 1, 0};
        const int lo = std::max(col > 0 ? t[row][col - 1] : 1,
                                (row > 0 && col < shape[row - 1]) ? t[row - 1][col] + 1 : 1);
        for (int v = lo; v <= n; ++v) {
            t[row][col] = v;
            self(self, nr, nc);
        }
    };
    rec(rec, 0, 0);
    return count;
}

inline std::int64_t syt_count(const Composition& lam) {
    if (!lam.is_partition()) throw std::invalid_argument("shape must be a partition");
    std::vector<int> shape;
    for (int a = 0; a < lam.arity(); ++a)
        if (lam[a] > 0) shape.push_back(lam[a]);
    const int r = lam.degree();
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) t[i].assign(shape[i], 0);
    std::vector<bool> used(r + 1, false);
    std::int64_t count = 0;
    auto rec = [&](auto&& self, std::size_t row, int col) -> void {
        if (row == shape.size()) {
            ++count;
            return;
        }
        const auto [nr, nc] = (col + 1 < shape[row]) ? std::pair<std::size_t, int>{row, col + 1}
                                                     : std::pair<std::size_t, int>{row + 1, 0};
        for (int v = 1; v <= r; ++v) {
            if (used[v]) continue;
            if (col > 0 && t[row][col - 1] > v) continue;
            if (row > 0 && col < shape[row - 1] && t[row - 1][col] >= v) continue;
            used[v] = true;
            t[row][col] = v;
            self(self, nr, nc);
            used[v] = false;
        }
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace qschur
