#pragma once

// Chain complexes of free modules with labeled bases and sparse differential
// matrices, homology rank computation, chain maps, and a JSON wire format
// that round-trips exactly.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qschur/combin.hpp"
#include "qschur/matrix.hpp"
#include "qschur/rings.hpp"

namespace qschur {

// one tuple slot of a basis label: a Y-pair on the Schur side, or a
// distinguished coset representative on the Hecke side
using SlotLabel = std::variant<YPair, Perm>;

struct BasisLabel {
    std::vector<Composition> chain;  // mu^(1) |> ... |> mu^(k)
    std::vector<SlotLabel> tuple;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
    friend bool operator<(const BasisLabel& a, const BasisLabel& b) {
        if (a.chain != b.chain) return a.chain < b.chain;
        return a.tuple < b.tuple;
    }
};

class ChainComplex {
public:
    ChainComplex(RingSpec ring, std::string name) : ring_(std::move(ring)), name_(std::move(name)) {}

    const RingSpec& ring() const { return ring_; }
    const std::string& name() const { return name_; }
    int top_degree() const { return static_cast<int>(labels_.size()) - 1; }
    std::size_t dim(int k) const { return labels_.at(k).size(); }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (const auto& l : labels_) out.push_back(l.size());
        return out;
    }
    const std::vector<BasisLabel>& labels(int k) const { return labels_.at(k); }
    // differential d_k : degree k -> degree k-1, for 1 <= k <= top_degree
    const SparseMatrix& diff(int k) const { return diffs_.at(k - 1); }
    std::size_t num_diffs() const { return diffs_.size(); }

    void push_degree(std::vector<BasisLabel> labels) { labels_.push_back(std::move(labels)); }
    void push_diff(SparseMatrix m) {
        const int k = static_cast<int>(diffs_.size()) + 1;
        if (m.rows() != dim(k - 1) || m.cols() != dim(k))
            throw std::invalid_argument("differential shape mismatch");
        diffs_.push_back(std::move(m));
    }

    // consecutive differentials compose to the zero matrix, exactly
    bool verify_d2() const {
        for (std::size_t k = 1; k < diffs_.size(); ++k)
            if (!diffs_[k - 1].multiply(diffs_[k]).is_zero()) return false;
        return true;
    }

private:
    RingSpec ring_;
    std::string name_;
    std::vector<std::vector<BasisLabel>> labels_;
    std::vector<SparseMatrix> diffs_;
};

// Betti_k = dim_k - rank(d_k) - rank(d_{k+1}), over the fraction field
inline std::vector<long long> homology_ranks(const ChainComplex& c) {
    const auto dims = c.dims();
    std::vector<std::size_t> ranks(dims.size(), 0);  // ranks[k] = rank d_{k+1}
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) ranks[k] = rank(c.diff(static_cast<int>(k) + 1), c.ring());
    std::vector<long long> betti(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const std::size_t out_rank = k == 0 ? 0 : ranks[k - 1];
        betti[k] = static_cast<long long>(dims[k]) - static_cast<long long>(ranks[k]) -
                   static_cast<long long>(out_rank);
    }
    return betti;
}

struct ExactnessReport {
    std::vector<std::size_t> dims;
    std::vector<long long> betti;
    bool d2_zero = false;
    bool pass = false;
};

// pass iff d^2 = 0 and Betti_k = 0 for k >= 1 (and Betti_0 = 0 unless tolerated)
inline ExactnessReport verify_exact(const ChainComplex& c, bool tolerate_H0) {
    ExactnessReport rep;
    rep.dims = c.dims();
    rep.d2_zero = c.verify_d2();
    rep.betti = homology_ranks(c);
    rep.pass = rep.d2_zero;
    for (std::size_t k = 0; k < rep.betti.size(); ++k) {
        if (k == 0 && tolerate_H0) continue;
        if (rep.betti[k] != 0) rep.pass = false;
    }
    return rep;
}

// entrywise base change t -> q of a generic complex (labels unchanged)
inline ChainComplex specialize_complex(const ChainComplex& c, const RingSpec& ring) {
    if (!c.ring().is_generic()) throw std::invalid_argument("source complex must be generic");
    ChainComplex out(ring, c.name());
    for (int k = 0; k <= c.top_degree(); ++k) out.push_degree(c.labels(k));
    for (int k = 1; k <= static_cast<int>(c.num_diffs()); ++k) {
        const SparseMatrix& src = c.diff(k);
        SparseMatrix m(src.rows(), src.cols());
        for (const auto& [rc, v] : src.entries())
            m.add(rc.first, rc.second, ring.specialize(v.laurent()));
        out.push_diff(std::move(m));
    }
    return out;
}

struct ChainMap {
    std::vector<SparseMatrix> mats;  // mats[k] : C_k -> D_k

    // D.diff o mats[k] == mats[k-1] o C.diff, all k
    bool commutes(const ChainComplex& from, const ChainComplex& to) const {
        for (int k = 1; k < static_cast<int>(mats.size()); ++k) {
            const SparseMatrix lhs = mats[k - 1].multiply(from.diff(k));
            const SparseMatrix rhs = to.diff(k).multiply(mats[k]);
            if (!(lhs == rhs)) return false;
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// JSON wire format ("qschur-complex/1"); import round-trips export exactly

namespace detail {

inline nlohmann::ordered_json slot_to_json(const SlotLabel& s) {
    nlohmann::ordered_json j;
    if (std::holds_alternative<YPair>(s)) {
        const auto& p = std::get<YPair>(s);
        j["i"] = p.i.entries();
        j["j"] = p.j.entries();
    } else {
        j["d"] = std::get<Perm>(s).images();
    }
    return j;
}

inline SlotLabel slot_from_json(const nlohmann::json& j) {
    if (j.contains("d")) return Perm(j["d"].get<std::vector<int>>());
    return YPair{MultiIndex(j["i"].get<std::vector<int>>()),
                 MultiIndex(j["j"].get<std::vector<int>>())};
}

inline Scalar scalar_from_string(const std::string& s, const RingSpec& ring) {
    switch (ring.kind()) {
        case RingKind::Generic: return Scalar(LaurentInt::parse(s));
        case RingKind::Rationals: return Scalar(Rational(s));
        default: return Scalar(FpElem{mod_norm(std::stoll(s), ring.prime()), ring.prime()});
    }
}

}  // namespace detail

inline nlohmann::ordered_json complex_to_json(const ChainComplex& c) {
    nlohmann::ordered_json root;
    root["schema"] = "qschur-complex/1";
    root["name"] = c.name();
    root["ring"] = c.ring().str();
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (int k = 0; k <= c.top_degree(); ++k) {
        nlohmann::ordered_json dl = nlohmann::ordered_json::array();
        for (const auto& lab : c.labels(k)) {
            nlohmann::ordered_json lj;
            nlohmann::ordered_json chain = nlohmann::ordered_json::array();
            for (const auto& mu : lab.chain) chain.push_back(mu.parts());
            lj["chain"] = std::move(chain);
            nlohmann::ordered_json tup = nlohmann::ordered_json::array();
            for (const auto& s : lab.tuple) tup.push_back(detail::slot_to_json(s));
            lj["tuple"] = std::move(tup);
            dl.push_back(std::move(lj));
        }
        degrees.push_back(std::move(dl));
    }
    root["degrees"] = std::move(degrees);
    nlohmann::ordered_json diffs = nlohmann::ordered_json::array();
    for (int k = 1; k <= static_cast<int>(c.num_diffs()); ++k) {
        const SparseMatrix& m = c.diff(k);
        nlohmann::ordered_json mj;
        mj["rows"] = m.rows();
        mj["cols"] = m.cols();
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& [rc, v] : m.entries())
            entries.push_back(nlohmann::ordered_json::array({rc.first, rc.second, v.str()}));
        mj["entries"] = std::move(entries);
        diffs.push_back(std::move(mj));
    }
    root["diffs"] = std::move(diffs);
    return root;
}

inline ChainComplex complex_from_json(const nlohmann::json& root) {
    if (root.value("schema", "") != "qschur-complex/1")
        throw std::invalid_argument("unknown complex schema");
    const RingSpec ring = RingSpec::parse(root.at("ring").get<std::string>());
    ChainComplex c(ring, root.value("name", ""));
    for (const auto& dl : root.at("degrees")) {
        std::vector<BasisLabel> labels;
        for (const auto& lj : dl) {
            BasisLabel lab;
            for (const auto& mu : lj.at("chain")) lab.chain.emplace_back(mu.get<std::vector<int>>());
            for (const auto& s : lj.at("tuple")) lab.tuple.push_back(detail::slot_from_json(s));
            labels.push_back(std::move(lab));
        }
        c.push_degree(std::move(labels));
    }
    for (const auto& mj : root.at("diffs")) {
        SparseMatrix m(mj.at("rows").get<std::size_t>(), mj.at("cols").get<std::size_t>());
        for (const auto& e : mj.at("entries"))
            m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                  detail::scalar_from_string(e.at(2).get<std::string>(), ring));
        c.push_diff(std::move(m));
    }
    return c;
}

}  // namespace qschur
