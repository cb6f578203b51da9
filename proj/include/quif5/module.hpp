#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "quif5/algebra.hpp"

namespace quif5 {

/// Monomial v_gen * b of the free module, b given by standard index.
struct ModMono {
    int gen = -1;
    int mono = -1;
    bool operator==(const ModMono&) const = default;
};

/// Term-over-position key: standard indices ascend while monomials descend,
/// with the smaller generator index winning ties.
inline bool mod_key_less(const ModMono& a, const ModMono& b) {
    return std::tie(a.mono, a.gen) < std::tie(b.mono, b.gen);
}
inline bool mod_mono_greater(const ModMono& a, const ModMono& b) { return mod_key_less(a, b); }

/// Sparse element of F; terms sorted by mod_key_less, so the first term is
/// the leading term.
struct ModuleElement {
    std::vector<std::pair<ModMono, std::int64_t>> terms;

    bool is_zero() const { return terms.empty(); }
    const ModMono& lm() const { return terms.front().first; }
    std::int64_t lc() const { return terms.front().second; }
    bool operator==(const ModuleElement&) const = default;
};

struct FreeGen {
    std::string name;
    int vertex;
};

/// The free right-A module F with vertex-tagged generators.
class FreeModule {
public:
    FreeModule(const BasicAlgebra& alg, std::vector<FreeGen> gens)
        : alg_(&alg), gens_(std::move(gens)) {
        for (const FreeGen& g : gens_)
            if (g.vertex < 0 || g.vertex >= alg.quiver().num_vertices())
                throw SemanticError("module generator '" + g.name + "' has an unknown vertex");
    }

    const BasicAlgebra& algebra() const { return *alg_; }
    int rank() const { return static_cast<int>(gens_.size()); }
    const FreeGen& gen(int i) const { return gens_.at(i); }

    /// Total K-dimension of F.
    int dim() const {
        int d = 0;
        for (const FreeGen& g : gens_)
            for (int m = 0; m < alg_->dim(); ++m)
                if (alg_->mono_start(m) == g.vertex) ++d;
        return d;
    }

    ModuleElement make(std::vector<std::pair<ModMono, std::int64_t>> terms) const {
        std::map<std::pair<int, int>, std::int64_t> acc;
        for (auto& [m, c] : terms) {
            check_mono(m);
            auto key = std::pair(m.mono, m.gen);
            acc[key] = alg_->field().add(acc.count(key) ? acc[key] : 0, alg_->field().reduce(c));
        }
        ModuleElement r;
        for (const auto& [k, c] : acc)
            if (c != 0) r.terms.push_back({ModMono{k.second, k.first}, c});
        return r;
    }

    ModuleElement monomial(int gen_idx, int mono, std::int64_t coeff = 1) const {
        return make({{ModMono{gen_idx, mono}, coeff}});
    }

    ModuleElement add(const ModuleElement& f, const ModuleElement& g,
                      std::int64_t scale_g = 1) const {
        const Field& k = alg_->field();
        std::int64_t s = k.reduce(scale_g);
        ModuleElement r;
        std::size_t i = 0, j = 0;
        while (i < f.terms.size() || j < g.terms.size()) {
            bool take_f = j >= g.terms.size() ||
                          (i < f.terms.size() && mod_key_less(f.terms[i].first, g.terms[j].first));
            bool take_g = i >= f.terms.size() ||
                          (j < g.terms.size() && mod_key_less(g.terms[j].first, f.terms[i].first));
            if (take_f) {
                r.terms.push_back(f.terms[i++]);
            } else if (take_g) {
                std::int64_t c = k.mul(s, g.terms[j].second);
                if (c != 0) r.terms.emplace_back(g.terms[j].first, c);
                ++j;
            } else {
                std::int64_t c = k.add(f.terms[i].second, k.mul(s, g.terms[j].second));
                if (c != 0) r.terms.emplace_back(f.terms[i].first, c);
                ++i;
                ++j;
            }
        }
        return r;
    }

    ModuleElement scale(const ModuleElement& f, std::int64_t c) const {
        std::int64_t cc = alg_->field().reduce(c);
        ModuleElement r;
        if (cc == 0) return r;
        for (const auto& [m, a] : f.terms) r.terms.emplace_back(m, alg_->field().mul(a, cc));
        return r;
    }

    /// Right action by a standard monomial (given by index).
    ModuleElement act_mono(const ModuleElement& f, int c) const {
        std::map<std::pair<int, int>, std::int64_t> acc;
        const Field& k = alg_->field();
        for (const auto& [m, alpha] : f.terms) {
            AlgebraElement prod = alg_->mul_mono_mono(m.mono, c);
            for (const auto& [b, beta] : prod.terms) {
                auto key = std::pair(b, m.gen);
                std::int64_t v = k.add(acc.count(key) ? acc[key] : 0, k.mul(alpha, beta));
                acc[key] = v;
            }
        }
        ModuleElement r;
        for (const auto& [key, c2] : acc)
            if (c2 != 0) r.terms.push_back({ModMono{key.second, key.first}, c2});
        return r;
    }

    ModuleElement act(const ModuleElement& f, const AlgebraElement& a) const {
        ModuleElement r;
        for (const auto& [c, beta] : a.terms) r = add(r, act_mono(f, c), beta);
        return r;
    }

    /// m1 || m2 with the (standard, small-by-construction) cofactor path
    /// index, or -1.
    int strict_divides(const ModMono& m1, const ModMono& m2) const {
        if (m1.gen != m2.gen) return -1;
        const Path& p1 = alg_->mono_path(m1.mono);
        const Path& p2 = alg_->mono_path(m2.mono);
        if (!alg_->quiver().is_prefix(p1, p2)) return -1;
        int c = alg_->mono_index(alg_->quiver().complement(p1, p2));
        if (c < 0) throw InternalError("suffix of a standard path is not standard");
        return c;
    }

    std::string mono_str(const ModMono& m) const {
        return gens_.at(m.gen).name + "*" + alg_->quiver().path_str(alg_->mono_path(m.mono));
    }

    std::string element_str(const ModuleElement& f) const {
        if (f.is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
            if (i) s += " + ";
            if (f.terms[i].second != 1) s += std::to_string(f.terms[i].second) + "*";
            s += mono_str(f.terms[i].first);
        }
        return s;
    }

private:
    void check_mono(const ModMono& m) const {
        if (m.gen < 0 || m.gen >= rank()) throw SemanticError("module generator index out of range");
        if (m.mono < 0 || m.mono >= alg_->dim())
            throw SemanticError("standard monomial index out of range");
        if (alg_->mono_start(m.mono) != gens_[m.gen].vertex)
            throw SemanticError("monomial does not start at the vertex of generator '" +
                                gens_[m.gen].name + "'");
    }

    const BasicAlgebra* alg_;
    std::vector<FreeGen> gens_;
};

}  // namespace quif5
