#include "quif5/f5.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace quif5 {

bool is_standard_relative(const BasicAlgebra& alg, const Signature& sig, const SyzygyLMSet& L) {
    if (!alg.is_standard(sig.path)) return false;
    return !L.covers(alg.quiver(), sig);
}

bool is_sig_reducible(const FreeModule& F, const ModMono& lm, const Signature& s,
                      const std::vector<SignedElement>& G) {
    const Order& ord = F.algebra().order();
    for (const SignedElement& g : G) {
        if (g.poly.is_zero()) continue;
        int cof = F.strict_divides(g.poly.lm(), lm);
        if (cof < 0) continue;
        Signature sc = sig_times_path(g.sig, F.algebra().mono_path(cof));
        if (compare_signatures(ord, sc, s) < 0) return true;
    }
    return false;
}

bool is_normal_pair(const FreeModule& F, const CriticalPair& p,
                    const std::vector<SignedElement>& G, const SyzygyLMSet& L) {
    if (!is_standard_relative(F.algebra(), p.sig, L)) return false;
    const SignedElement& g = G[p.g];
    if (is_sig_reducible(F, g.poly.lm(), g.sig, G)) return false;
    if (p.kind == CriticalPair::S) {
        const SignedElement& g2 = G[p.g2];
        if (is_sig_reducible(F, g2.poly.lm(), g2.sig, G)) return false;
    }
    return true;
}

bool f5_reducer_exists(const FreeModule& F, const Signature& sig,
                       const std::vector<SignedElement>& G) {
    const BasicAlgebra& alg = F.algebra();
    const Quiver& q = alg.quiver();
    for (const SignedElement& g : G) {
        if (g.poly.is_zero()) continue;
        if (g.sig.gen != sig.gen) continue;
        if (!q.is_prefix(g.sig.path, sig.path)) continue;
        Path cpath = q.complement(g.sig.path, sig.path);
        int c = alg.mono_index(cpath);
        if (c < 0) continue;
        const ModMono& lm = g.poly.lm();
        if (alg.mono_end(lm.mono) != cpath.start) continue;
        if (alg.classify_cofactor(lm.mono, c).kind != CofactorClass::Small) continue;
        Path prod_path = *q.compose(alg.mono_path(lm.mono), cpath);
        ModMono prod_lm{lm.gen, alg.mono_index(prod_path)};
        if (!is_sig_reducible(F, prod_lm, sig, G)) return true;
    }
    return false;
}

SignedElement spolynomial(const FreeModule& F, const CriticalPair& p,
                          const std::vector<SignedElement>& G) {
    const SignedElement& g = G[p.g];
    ModuleElement prod = F.act_mono(g.poly, p.cofactor);
    if (p.kind == CriticalPair::S) {
        const SignedElement& g2 = G[p.g2];
        std::int64_t c = F.algebra().field().div(g.poly.lc(), g2.poly.lc());
        prod = F.add(prod, g2.poly, F.algebra().field().neg(c));
    }
    return SignedElement{std::move(prod),
                         sig_times_path(g.sig, F.algebra().mono_path(p.cofactor))};
}

std::vector<CriticalPair> generate_pairs(const FreeModule& F,
                                         const std::vector<SignedElement>& G) {
    const BasicAlgebra& alg = F.algebra();
    const Order& ord = alg.order();
    std::vector<CriticalPair> pairs;
    long counter = 0;
    for (int i = 0; i < static_cast<int>(G.size()); ++i) {
        const ModMono& lm = G[i].poly.lm();
        for (const MinimalToppling& t : alg.minimal_topplings(lm.mono)) {
            // trivial cofactors at other vertices annihilate the whole
            // element (terms all end where the signature path ends), so the
            // S-polynomial is identically zero and carries no signature
            if (alg.mono_path(t.cofactor).start != G[i].sig.path.end) continue;
            CriticalPair p{CriticalPair::T, i, -1, t.cofactor,
                           sig_times_path(G[i].sig, alg.mono_path(t.cofactor)), counter++};
            pairs.push_back(std::move(p));
        }
        for (int j = 0; j < static_cast<int>(G.size()); ++j) {
            if (j == i) continue;
            int cof = F.strict_divides(lm, G[j].poly.lm());
            if (cof < 0) continue;
            Signature sc = sig_times_path(G[i].sig, alg.mono_path(cof));
            if (compare_signatures(ord, G[j].sig, sc) < 0)
                pairs.push_back(CriticalPair{CriticalPair::S, i, j, cof, sc, counter++});
        }
    }
    return pairs;
}

std::vector<SignedElement> signed_interreduce(const FreeModule& F,
                                              std::vector<SignedElement> G, SyzygyLMSet& L,
                                              long* harvested) {
    const BasicAlgebra& alg = F.algebra();
    const Order& ord = alg.order();
    G.erase(std::remove_if(G.begin(), G.end(),
                           [](const SignedElement& g) { return g.poly.is_zero(); }),
            G.end());
    bool changed = true;
    while (changed) {
        changed = false;
        // drop elements whose leading term and signature are reachable from
        // another element by a common small cofactor
        for (std::size_t i = 0; i < G.size(); ++i) {
            bool removable = false;
            for (std::size_t j = 0; j < G.size() && !removable; ++j) {
                if (j == i) continue;
                int cof = F.strict_divides(G[j].poly.lm(), G[i].poly.lm());
                if (cof < 0) continue;
                Signature sc = sig_times_path(G[j].sig, alg.mono_path(cof));
                if (compare_signatures(ord, sc, G[i].sig) == 0) removable = true;
            }
            if (removable) {
                G.erase(G.begin() + static_cast<long>(i));
                --i;
                changed = true;
            }
        }
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<SignedElement> rest;
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) rest.push_back(G[j]);
            ModuleElement nf = signed_normal_form(F, G[i].poly, rest, G[i].sig).nf;
            if (nf == G[i].poly) continue;
            changed = true;
            if (nf.is_zero()) {
                L.insert(G[i].sig);
                if (harvested) ++*harvested;
                G.erase(G.begin() + static_cast<long>(i));
                --i;
            } else {
                G[i].poly = std::move(nf);
            }
        }
    }
    return G;
}

F5Result f5_stdbasis(const FreeModule& F, const std::vector<ModuleElement>& gens) {
    const BasicAlgebra& alg = F.algebra();
    const Order& ord = alg.order();
    const Quiver& q = alg.quiver();
    F5Result res;

    // split generators into right-vertex-pure components, one signature slot
    // each; mixed end vertices cannot share a slot in E
    std::vector<SignedElement> initial;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        for (int v = 0; v < q.num_vertices(); ++v) {
            ModuleElement comp;
            for (const auto& [m, c] : gens[i].terms)
                if (alg.mono_end(m.mono) == v) comp.terms.emplace_back(m, c);
            if (comp.is_zero()) continue;
            int slot = static_cast<int>(res.slots.size());
            res.slots.emplace_back(i, v);
            initial.push_back(SignedElement{std::move(comp), Signature{slot, q.trivial_path(v)}});
        }
    }

    // interreduction drops are not counted as zero reductions (matching the
    // Buchberger statistics); only main-loop S-polynomial reductions count
    std::vector<SignedElement> G = signed_interreduce(F, std::move(initial), res.syzygies);

    std::set<std::pair<int, Path>> processed;  // rewritten-criterion log keys
    auto pair_less = [&](const CriticalPair& a, const CriticalPair& b) {
        int c = compare_signatures(ord, a.sig, b.sig);
        if (c != 0) return c < 0;
        return a.created > b.created;
    };

    std::vector<CriticalPair> pairs = generate_pairs(F, G);
    while (!pairs.empty()) {
        auto it = std::max_element(pairs.begin(), pairs.end(), pair_less);
        CriticalPair p = *it;
        pairs.erase(it);
        ++res.stats.pairs_considered;
        if (!is_normal_pair(F, p, G, res.syzygies)) {
            ++res.stats.pairs_skipped_not_normal;
            continue;
        }
        auto key = std::pair(p.sig.gen, p.sig.path);
        if (processed.count(key) || f5_reducer_exists(F, p.sig, G)) {
            ++res.stats.pairs_skipped_reducer;
            continue;
        }
        if (processed.count(key))
            throw InternalError("signature processed twice (rewritten criterion violated)");
        processed.insert(key);
        res.processed_log.push_back(p.sig);

        SignedElement sp = spolynomial(F, p, G);
        ModuleElement nf = signed_normal_form(F, sp.poly, G, sp.sig).nf;
        if (nf.is_zero()) {
            res.syzygies.insert(sp.sig);
            ++res.stats.zero_reductions;
            // G unchanged; the pending pair list stays valid
        } else {
            G.push_back(SignedElement{std::move(nf), sp.sig});
            G = signed_interreduce(F, std::move(G), res.syzygies);
            pairs = generate_pairs(F, G);
        }
    }
    res.basis = std::move(G);
    return res;
}

bool f5_certificate(const FreeModule& F, const F5Result& res) {
    for (const CriticalPair& p : generate_pairs(F, res.basis)) {
        if (!is_normal_pair(F, p, res.basis, res.syzygies)) continue;
        if (!f5_reducer_exists(F, p.sig, res.basis)) return false;
    }
    return true;
}

}  // namespace quif5
