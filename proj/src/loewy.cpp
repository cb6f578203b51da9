#include "quif5/loewy.hpp"

#include <algorithm>

namespace quif5 {

namespace {

void require_negative(const FreeModule& F, const char* what) {
    if (F.algebra().order().mode() != OrderMode::NegativeDegree) throw WrongOrdering(what);
}

// All qualifying (g, c) with the degree of sigma(g)*lambda(c); the
// irreducibility clause makes leading monomials pairwise distinct.
std::vector<LayerEntry> all_entries(const FreeModule& F, const std::vector<SignedElement>& G) {
    const BasicAlgebra& alg = F.algebra();
    std::vector<LayerEntry> out;
    for (int i = 0; i < static_cast<int>(G.size()); ++i) {
        const ModMono& lm = G[i].poly.lm();
        for (int c : alg.small_cofactors(lm.mono)) {
            Signature sc = sig_times_path(G[i].sig, alg.mono_path(c));
            Path prod = *alg.quiver().compose(alg.mono_path(lm.mono), alg.mono_path(c));
            ModMono prod_lm{lm.gen, alg.mono_index(prod)};
            if (is_sig_reducible(F, prod_lm, sc, G)) continue;
            out.push_back(LayerEntry{i, c, sc.path.degree()});
        }
    }
    return out;
}

}  // namespace

std::vector<LayerEntry> layer_basis(const FreeModule& F, const std::vector<SignedElement>& G,
                                    int min_sig_degree) {
    require_negative(F, "layer_basis");
    std::vector<LayerEntry> out;
    for (const LayerEntry& e : all_entries(F, G))
        if (e.sig_degree >= min_sig_degree) out.push_back(e);
    return out;
}

std::vector<LoewyLayer> loewy_layers(const FreeModule& F, const std::vector<SignedElement>& G) {
    require_negative(F, "loewy_layers");
    std::vector<LayerEntry> entries = all_entries(F, G);
    std::vector<LoewyLayer> layers;
    int max_deg = -1;
    for (const LayerEntry& e : entries) max_deg = std::max(max_deg, e.sig_degree);
    for (int d = 1; d <= max_deg + 1; ++d) {
        LoewyLayer layer{d, {}};
        for (const LayerEntry& e : entries)
            if (e.sig_degree == d - 1)
                layer.basis.push_back(F.act_mono(G[e.g].poly, e.cofactor));
        if (layer.basis.empty()) break;
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<ModuleElement> minimal_generators(const FreeModule& F,
                                              const std::vector<SignedElement>& G) {
    require_negative(F, "minimal_generators");
    std::vector<ModuleElement> out;
    for (const SignedElement& g : G)
        if (g.sig.path.degree() == 0) out.push_back(g.poly);
    return out;
}

}  // namespace quif5
