#pragma once

#include "quif5/f5.hpp"

namespace quif5 {

/// Representative poly(g)*c of a tau-layer basis element.
struct LayerEntry {
    int g;
    int cofactor;
    int sig_degree;
};

/// Basis of L_tau(M) for tau the greatest signature of degree
/// min_sig_degree - under a negative degree ordering only the degree cut
/// matters. Entries with sig degree >= min_sig_degree qualify.
std::vector<LayerEntry> layer_basis(const FreeModule& F, const std::vector<SignedElement>& G,
                                    int min_sig_degree);

struct LoewyLayer {
    int depth;  // d-th layer = Rad^{d-1}/Rad^d
    std::vector<ModuleElement> basis;
};

std::vector<LoewyLayer> loewy_layers(const FreeModule& F, const std::vector<SignedElement>& G);

std::vector<ModuleElement> minimal_generators(const FreeModule& F,
                                              const std::vector<SignedElement>& G);

}  // namespace quif5
