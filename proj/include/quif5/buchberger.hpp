#pragma once

#include "quif5/reduction.hpp"

namespace quif5 {

struct BuchbergerStats {
    long topplings_processed = 0;
    long zero_reductions = 0;
};

/// Replace elements by their normal form against the rest until every element
/// is irreducible; zero normal forms drop the element. Deterministic scan
/// order by list position.
std::vector<ModuleElement> interreduce(const FreeModule& F, std::vector<ModuleElement> G);

struct BuchbergerResult {
    std::vector<ModuleElement> basis;
    BuchbergerStats stats;
};

/// Buchberger-style standard basis computation driven by minimal topplings.
/// FIFO pair scheduling, re-seeded whenever the basis changes.
BuchbergerResult buchberger_stdbasis(const FreeModule& F, const std::vector<ModuleElement>& gens);

}  // namespace quif5
