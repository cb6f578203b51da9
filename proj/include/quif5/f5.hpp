#pragma once

#include "quif5/reduction.hpp"

namespace quif5 {

/// Signatures known to be leading monomials of ker(ev); fed by zero
/// reductions only.
class SyzygyLMSet {
public:
    void insert(const Signature& s) { entries_.push_back(s); }
    const std::vector<Signature>& entries() const { return entries_; }

    /// False iff some entry with the same slot has a path that is a prefix of
    /// sig's path (right-divisor matching).
    bool covers(const Quiver& q, const Signature& sig) const {
        for (const Signature& e : entries_)
            if (e.gen == sig.gen && q.is_prefix(e.path, sig.path)) return true;
        return false;
    }

private:
    std::vector<Signature> entries_;
};

struct CriticalPair {
    enum Kind { T, S } kind;
    int g;         // index into G
    int g2 = -1;   // second element for type S
    int cofactor;  // standard index, small (S) or minimal-toppling (T) cofactor of LM(g)
    Signature sig;
    long created = 0;
};

struct F5Stats {
    long pairs_considered = 0;
    long pairs_skipped_not_normal = 0;
    long pairs_skipped_reducer = 0;
    long zero_reductions = 0;
};

/// True iff sig's path is standard and no L entry right-divides it.
bool is_standard_relative(const BasicAlgebra& alg, const Signature& sig, const SyzygyLMSet& L);

/// sig-reducibility of a module monomial with respect to a signed set.
bool is_sig_reducible(const FreeModule& F, const ModMono& lm, const Signature& s,
                      const std::vector<SignedElement>& G);

bool is_normal_pair(const FreeModule& F, const CriticalPair& p,
                    const std::vector<SignedElement>& G, const SyzygyLMSet& L);

/// Search for g in G and a small cofactor c with sigma(g)*lambda(c) == sig and
/// poly(g)*c sig-irreducible with respect to G.
bool f5_reducer_exists(const FreeModule& F, const Signature& sig,
                       const std::vector<SignedElement>& G);

SignedElement spolynomial(const FreeModule& F, const CriticalPair& p,
                          const std::vector<SignedElement>& G);

/// All critical pairs of the current basis (types T and S).
std::vector<CriticalPair> generate_pairs(const FreeModule& F,
                                         const std::vector<SignedElement>& G);

/// Signed interreduction; zero reductions insert their signature into L and
/// are counted in *harvested.
std::vector<SignedElement> signed_interreduce(const FreeModule& F,
                                              std::vector<SignedElement> G, SyzygyLMSet& L,
                                              long* harvested = nullptr);

struct F5Result {
    std::vector<SignedElement> basis;
    SyzygyLMSet syzygies;
    F5Stats stats;
    std::vector<Signature> processed_log;
    // signature slot -> (input generator index, end vertex of that component)
    std::vector<std::pair<int, int>> slots;
};

/// The F5 main loop. Input generators are split into right-vertex-pure
/// components, one signature slot each; pairs are processed in descending
/// signature order.
F5Result f5_stdbasis(const FreeModule& F, const std::vector<ModuleElement>& gens);

/// Post-hoc certificate: every pair of the final basis that is normal
/// relative to L admits an F5 reducer.
bool f5_certificate(const FreeModule& F, const F5Result& res);

}  // namespace quif5
