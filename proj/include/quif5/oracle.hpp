#pragma once

#include "quif5/module.hpp"

namespace quif5 {

/// Brute-force linear-algebra ground truth: dense row reduction over the
/// full monomial basis of F. Independent of the reduction/F5 code paths;
/// uses only algebra multiplication.
class Oracle {
public:
    explicit Oracle(const FreeModule& F, int dim_cap = 512);

    int dim_f() const { return static_cast<int>(columns_.size()); }
    const std::vector<ModMono>& columns() const { return columns_; }

    struct EchelonResult {
        int dim = 0;
        std::vector<ModMono> pivots;
        std::vector<ModuleElement> basis;
    };

    /// Row-reduced span of { gen_i * b : b standard }.
    EchelonResult module_echelon(const std::vector<ModuleElement>& gens) const;

    /// [dim Rad^0 M, dim Rad^1 M, ...], ending with 0.
    std::vector<int> radical_filtration(const std::vector<ModuleElement>& gens) const;

    bool verify_standard_basis(const std::vector<ModuleElement>& gens,
                               const std::vector<ModuleElement>& B) const;

    /// True iff f lies in the span of the echelon basis.
    bool member(const EchelonResult& e, const ModuleElement& f) const;

private:
    std::vector<std::int64_t> to_dense(const ModuleElement& f) const;
    EchelonResult reduce_rows(std::vector<std::vector<std::int64_t>> rows) const;

    const FreeModule* F_;
    std::vector<ModMono> columns_;  // descending monomial order
    std::map<std::pair<int, int>, int> column_index_;
};

}  // namespace quif5
