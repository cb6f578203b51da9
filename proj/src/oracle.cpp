#include "quif5/oracle.hpp"

#include <algorithm>

namespace quif5 {

Oracle::Oracle(const FreeModule& F, int dim_cap) : F_(&F) {
    const BasicAlgebra& alg = F.algebra();
    for (int m = 0; m < alg.dim(); ++m)
        for (int g = 0; g < F.rank(); ++g)
            if (alg.mono_start(m) == F.gen(g).vertex) columns_.push_back(ModMono{g, m});
    std::sort(columns_.begin(), columns_.end(), mod_key_less);
    if (static_cast<int>(columns_.size()) > dim_cap)
        throw ComputationError("oracle dimension cap exceeded: dim F = " +
                               std::to_string(columns_.size()));
    for (int i = 0; i < static_cast<int>(columns_.size()); ++i)
        column_index_[{columns_[i].gen, columns_[i].mono}] = i;
}

std::vector<std::int64_t> Oracle::to_dense(const ModuleElement& f) const {
    std::vector<std::int64_t> v(columns_.size(), 0);
    for (const auto& [m, c] : f.terms) v[column_index_.at({m.gen, m.mono})] = c;
    return v;
}

Oracle::EchelonResult Oracle::reduce_rows(std::vector<std::vector<std::int64_t>> rows) const {
    const Field& k = F_->algebra().field();
    std::size_t n = columns_.size();
    std::vector<std::vector<std::int64_t>> basis;  // rows with distinct pivot columns
    std::vector<int> pivot_cols;
    for (auto& row : rows) {
        for (std::size_t col = 0; col < n; ++col) {
            if (row[col] == 0) continue;
            auto hit = std::find(pivot_cols.begin(), pivot_cols.end(), static_cast<int>(col));
            if (hit == pivot_cols.end()) {
                std::int64_t inv = k.inv(row[col]);
                for (auto& x : row) x = k.mul(x, inv);
                basis.push_back(row);
                pivot_cols.push_back(static_cast<int>(col));
                break;
            }
            const auto& b = basis[static_cast<std::size_t>(hit - pivot_cols.begin())];
            std::int64_t c = row[col];
            for (std::size_t j = col; j < n; ++j) row[j] = k.sub(row[j], k.mul(c, b[j]));
        }
    }
    // back-substitute for fully reduced rows, then sort by pivot column
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            std::int64_t c = basis[i][static_cast<std::size_t>(pivot_cols[j])];
            if (c == 0) continue;
            for (std::size_t col = 0; col < n; ++col)
                basis[i][col] = k.sub(basis[i][col], k.mul(c, basis[j][col]));
        }
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return pivot_cols[a] < pivot_cols[b]; });

    EchelonResult res;
    res.dim = static_cast<int>(basis.size());
    for (std::size_t i : idx) {
        res.pivots.push_back(columns_[static_cast<std::size_t>(pivot_cols[i])]);
        ModuleElement e;
        for (std::size_t col = 0; col < n; ++col)
            if (basis[i][col] != 0) e.terms.emplace_back(columns_[col], basis[i][col]);
        res.basis.push_back(std::move(e));
    }
    return res;
}

Oracle::EchelonResult Oracle::module_echelon(const std::vector<ModuleElement>& gens) const {
    const BasicAlgebra& alg = F_->algebra();
    std::vector<std::vector<std::int64_t>> rows;
    for (const ModuleElement& g : gens)
        for (int b = 0; b < alg.dim(); ++b) {
            ModuleElement gb = F_->act_mono(g, b);
            if (!gb.is_zero()) rows.push_back(to_dense(gb));
        }
    return reduce_rows(std::move(rows));
}

std::vector<int> Oracle::radical_filtration(const std::vector<ModuleElement>& gens) const {
    const BasicAlgebra& alg = F_->algebra();
    std::vector<int> dims;
    EchelonResult cur = module_echelon(gens);
    dims.push_back(cur.dim);
    while (cur.dim > 0) {
        // multiply the spanning set by all degree-1 monomials of A
        std::vector<std::vector<std::int64_t>> rows;
        for (const ModuleElement& e : cur.basis)
            for (int m = 0; m < alg.dim(); ++m) {
                if (alg.mono_degree(m) != 1) continue;
                ModuleElement em = F_->act_mono(e, m);
                if (!em.is_zero()) rows.push_back(to_dense(em));
            }
        cur = module_echelon([&] {
            std::vector<ModuleElement> span;
            for (auto& r : rows) {
                ModuleElement e;
                for (std::size_t col = 0; col < columns_.size(); ++col)
                    if (r[col] != 0) e.terms.emplace_back(columns_[col], r[col]);
                span.push_back(std::move(e));
            }
            return span;
        }());
        dims.push_back(cur.dim);
    }
    return dims;
}

bool Oracle::member(const EchelonResult& e, const ModuleElement& f) const {
    const Field& k = F_->algebra().field();
    std::vector<std::int64_t> v = to_dense(f);
    for (std::size_t i = 0; i < e.basis.size(); ++i) {
        int col = column_index_.at({e.pivots[i].gen, e.pivots[i].mono});
        std::int64_t c = v[static_cast<std::size_t>(col)];
        if (c == 0) continue;
        for (const auto& [m, a] : e.basis[i].terms) {
            int j = column_index_.at({m.gen, m.mono});
            v[static_cast<std::size_t>(j)] = k.sub(v[static_cast<std::size_t>(j)], k.mul(c, a));
        }
    }
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool Oracle::verify_standard_basis(const std::vector<ModuleElement>& gens,
                                   const std::vector<ModuleElement>& B) const {
    EchelonResult e = module_echelon(gens);
    for (const ModuleElement& b : B) {
        if (b.is_zero()) return false;
        if (!member(e, b)) return false;
        bool lm_is_pivot =
            std::any_of(e.pivots.begin(), e.pivots.end(),
                        [&](const ModMono& p) { return p == b.lm(); });
        if (!lm_is_pivot) return false;
    }
    for (const ModMono& pivot : e.pivots) {
        bool covered = std::any_of(B.begin(), B.end(), [&](const ModuleElement& b) {
            return !b.is_zero() && F_->strict_divides(b.lm(), pivot) >= 0;
        });
        if (!covered) return false;
    }
    return true;
}

}  // namespace quif5
