#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quif5/field.hpp"
#include "quif5/order.hpp"
#include "quif5/quiver.hpp"

namespace quif5 {

/// Formal K-combination of paths of the path algebra (nonzero coefficients).
using PathPoly = std::vector<std::pair<std::int64_t, Path>>;

struct AlgebraSpec {
    Quiver quiver;
    std::int64_t p = 2;
    std::vector<PathPoly> relations;
    std::optional<int> nilpotency;  // nullopt = auto (homogeneous relations only)
    OrderMode order_mode = OrderMode::NegativeDegree;
    std::vector<int> precedence;  // empty = declaration order
    int degree_cap = 64;
};

/// Sparse element of the algebra in the preferred basis. Terms are keyed by
/// standard-monomial index; indices ascend, monomials descend, so the first
/// term is the leading term.
struct AlgebraElement {
    std::vector<std::pair<int, std::int64_t>> terms;

    bool is_zero() const { return terms.empty(); }
    int lm() const { return terms.front().first; }
    std::int64_t lc() const { return terms.front().second; }
};

struct CofactorClass {
    enum Kind { Small, Toppling, Invalid };
    Kind kind = Invalid;
    int toppling_mono = -1;  // standard index of the toppling value, -1 = zero
};

struct MinimalToppling {
    int cofactor;       // standard index of the cofactor
    int toppling_mono;  // standard index of LM(b*c) in A, -1 if the product vanishes
};

/// The basic algebra A = P/ker(psi): preferred basis, truncated
/// multiplication table, cofactor classification. Immutable after build.
class BasicAlgebra {
public:
    static BasicAlgebra build(const AlgebraSpec& spec);

    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    const Order& order() const { return order_; }
    int nilpotency() const { return nilpotency_; }
    int dim() const { return static_cast<int>(stdmon_.size()); }

    const Path& mono_path(int idx) const { return stdmon_.at(idx); }
    int mono_degree(int idx) const { return stdmon_.at(idx).degree(); }
    int mono_end(int idx) const { return stdmon_.at(idx).end; }
    int mono_start(int idx) const { return stdmon_.at(idx).start; }

    /// Standard index of a path, or -1 if the path is not standard.
    int mono_index(const Path& p) const {
        auto it = std_index_.find(p);
        return it == std_index_.end() ? -1 : it->second;
    }
    bool is_standard(const Path& p) const { return std_index_.count(p) > 0; }
    int trivial_mono(int vertex) const { return mono_index(quiver_.trivial_path(vertex)); }

    AlgebraElement mono_element(int idx) const { return AlgebraElement{{{idx, 1}}}; }

    /// psi(lambda(b) * x) for a standard monomial b and arrow x.
    const AlgebraElement& mul_mono_arrow(int mono, int arrow) const {
        return mul_table_.at(mono).at(arrow);
    }

    AlgebraElement mul_mono_path(int mono, const Path& p) const;
    AlgebraElement mul_mono_mono(int b, int c) const { return mul_mono_path(b, stdmon_[c]); }
    AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g) const;
    AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g,
                       std::int64_t scale_g = 1) const;
    AlgebraElement scale(const AlgebraElement& f, std::int64_t c) const;

    CofactorClass classify_cofactor(int b, int c) const;
    std::vector<MinimalToppling> minimal_topplings(int b) const;
    /// All small cofactors of b (BFS, includes the trivial path at end(b)).
    std::vector<int> small_cofactors(int b) const;

    std::string element_str(const AlgebraElement& f) const;

private:
    BasicAlgebra(Quiver q, Field f, Order o) : quiver_(std::move(q)), field_(f), order_(o) {}

    Quiver quiver_;
    Field field_;
    Order order_;
    int nilpotency_ = 0;
    std::vector<Path> stdmon_;  // descending w.r.t. the ordering
    std::unordered_map<Path, int, PathHash> std_index_;
    std::vector<std::vector<AlgebraElement>> mul_table_;  // [mono][arrow]
    mutable std::unordered_map<Path, CofactorClass, PathHash> cofactor_cache_;
};

}  // namespace quif5
