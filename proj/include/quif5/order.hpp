#pragma once

#include <vector>

#include "quif5/quiver.hpp"

namespace quif5 {

enum class OrderMode { PositiveDegree, NegativeDegree };

/// Monomial ordering on the path algebra: degree first (direction per mode),
/// then left-lexicographically on arrow precedence. Equal-degree trivial
/// paths 1_u, 1_v are ordered by vertex index.
class Order {
public:
    Order(OrderMode mode, const Quiver& q, const std::vector<int>& precedence = {})
        : mode_(mode) {
        // precedence lists arrows from lowest to highest; default is
        // declaration order.
        rank_.assign(q.num_arrows(), -1);
        if (precedence.empty()) {
            for (int a = 0; a < q.num_arrows(); ++a) rank_[a] = a;
        } else {
            if (static_cast<int>(precedence.size()) != q.num_arrows())
                throw SemanticError("arrow precedence must list every arrow exactly once");
            for (int r = 0; r < static_cast<int>(precedence.size()); ++r) {
                int a = precedence[r];
                if (a < 0 || a >= q.num_arrows() || rank_[a] != -1)
                    throw SemanticError("arrow precedence must be a permutation of the arrows");
                rank_[a] = r;
            }
        }
    }

    OrderMode mode() const { return mode_; }

    /// -1, 0, 1 for a < b, a == b, a > b.
    int compare_paths(const Path& a, const Path& b) const {
        if (a.degree() != b.degree()) {
            bool a_greater = (mode_ == OrderMode::PositiveDegree)
                                 ? a.degree() > b.degree()
                                 : a.degree() < b.degree();
            return a_greater ? 1 : -1;
        }
        for (int k = 0; k < a.degree(); ++k) {
            int ra = rank_[a.arrows[k]], rb = rank_[b.arrows[k]];
            if (ra != rb) return ra > rb ? 1 : -1;
        }
        if (a.start != b.start) return a.start < b.start ? 1 : -1;
        return 0;
    }

    bool path_less(const Path& a, const Path& b) const { return compare_paths(a, b) < 0; }
    bool path_greater(const Path& a, const Path& b) const { return compare_paths(a, b) > 0; }

    /// Term-over-position with the smaller generator index winning ties; used
    /// both for module monomials (paths are the standard-path lifts) and for
    /// signatures.
    int compare_indexed(int gen_a, const Path& a, int gen_b, const Path& b) const {
        int c = compare_paths(a, b);
        if (c != 0) return c;
        if (gen_a != gen_b) return gen_a < gen_b ? 1 : -1;
        return 0;
    }

private:
    OrderMode mode_;
    std::vector<int> rank_;
};

}  // namespace quif5
