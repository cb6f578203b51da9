#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quif5/errors.hpp"

namespace quif5 {

/// A directed path in a quiver: a composable arrow sequence with cached
/// endpoints. An empty arrow sequence is the trivial path 1_v (start == end).
struct Path {
    int start = -1;
    int end = -1;
    std::vector<int> arrows;

    int degree() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    auto operator<=>(const Path&) const = default;
};

struct PathHash {
    std::size_t operator()(const Path& p) const {
        std::size_t h = std::hash<int>{}(p.start) * 1000003u ^ std::hash<int>{}(p.end);
        for (int a : p.arrows) h = h * 131 + static_cast<std::size_t>(a + 1);
        return h;
    }
};

struct Arrow {
    std::string name;
    int src;
    int tgt;
};

/// Finite quiver: ordered vertices and arrows, both addressed by index.
class Quiver {
public:
    int add_vertex(const std::string& name) {
        if (vertex_index_.count(name))
            throw SemanticError("duplicate vertex id '" + name + "'");
        vertex_index_[name] = static_cast<int>(vertices_.size());
        vertices_.push_back(name);
        return static_cast<int>(vertices_.size()) - 1;
    }

    int add_arrow(const std::string& name, int src, int tgt) {
        if (arrow_index_.count(name))
            throw SemanticError("duplicate arrow id '" + name + "'");
        if (src < 0 || src >= num_vertices() || tgt < 0 || tgt >= num_vertices())
            throw SemanticError("arrow '" + name + "' has an undeclared endpoint");
        arrow_index_[name] = static_cast<int>(arrows_.size());
        arrows_.push_back({name, src, tgt});
        arrows_from_.clear();
        return static_cast<int>(arrows_.size()) - 1;
    }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }

    int find_vertex(const std::string& name) const {
        auto it = vertex_index_.find(name);
        return it == vertex_index_.end() ? -1 : it->second;
    }
    int find_arrow(const std::string& name) const {
        auto it = arrow_index_.find(name);
        return it == arrow_index_.end() ? -1 : it->second;
    }

    const std::vector<int>& arrows_from(int v) const {
        if (arrows_from_.empty() && num_arrows() > 0) {
            arrows_from_.resize(vertices_.size());
            for (int a = 0; a < num_arrows(); ++a)
                arrows_from_[arrows_[a].src].push_back(a);
        }
        if (arrows_from_.empty()) arrows_from_.resize(vertices_.size());
        return arrows_from_.at(v);
    }

    Path trivial_path(int v) const {
        if (v < 0 || v >= num_vertices()) throw SemanticError("unknown vertex index");
        return Path{v, v, {}};
    }

    Path arrow_path(int a) const {
        const Arrow& ar = arrow(a);
        return Path{ar.src, ar.tgt, {a}};
    }

    /// Concatenation; nullopt is the distinguished Zero result on endpoint
    /// mismatch.
    std::optional<Path> compose(const Path& a, const Path& b) const {
        if (a.end != b.start) return std::nullopt;
        Path r{a.start, b.end, a.arrows};
        r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
        return r;
    }

    /// Extends p by one arrow; caller guarantees arrow(a).src == p.end.
    Path extend(const Path& p, int a) const {
        Path r = p;
        r.arrows.push_back(a);
        r.end = arrow(a).tgt;
        return r;
    }

    bool is_prefix(const Path& p, const Path& q) const {
        if (p.start != q.start || p.degree() > q.degree()) return false;
        for (int k = 0; k < p.degree(); ++k)
            if (p.arrows[k] != q.arrows[k]) return false;
        return true;
    }

    /// The unique r with compose(p, r) == q; throws if p is not a prefix of q.
    Path complement(const Path& p, const Path& q) const {
        if (!is_prefix(p, q)) throw NotADivisor();
        Path r;
        r.start = p.end;
        r.end = q.end;
        r.arrows.assign(q.arrows.begin() + p.degree(), q.arrows.end());
        return r;
    }

    std::string path_str(const Path& p) const {
        if (p.trivial()) return "id(" + vertex_name(p.start) + ")";
        std::string s;
        for (std::size_t k = 0; k < p.arrows.size(); ++k) {
            if (k) s += "*";
            s += arrow(p.arrows[k]).name;
        }
        return s;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, int> vertex_index_;
    std::unordered_map<std::string, int> arrow_index_;
    mutable std::vector<std::vector<int>> arrows_from_;
};

}  // namespace quif5
