#include "quif5/algebra.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace quif5 {

namespace {

// Row space over F_p with monic, mutually reduced rows. Keys ascend while
// monomials descend, so the pivot of a row is its smallest key and tails
// contain only larger keys.
class Echelon {
public:
    explicit Echelon(const Field& f) : field_(f) {}

    using Row = std::map<int, std::int64_t>;

    Row reduce(Row w) const {
        for (auto it = w.begin(); it != w.end();)
            it = it->second == 0 ? w.erase(it) : std::next(it);
        auto it = w.begin();
        while (it != w.end()) {
            auto r = rows_.find(it->first);
            if (r == rows_.end()) {
                ++it;
                continue;
            }
            int pivot = it->first;
            std::int64_t c = it->second;
            w.erase(it);
            for (auto& [k, a] : r->second) {
                if (k == pivot) continue;
                std::int64_t nv = field_.sub(w.count(k) ? w[k] : 0, field_.mul(c, a));
                if (nv == 0)
                    w.erase(k);
                else
                    w[k] = nv;
            }
            it = w.upper_bound(pivot);
        }
        return w;
    }

    // Returns the pivot key of the inserted row, or -1 if it reduced to zero.
    int insert(Row w) {
        w = reduce(std::move(w));
        if (w.empty()) return -1;
        int pivot = w.begin()->first;
        std::int64_t inv = field_.inv(w.begin()->second);
        for (auto& [k, a] : w) a = field_.mul(a, inv);
        // eliminate the new pivot from existing tails
        for (auto& [pk, row] : rows_) {
            auto hit = row.find(pivot);
            if (hit == row.end()) continue;
            std::int64_t c = hit->second;
            row.erase(hit);
            for (auto& [k, a] : w) {
                if (k == pivot) continue;
                std::int64_t nv = field_.sub(row.count(k) ? row[k] : 0, field_.mul(c, a));
                if (nv == 0)
                    row.erase(k);
                else
                    row[k] = nv;
            }
        }
        rows_[pivot] = std::move(w);
        return pivot;
    }

    bool is_pivot(int k) const { return rows_.count(k) > 0; }
    const std::map<int, Row>& rows() const { return rows_; }

private:
    const Field& field_;
    std::map<int, Row> rows_;
};

constexpr std::size_t kMaxTruncatedPaths = 1u << 17;

std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, int max_degree_exclusive) {
    std::vector<std::vector<Path>> by_degree;
    std::vector<Path> cur;
    for (int v = 0; v < q.num_vertices(); ++v) cur.push_back(q.trivial_path(v));
    std::size_t total = cur.size();
    by_degree.push_back(cur);
    for (int d = 1; d < max_degree_exclusive; ++d) {
        std::vector<Path> next;
        for (const Path& p : by_degree.back())
            for (int a : q.arrows_from(p.end)) next.push_back(q.extend(p, a));
        total += next.size();
        if (total > kMaxTruncatedPaths)
            throw ComputationError("truncated path algebra exceeds the size cap");
        if (next.empty()) break;
        by_degree.push_back(std::move(next));
    }
    return by_degree;
}

void validate_relations(const AlgebraSpec& spec) {
    for (const PathPoly& rel : spec.relations) {
        if (rel.empty()) continue;
        int s = rel.front().second.start, e = rel.front().second.end;
        for (const auto& [c, p] : rel) {
            if (p.degree() < 2)
                throw NotBasic("relation contains a path of degree " +
                               std::to_string(p.degree()) + " (must be at least 2)");
            if (p.start != s || p.end != e)
                throw SemanticError("relation is not vertex-homogeneous");
        }
    }
}

}  // namespace

BasicAlgebra BasicAlgebra::build(const AlgebraSpec& spec) {
    Field field(spec.p);
    Order order(spec.order_mode, spec.quiver, spec.precedence);
    const Quiver& q = spec.quiver;
    if (q.num_vertices() == 0) throw SemanticError("quiver has no vertices");
    validate_relations(spec);

    std::vector<PathPoly> relations;
    for (const PathPoly& rel : spec.relations) {
        PathPoly r;
        for (auto [c, p] : rel) {
            std::int64_t cc = field.reduce(c);
            if (cc != 0) r.emplace_back(cc, p);
        }
        if (!r.empty()) relations.push_back(std::move(r));
    }

    // pivot path -> monic fully reduced row (tails standard after saturation)
    std::unordered_map<Path, std::vector<std::pair<Path, std::int64_t>>, PathHash> psi_rows;
    int nilpotency = 0;
    std::vector<std::vector<Path>> by_degree;

    auto path_id_maps = [&](const std::vector<Path>& paths, const Order& ord) {
        std::vector<Path> sorted = paths;
        std::sort(sorted.begin(), sorted.end(),
                  [&](const Path& a, const Path& b) { return ord.compare_paths(a, b) > 0; });
        std::unordered_map<Path, int, PathHash> ids;
        for (int i = 0; i < static_cast<int>(sorted.size()); ++i) ids[sorted[i]] = i;
        return std::pair(std::move(sorted), std::move(ids));
    };

    if (!spec.nilpotency.has_value()) {
        // Auto mode: degreewise, N = first degree where every path is a pivot.
        for (const PathPoly& rel : relations) {
            int d = rel.front().second.degree();
            for (const auto& [c, p] : rel)
                if (p.degree() != d) throw NonHomogeneousAuto();
        }
        // rows of the previous degree, as path polynomials
        std::vector<std::vector<std::pair<Path, std::int64_t>>> prev_rows;
        std::vector<Path> cur_paths;
        for (int v = 0; v < q.num_vertices(); ++v) cur_paths.push_back(q.trivial_path(v));
        std::size_t total_paths = cur_paths.size();
        int found_n = -1;
        for (int d = 0;; ++d) {
            if (d > spec.degree_cap) throw DegreeCapExceeded(spec.degree_cap);
            if (cur_paths.empty()) {
                found_n = d;
                break;
            }
            auto [sorted, ids] = path_id_maps(cur_paths, order);
            Echelon ech(field);
            if (d >= 2) {
                std::vector<Echelon::Row> seeds;
                for (const PathPoly& rel : relations) {
                    if (rel.front().second.degree() != d) continue;
                    Echelon::Row w;
                    for (const auto& [c, p] : rel) w[ids.at(p)] = field.add(w[ids.at(p)], c);
                    seeds.push_back(std::move(w));
                }
                for (const auto& row : prev_rows) {
                    for (int a = 0; a < q.num_arrows(); ++a) {
                        Echelon::Row left, right;
                        for (const auto& [p, c] : row) {
                            if (q.arrow(a).tgt == p.start) {
                                Path lp = q.arrow_path(a);
                                lp.arrows.insert(lp.arrows.end(), p.arrows.begin(),
                                                 p.arrows.end());
                                lp.end = p.end;
                                left[ids.at(lp)] = field.add(left[ids.at(lp)], c);
                            }
                            if (p.end == q.arrow(a).src) {
                                Path rp = q.extend(p, a);
                                right[ids.at(rp)] = field.add(right[ids.at(rp)], c);
                            }
                        }
                        if (!left.empty()) seeds.push_back(std::move(left));
                        if (!right.empty()) seeds.push_back(std::move(right));
                    }
                }
                for (auto& w : seeds) ech.insert(std::move(w));
            }
            std::size_t pivots = ech.rows().size();
            if (pivots == sorted.size()) {
                found_n = d;
                break;
            }
            if (d <= 1 && pivots > 0)
                throw NotBasic("a path of degree " + std::to_string(d) +
                               " is a leading monomial of the relation ideal");
            prev_rows.clear();
            for (const auto& [piv, row] : ech.rows()) {
                std::vector<std::pair<Path, std::int64_t>> pr;
                for (const auto& [k, c] : row) pr.emplace_back(sorted[k], c);
                prev_rows.push_back(std::move(pr));
            }
            for (const auto& [piv, row] : ech.rows()) {
                std::vector<std::pair<Path, std::int64_t>> tail;
                for (const auto& [k, c] : row)
                    if (k != piv) tail.emplace_back(sorted[k], c);
                psi_rows[sorted[piv]] = std::move(tail);
            }
            by_degree.push_back(cur_paths);
            std::vector<Path> next;
            for (const Path& p : cur_paths)
                for (int a : q.arrows_from(p.end)) next.push_back(q.extend(p, a));
            total_paths += next.size();
            if (total_paths > kMaxTruncatedPaths)
                throw ComputationError("truncated path algebra exceeds the size cap");
            cur_paths = std::move(next);
        }
        nilpotency = found_n;
    } else {
        nilpotency = *spec.nilpotency;
        if (nilpotency < 1) throw SemanticError("nilpotency bound must be positive");
        by_degree = enumerate_paths(q, nilpotency);
        std::vector<Path> all;
        for (const auto& dp : by_degree) all.insert(all.end(), dp.begin(), dp.end());
        auto [sorted, ids] = path_id_maps(all, order);

        auto truncate_to_row = [&](const std::vector<std::pair<Path, std::int64_t>>& poly) {
            Echelon::Row w;
            for (const auto& [p, c] : poly) {
                if (p.degree() >= nilpotency) continue;  // J^N is asserted to vanish
                w[ids.at(p)] = field.add(w.count(ids.at(p)) ? w[ids.at(p)] : 0, c);
                if (w[ids.at(p)] == 0) w.erase(ids.at(p));
            }
            return w;
        };

        Echelon ech(field);
        for (const PathPoly& rel : relations) {
            std::vector<std::pair<Path, std::int64_t>> poly;
            for (const auto& [c, p] : rel) poly.emplace_back(p, c);
            ech.insert(truncate_to_row(poly));
        }
        // Saturate: multiply the whole row space by arrows on both sides until
        // no new pivots appear.
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::vector<std::pair<Path, std::int64_t>>> snapshot;
            for (const auto& [piv, row] : ech.rows()) {
                std::vector<std::pair<Path, std::int64_t>> pr;
                for (const auto& [k, c] : row) pr.emplace_back(sorted[k], c);
                snapshot.push_back(std::move(pr));
            }
            for (const auto& row : snapshot) {
                for (int a = 0; a < q.num_arrows(); ++a) {
                    std::vector<std::pair<Path, std::int64_t>> left, right;
                    for (const auto& [p, c] : row) {
                        if (q.arrow(a).tgt == p.start) {
                            Path lp = q.arrow_path(a);
                            lp.arrows.insert(lp.arrows.end(), p.arrows.begin(), p.arrows.end());
                            lp.end = p.end;
                            left.emplace_back(lp, c);
                        }
                        if (p.end == q.arrow(a).src) right.emplace_back(q.extend(p, a), c);
                    }
                    if (!left.empty() && ech.insert(truncate_to_row(left)) >= 0) changed = true;
                    if (!right.empty() && ech.insert(truncate_to_row(right)) >= 0) changed = true;
                }
            }
        }
        for (const PathPoly& rel : relations) {
            std::vector<std::pair<Path, std::int64_t>> poly;
            for (const auto& [c, p] : rel) poly.emplace_back(p, c);
            if (!ech.reduce(truncate_to_row(poly)).empty())
                throw InconsistentTruncation("a relation does not reduce to zero");
        }
        for (const auto& [piv, row] : ech.rows()) {
            if (sorted[piv].degree() <= 1)
                throw NotBasic("a path of degree " + std::to_string(sorted[piv].degree()) +
                               " is a leading monomial of the relation ideal");
            std::vector<std::pair<Path, std::int64_t>> tail;
            for (const auto& [k, c] : row)
                if (k != piv) tail.emplace_back(sorted[k], c);
            psi_rows[sorted[piv]] = std::move(tail);
        }
    }

    BasicAlgebra alg(q, field, order);
    alg.nilpotency_ = nilpotency;
    for (const auto& dp : by_degree)
        for (const Path& p : dp)
            if (!psi_rows.count(p)) alg.stdmon_.push_back(p);
    std::sort(alg.stdmon_.begin(), alg.stdmon_.end(),
              [&](const Path& a, const Path& b) { return order.compare_paths(a, b) > 0; });
    for (int i = 0; i < static_cast<int>(alg.stdmon_.size()); ++i)
        alg.std_index_[alg.stdmon_[i]] = i;

    // structural checks: trivial and degree-1 paths standard, prefixes of
    // standard paths standard
    for (int v = 0; v < q.num_vertices(); ++v)
        if (!alg.std_index_.count(q.trivial_path(v)))
            throw NotBasic("trivial path at vertex " + q.vertex_name(v) + " is not standard");
    for (const Path& p : alg.stdmon_) {
        if (p.degree() == 0) continue;
        Path prefix = p;
        prefix.end = prefix.degree() == 1 ? prefix.start : q.arrow(prefix.arrows[p.degree() - 2]).tgt;
        prefix.arrows.pop_back();
        if (!alg.std_index_.count(prefix))
            throw InternalError("prefix of a standard path is not standard");
    }

    // multiplication table; tails of psi_rows are standard by full reduction
    alg.mul_table_.assign(alg.dim(), std::vector<AlgebraElement>(q.num_arrows()));
    for (int m = 0; m < alg.dim(); ++m) {
        const Path& b = alg.stdmon_[m];
        for (int a : q.arrows_from(b.end)) {
            Path ext = q.extend(b, a);
            AlgebraElement e;
            if (ext.degree() >= nilpotency) {
                // zero
            } else if (auto it = alg.std_index_.find(ext); it != alg.std_index_.end()) {
                e.terms.emplace_back(it->second, 1);
            } else {
                auto row = psi_rows.find(ext);
                if (row == psi_rows.end())
                    throw InternalError("nonstandard path below the nilpotency bound is not a pivot");
                for (const auto& [p, c] : row->second) {
                    auto sit = alg.std_index_.find(p);
                    if (sit == alg.std_index_.end())
                        throw InternalError("echelon tail contains a nonstandard path");
                    e.terms.emplace_back(sit->second, field.neg(c));
                }
                std::sort(e.terms.begin(), e.terms.end());
            }
            alg.mul_table_[m][a] = std::move(e);
        }
    }
    return alg;
}

AlgebraElement BasicAlgebra::add(const AlgebraElement& f, const AlgebraElement& g,
                                 std::int64_t scale_g) const {
    AlgebraElement r;
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
        if (j >= g.terms.size() || (i < f.terms.size() && f.terms[i].first < g.terms[j].first)) {
            r.terms.push_back(f.terms[i++]);
        } else if (i >= f.terms.size() || g.terms[j].first < f.terms[i].first) {
            std::int64_t c = field_.mul(field_.reduce(scale_g), g.terms[j].second);
            if (c != 0) r.terms.emplace_back(g.terms[j].first, c);
            ++j;
        } else {
            std::int64_t c =
                field_.add(f.terms[i].second,
                           field_.mul(field_.reduce(scale_g), g.terms[j].second));
            if (c != 0) r.terms.emplace_back(f.terms[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

AlgebraElement BasicAlgebra::scale(const AlgebraElement& f, std::int64_t c) const {
    AlgebraElement r;
    std::int64_t cc = field_.reduce(c);
    if (cc == 0) return r;
    for (const auto& [m, a] : f.terms) r.terms.emplace_back(m, field_.mul(a, cc));
    return r;
}

AlgebraElement BasicAlgebra::mul_mono_path(int mono, const Path& p) const {
    AlgebraElement acc{{{mono, 1}}};
    if (stdmon_[mono].end != p.start) return AlgebraElement{};
    for (int a : p.arrows) {
        AlgebraElement next;
        for (const auto& [m, c] : acc.terms) {
            if (stdmon_[m].end != quiver_.arrow(a).src) continue;
            next = add(next, mul_table_[m][a], c);
        }
        acc = std::move(next);
        if (acc.is_zero()) break;
    }
    return acc;
}

AlgebraElement BasicAlgebra::multiply(const AlgebraElement& f, const AlgebraElement& g) const {
    AlgebraElement r;
    for (const auto& [b, alpha] : f.terms)
        for (const auto& [c, beta] : g.terms)
            r = add(r, mul_mono_path(b, stdmon_[c]), field_.mul(alpha, beta));
    return r;
}

CofactorClass BasicAlgebra::classify_cofactor(int b, int c) const {
    const Path& pb = stdmon_.at(b);
    const Path& pc = stdmon_.at(c);
    if (pb.end != pc.start) return CofactorClass{CofactorClass::Toppling, -1};
    Path concat = *quiver_.compose(pb, pc);
    auto cached = cofactor_cache_.find(concat);
    if (cached != cofactor_cache_.end()) return cached->second;
    CofactorClass result;
    if (std_index_.count(concat)) {
        result = CofactorClass{CofactorClass::Small, -1};
    } else {
        AlgebraElement prod = mul_mono_mono(b, c);
        result = CofactorClass{CofactorClass::Toppling, prod.is_zero() ? -1 : prod.lm()};
    }
    cofactor_cache_[concat] = result;
    return result;
}

std::vector<MinimalToppling> BasicAlgebra::minimal_topplings(int b) const {
    std::vector<MinimalToppling> out;
    // trivial paths at other vertices annihilate b and have no proper strict
    // divisors, so they are minimal topplings
    for (int v = 0; v < quiver_.num_vertices(); ++v)
        if (v != stdmon_[b].end) out.push_back(MinimalToppling{trivial_mono(v), -1});
    std::queue<int> small;  // standard indices of small cofactors
    small.push(trivial_mono(stdmon_[b].end));
    while (!small.empty()) {
        int c = small.front();
        small.pop();
        const Path& pc = stdmon_[c];
        for (int a : quiver_.arrows_from(pc.end)) {
            Path ext = quiver_.extend(pc, a);
            int ei = mono_index(ext);
            if (ei < 0) continue;  // nonstandard cofactor paths cannot occur
            CofactorClass cls = classify_cofactor(b, ei);
            if (cls.kind == CofactorClass::Small)
                small.push(ei);
            else
                out.push_back(MinimalToppling{ei, cls.toppling_mono});
        }
    }
    return out;
}

std::vector<int> BasicAlgebra::small_cofactors(int b) const {
    std::vector<int> out;
    std::queue<int> small;
    small.push(trivial_mono(stdmon_[b].end));
    while (!small.empty()) {
        int c = small.front();
        small.pop();
        out.push_back(c);
        const Path& pc = stdmon_[c];
        for (int a : quiver_.arrows_from(pc.end)) {
            Path ext = quiver_.extend(pc, a);
            int ei = mono_index(ext);
            if (ei < 0) continue;
            if (classify_cofactor(b, ei).kind == CofactorClass::Small) small.push(ei);
        }
    }
    return out;
}

std::string BasicAlgebra::element_str(const AlgebraElement& f) const {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) s += " + ";
        if (f.terms[i].second != 1) s += std::to_string(f.terms[i].second) + "*";
        s += quiver_.path_str(stdmon_[f.terms[i].first]);
    }
    return s;
}

}  // namespace quif5
