#include "quif5/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace quif5 {

namespace {

struct Token {
    enum Kind { Int, Ident, Punct, End } kind = End;
    std::string text;
    std::int64_t value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Int;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                t.text += take();
            try {
                t.value = std::stoll(t.text);
            } catch (const std::out_of_range&) {
                throw ParseError(t.line, t.col, "integer literal out of range");
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                t.text += take();
            return t;
        }
        if (std::string("{}()*+-;=").find(c) != std::string::npos) {
            t.kind = Token::Punct;
            t.text = take();
            return t;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

const std::set<std::string> kBlockKeywords = {"field",      "quiver", "relations", "nilpotency",
                                              "order",      "module", "generators"};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

    ProblemFile parse() {
        ProblemFile pf;
        if (!is_ident("field"))
            throw ParseError(cur_.line, cur_.col, "expected 'field' header");
        advance();
        pf.p = expect_int("field characteristic");
        std::set<std::string> seen;
        while (cur_.kind != Token::End) {
            if (cur_.kind != Token::Ident || !kBlockKeywords.count(cur_.text))
                throw ParseError(cur_.line, cur_.col,
                                 "expected a block keyword, got '" + describe() + "'");
            if (cur_.text == "field")
                throw ParseError(cur_.line, cur_.col, "duplicate 'field' header");
            if (!seen.insert(cur_.text).second)
                throw ParseError(cur_.line, cur_.col, "duplicate '" + cur_.text + "' block");
            if (cur_.text == "quiver") {
                advance();
                parse_quiver(pf);
            } else if (cur_.text == "relations") {
                advance();
                parse_relations(pf);
            } else if (cur_.text == "nilpotency") {
                advance();
                parse_nilpotency(pf);
            } else if (cur_.text == "order") {
                advance();
                parse_order(pf);
            } else if (cur_.text == "module") {
                advance();
                parse_module(pf);
            } else {
                advance();
                parse_generators(pf);
            }
        }
        return pf;
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool is_ident(const char* s) const { return cur_.kind == Token::Ident && cur_.text == s; }
    bool is_punct(char c) const { return cur_.kind == Token::Punct && cur_.text[0] == c; }

    std::string describe() const {
        switch (cur_.kind) {
            case Token::End: return "end of input";
            default: return cur_.text;
        }
    }

    void expect_punct(char c, const char* where) {
        if (!is_punct(c))
            throw ParseError(cur_.line, cur_.col, std::string("expected '") + c + "' " + where +
                                                      ", got '" + describe() + "'");
        advance();
    }

    std::int64_t expect_int(const char* what) {
        if (cur_.kind != Token::Int)
            throw ParseError(cur_.line, cur_.col,
                             std::string("expected ") + what + ", got '" + describe() + "'");
        std::int64_t v = cur_.value;
        advance();
        return v;
    }

    std::string expect_ident(const char* what) {
        if (cur_.kind != Token::Ident)
            throw ParseError(cur_.line, cur_.col,
                             std::string("expected ") + what + ", got '" + describe() + "'");
        std::string s = cur_.text;
        advance();
        return s;
    }

    void parse_quiver(ProblemFile& pf) {
        expect_punct('{', "after 'quiver'");
        while (!is_punct('}')) {
            if (is_ident("vertex")) {
                advance();
                pf.vertices.push_back(expect_ident("a vertex id"));
            } else if (is_ident("arrow")) {
                advance();
                ArrowDecl a;
                a.name = expect_ident("an arrow id");
                a.src = expect_ident("a source vertex id");
                a.tgt = expect_ident("a target vertex id");
                pf.arrows.push_back(std::move(a));
            } else {
                throw ParseError(cur_.line, cur_.col,
                                 "expected 'vertex', 'arrow' or '}', got '" + describe() + "'");
            }
        }
        advance();
    }

    std::vector<PathFactor> parse_pathexpr() {
        std::vector<PathFactor> factors;
        factors.push_back(parse_factor());
        while (is_punct('*')) {
            advance();
            factors.push_back(parse_factor());
        }
        return factors;
    }

    PathFactor parse_factor() {
        if (cur_.kind != Token::Ident)
            throw ParseError(cur_.line, cur_.col,
                             "expected an arrow id or 'id(vertex)', got '" + describe() + "'");
        if (cur_.text == "id") {
            advance();
            expect_punct('(', "after 'id'");
            PathFactor f{true, expect_ident("a vertex id")};
            expect_punct(')', "after the vertex id");
            return f;
        }
        PathFactor f{false, cur_.text};
        advance();
        return f;
    }

    RelTerm parse_rel_term() {
        RelTerm t;
        if (cur_.kind == Token::Int) {
            t.coeff = cur_.value;
            advance();
            expect_punct('*', "after the coefficient");
        }
        t.factors = parse_pathexpr();
        return t;
    }

    RelPoly parse_rel_poly() {
        RelPoly p;
        p.terms.push_back(parse_rel_term());
        while (is_punct('+') || is_punct('-')) {
            bool neg = is_punct('-');
            advance();
            RelTerm t = parse_rel_term();
            if (neg) t.coeff = -t.coeff;
            p.terms.push_back(std::move(t));
        }
        return p;
    }

    void parse_relations(ProblemFile& pf) {
        expect_punct('{', "after 'relations'");
        pf.relations.push_back(parse_rel_poly());
        while (is_punct(';')) {
            advance();
            pf.relations.push_back(parse_rel_poly());
        }
        expect_punct('}', "after the relation list");
    }

    void parse_nilpotency(ProblemFile& pf) {
        if (cur_.kind == Token::Int) {
            pf.nilpotency = static_cast<int>(expect_int("a nilpotency bound"));
        } else if (is_ident("auto")) {
            pf.nilpotency = std::nullopt;
            advance();
        } else {
            throw ParseError(cur_.line, cur_.col,
                             "expected an integer or 'auto', got '" + describe() + "'");
        }
    }

    void parse_order(ProblemFile& pf) {
        if (is_ident("negdeglex") || is_ident("deglex")) {
            pf.order_mode = cur_.text;
            advance();
        } else {
            throw ParseError(cur_.line, cur_.col,
                             "expected 'negdeglex' or 'deglex', got '" + describe() + "'");
        }
        if (is_ident("precedence")) {
            advance();
            if (cur_.kind != Token::Ident || kBlockKeywords.count(cur_.text))
                throw ParseError(cur_.line, cur_.col,
                                 "expected at least one arrow id after 'precedence'");
            while (cur_.kind == Token::Ident && !kBlockKeywords.count(cur_.text)) {
                pf.precedence.push_back(cur_.text);
                advance();
            }
        }
    }

    void parse_module(ProblemFile& pf) {
        expect_punct('{', "after 'module'");
        while (!is_punct('}')) {
            if (!is_ident("gen"))
                throw ParseError(cur_.line, cur_.col,
                                 "expected 'gen' or '}', got '" + describe() + "'");
            advance();
            ModGenDecl g;
            g.name = expect_ident("a module generator id");
            if (!is_ident("at"))
                throw ParseError(cur_.line, cur_.col,
                                 "expected 'at', got '" + describe() + "'");
            advance();
            g.vertex = expect_ident("a vertex id");
            pf.module_gens.push_back(std::move(g));
        }
        advance();
    }

    ModTerm parse_mod_term() {
        ModTerm t;
        if (cur_.kind == Token::Int) {
            t.coeff = cur_.value;
            advance();
            expect_punct('*', "after the coefficient");
        }
        t.gen = expect_ident("a module generator id");
        if (is_punct('*')) {
            advance();
            t.factors = parse_pathexpr();
        }
        return t;
    }

    ModPoly parse_mod_poly() {
        ModPoly p;
        p.terms.push_back(parse_mod_term());
        while (is_punct('+') || is_punct('-')) {
            bool neg = is_punct('-');
            advance();
            ModTerm t = parse_mod_term();
            if (neg) t.coeff = -t.coeff;
            p.terms.push_back(std::move(t));
        }
        return p;
    }

    void parse_generators(ProblemFile& pf) {
        expect_punct('{', "after 'generators'");
        auto one = [&] {
            GenDecl g;
            g.name = expect_ident("a generator name");
            expect_punct('=', "after the generator name");
            g.value = parse_mod_poly();
            pf.generators.push_back(std::move(g));
        };
        one();
        while (is_punct(';')) {
            advance();
            one();
        }
        expect_punct('}', "after the generator list");
    }

    Lexer lex_;
    Token cur_;
};

std::string factors_str(std::int64_t coeff, const std::vector<PathFactor>& factors,
                        const std::string& head) {
    std::string s;
    if (coeff != 1 || (head.empty() && factors.empty())) s += std::to_string(coeff) + "*";
    bool first = true;
    if (!head.empty()) {
        s += head;
        first = false;
    }
    for (const PathFactor& f : factors) {
        if (!first) s += "*";
        first = false;
        s += f.is_vertex ? "id(" + f.name + ")" : f.name;
    }
    return s;
}

template <typename Poly, typename TermStr>
std::string poly_str(const Poly& poly, TermStr term_str) {
    std::string s;
    for (std::size_t i = 0; i < poly.terms.size(); ++i) {
        auto t = poly.terms[i];
        if (i) s += t.coeff < 0 ? " - " : " + ";
        if (i && t.coeff < 0) t.coeff = -t.coeff;
        s += term_str(t);
    }
    return s;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) { return Parser(text).parse(); }

std::string print_problem(const ProblemFile& pf) {
    std::ostringstream out;
    out << "field " << pf.p << "\n";
    out << "quiver {\n";
    for (const std::string& v : pf.vertices) out << "  vertex " << v << "\n";
    for (const ArrowDecl& a : pf.arrows)
        out << "  arrow " << a.name << " " << a.src << " " << a.tgt << "\n";
    out << "}\n";
    if (!pf.relations.empty()) {
        out << "relations {\n";
        for (std::size_t i = 0; i < pf.relations.size(); ++i)
            out << "  "
                << poly_str(pf.relations[i],
                            [](const RelTerm& t) { return factors_str(t.coeff, t.factors, ""); })
                << (i + 1 < pf.relations.size() ? ";" : "") << "\n";
        out << "}\n";
    }
    out << "nilpotency " << (pf.nilpotency ? std::to_string(*pf.nilpotency) : "auto") << "\n";
    out << "order " << pf.order_mode;
    if (!pf.precedence.empty()) {
        out << " precedence";
        for (const std::string& a : pf.precedence) out << " " << a;
    }
    out << "\n";
    if (!pf.module_gens.empty()) {
        out << "module {\n";
        for (const ModGenDecl& g : pf.module_gens)
            out << "  gen " << g.name << " at " << g.vertex << "\n";
        out << "}\n";
    }
    if (!pf.generators.empty()) {
        out << "generators {\n";
        for (std::size_t i = 0; i < pf.generators.size(); ++i)
            out << "  " << pf.generators[i].name << " = "
                << poly_str(pf.generators[i].value,
                            [](const ModTerm& t) { return factors_str(t.coeff, t.factors, t.gen); })
                << (i + 1 < pf.generators.size() ? ";" : "") << "\n";
        out << "}\n";
    }
    return out.str();
}

namespace {

Path resolve_path(const Quiver& q, int start_vertex, const std::vector<PathFactor>& factors) {
    Path cur;
    bool have = start_vertex >= 0;
    if (have) cur = q.trivial_path(start_vertex);
    for (const PathFactor& f : factors) {
        Path next;
        if (f.is_vertex) {
            int v = q.find_vertex(f.name);
            if (v < 0) throw SemanticError("unknown vertex id '" + f.name + "'");
            next = q.trivial_path(v);
        } else {
            int a = q.find_arrow(f.name);
            if (a < 0) throw SemanticError("unknown arrow id '" + f.name + "'");
            next = q.arrow_path(a);
        }
        if (!have) {
            cur = next;
            have = true;
            continue;
        }
        auto composed = q.compose(cur, next);
        if (!composed)
            throw SemanticError("vertex mismatch at '" + f.name + "': path ends at '" +
                                q.vertex_name(cur.end) + "' but '" + f.name + "' starts at '" +
                                q.vertex_name(next.start) + "'");
        cur = *composed;
    }
    if (!have) throw SemanticError("empty path expression");
    return cur;
}

std::int64_t reduce_coeff(const Field& k, std::int64_t raw, std::vector<std::string>& warnings) {
    std::int64_t r = k.reduce(raw);
    if (raw < 0 || raw >= k.p())
        warnings.push_back("coefficient " + std::to_string(raw) + " reduced to " +
                           std::to_string(r) + " modulo " + std::to_string(k.p()));
    return r;
}

}  // namespace

BuiltProblem build_problem(const ProblemFile& pf, int degree_cap) {
    BuiltProblem out;
    AlgebraSpec spec;
    spec.p = pf.p;
    spec.nilpotency = pf.nilpotency;
    spec.degree_cap = degree_cap;
    spec.order_mode = pf.order_mode == "deglex" ? OrderMode::PositiveDegree
                                                : OrderMode::NegativeDegree;
    Field k(pf.p);

    for (const std::string& v : pf.vertices) spec.quiver.add_vertex(v);
    for (const ArrowDecl& a : pf.arrows) {
        int src = spec.quiver.find_vertex(a.src);
        int tgt = spec.quiver.find_vertex(a.tgt);
        if (src < 0) throw SemanticError("unknown vertex id '" + a.src + "'");
        if (tgt < 0) throw SemanticError("unknown vertex id '" + a.tgt + "'");
        spec.quiver.add_arrow(a.name, src, tgt);
    }
    for (const std::string& name : pf.precedence) {
        int a = spec.quiver.find_arrow(name);
        if (a < 0) throw SemanticError("unknown arrow id '" + name + "' in precedence list");
        spec.precedence.push_back(a);
    }
    for (const RelPoly& rel : pf.relations) {
        std::map<Path, std::int64_t> acc;
        for (const RelTerm& t : rel.terms) {
            Path p = resolve_path(spec.quiver, -1, t.factors);
            std::int64_t c = reduce_coeff(k, t.coeff, out.warnings);
            acc[p] = k.add(acc.count(p) ? acc[p] : 0, c);
        }
        PathPoly poly;
        for (const auto& [p, c] : acc)
            if (c != 0) poly.emplace_back(c, p);
        if (!poly.empty()) spec.relations.push_back(std::move(poly));
    }

    out.algebra = std::make_unique<BasicAlgebra>(BasicAlgebra::build(spec));
    const BasicAlgebra& alg = *out.algebra;

    std::vector<FreeGen> fgens;
    std::map<std::string, int> gen_index;
    for (const ModGenDecl& g : pf.module_gens) {
        int v = alg.quiver().find_vertex(g.vertex);
        if (v < 0) throw SemanticError("unknown vertex id '" + g.vertex + "'");
        if (gen_index.count(g.name))
            throw SemanticError("duplicate module generator id '" + g.name + "'");
        gen_index[g.name] = static_cast<int>(fgens.size());
        fgens.push_back(FreeGen{g.name, v});
    }
    out.module = std::make_unique<FreeModule>(alg, std::move(fgens));

    std::set<std::string> named;
    for (const GenDecl& g : pf.generators) {
        if (!named.insert(g.name).second)
            throw SemanticError("duplicate generator name '" + g.name + "'");
        std::vector<std::pair<ModMono, std::int64_t>> terms;
        for (const ModTerm& t : g.value.terms) {
            auto it = gen_index.find(t.gen);
            if (it == gen_index.end())
                throw SemanticError("unknown module generator id '" + t.gen + "'");
            int gi = it->second;
            Path p = resolve_path(alg.quiver(), out.module->gen(gi).vertex, t.factors);
            std::int64_t c = reduce_coeff(k, t.coeff, out.warnings);
            // psi(path) expressed in the preferred basis; the path itself may
            // be non-standard
            AlgebraElement img = alg.mul_mono_path(alg.trivial_mono(p.start), p);
            for (const auto& [b, beta] : img.terms)
                terms.push_back({ModMono{gi, b}, k.mul(c, beta)});
        }
        out.gen_names.push_back(g.name);
        out.generators.push_back(out.module->make(std::move(terms)));
    }
    return out;
}

}  // namespace quif5
