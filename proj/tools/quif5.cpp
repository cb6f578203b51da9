#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quif5/buchberger.hpp"
#include "quif5/loewy.hpp"
#include "quif5/oracle.hpp"
#include "quif5/parser.hpp"
#include "quif5/random_instance.hpp"

using nlohmann::json;
using namespace quif5;

namespace {

constexpr int kSchemaVersion = 1;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorClass::Usage, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BuiltProblem load(const std::string& path, int degree_cap) {
    BuiltProblem bp = build_problem(parse_problem(slurp(path)), degree_cap);
    for (const std::string& w : bp.warnings) std::cerr << "warning: " << w << "\n";
    return bp;
}

std::string sig_str(const BuiltProblem& bp, const Signature& s) {
    return "e" + std::to_string(s.gen + 1) + "*" +
           bp.module->algebra().quiver().path_str(s.path);
}

json stats_json(const BuchbergerStats& s) {
    return {{"topplings_processed", s.topplings_processed},
            {"zero_reductions", s.zero_reductions}};
}

json stats_json(const F5Stats& s) {
    return {{"pairs_considered", s.pairs_considered},
            {"pairs_skipped_not_normal", s.pairs_skipped_not_normal},
            {"pairs_skipped_reducer", s.pairs_skipped_reducer},
            {"zero_reductions", s.zero_reductions}};
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

void oracle_diff_basis(const BuiltProblem& bp, const std::vector<ModuleElement>& basis) {
    Oracle oracle(*bp.module);
    if (!oracle.verify_standard_basis(bp.generators, basis))
        throw Error(ErrorClass::OracleMismatch,
                    "oracle check failed: computed basis disagrees with the linear-algebra span");
}

std::vector<ModuleElement> unsigned_basis(const F5Result& r) {
    std::vector<ModuleElement> out;
    for (const SignedElement& g : r.basis) out.push_back(g.poly);
    return out;
}

int cmd_algebra(const std::string& file, int degree_cap, bool as_json) {
    BuiltProblem bp = load(file, degree_cap);
    const BasicAlgebra& alg = *bp.algebra;
    json j{{"schema_version", kSchemaVersion},
           {"command", "algebra"},
           {"dim", alg.dim()},
           {"stdmon_count", alg.dim()},
           {"nilpotency", alg.nilpotency()}};
    json mons = json::array();
    for (int m = 0; m < alg.dim(); ++m) mons.push_back(alg.quiver().path_str(alg.mono_path(m)));
    j["stdmon"] = mons;
    std::ostringstream t;
    t << "dim " << alg.dim() << "\nstdmon " << alg.dim() << "\nnilpotency "
      << alg.nilpotency() << "\n";
    for (int m = 0; m < alg.dim(); ++m)
        t << "  " << alg.quiver().path_str(alg.mono_path(m)) << "\n";
    emit(as_json, j, t.str());
    return 0;
}

int cmd_stdbasis(const std::string& file, int degree_cap, bool as_json, bool oracle_check) {
    BuiltProblem bp = load(file, degree_cap);
    BuchbergerResult r = buchberger_stdbasis(*bp.module, bp.generators);
    if (oracle_check) oracle_diff_basis(bp, r.basis);
    json j{{"schema_version", kSchemaVersion},
           {"command", "stdbasis"},
           {"stats", stats_json(r.stats)}};
    json basis = json::array();
    for (const ModuleElement& b : r.basis) basis.push_back(bp.module->element_str(b));
    j["basis"] = basis;
    std::ostringstream t;
    t << "basis size " << r.basis.size() << "\n";
    for (const ModuleElement& b : r.basis) t << "  " << bp.module->element_str(b) << "\n";
    t << "topplings processed " << r.stats.topplings_processed << "\nzero reductions "
      << r.stats.zero_reductions << "\n";
    emit(as_json, j, t.str());
    return 0;
}

int cmd_f5(const std::string& file, int degree_cap, bool as_json, bool oracle_check) {
    BuiltProblem bp = load(file, degree_cap);
    F5Result r = f5_stdbasis(*bp.module, bp.generators);
    if (oracle_check) oracle_diff_basis(bp, unsigned_basis(r));
    json j{{"schema_version", kSchemaVersion},
           {"command", "f5"},
           {"stats", stats_json(r.stats)}};
    json basis = json::array();
    for (const SignedElement& g : r.basis)
        basis.push_back({{"poly", bp.module->element_str(g.poly)},
                         {"signature", sig_str(bp, g.sig)}});
    j["basis"] = basis;
    json syz = json::array();
    for (const Signature& s : r.syzygies.entries()) syz.push_back(sig_str(bp, s));
    j["syzygy_lms"] = syz;
    std::ostringstream t;
    t << "basis size " << r.basis.size() << "\n";
    for (const SignedElement& g : r.basis)
        t << "  " << bp.module->element_str(g.poly) << "   [sig " << sig_str(bp, g.sig) << "]\n";
    t << "syzygy leading monomials:\n";
    for (const Signature& s : r.syzygies.entries()) t << "  " << sig_str(bp, s) << "\n";
    t << "pairs considered " << r.stats.pairs_considered << "\nzero reductions "
      << r.stats.zero_reductions << "\n";
    emit(as_json, j, t.str());
    return 0;
}

int cmd_loewy(const std::string& file, int degree_cap, bool as_json, bool oracle_check) {
    BuiltProblem bp = load(file, degree_cap);
    F5Result r = f5_stdbasis(*bp.module, bp.generators);
    std::vector<LoewyLayer> layers = loewy_layers(*bp.module, r.basis);
    if (oracle_check) {
        Oracle oracle(*bp.module);
        std::vector<int> rad = oracle.radical_filtration(bp.generators);
        bool ok = rad.size() == layers.size() + 1;
        for (std::size_t d = 0; ok && d < layers.size(); ++d)
            ok = rad[d] - rad[d + 1] == static_cast<int>(layers[d].basis.size());
        if (!ok)
            throw Error(ErrorClass::OracleMismatch,
                        "oracle check failed: Loewy layer dimensions disagree with the "
                        "radical filtration");
    }
    json dims = json::array();
    for (const LoewyLayer& l : layers) dims.push_back(l.basis.size());
    json jl = json::array();
    for (const LoewyLayer& l : layers) {
        json lb = json::array();
        for (const ModuleElement& e : l.basis) lb.push_back(bp.module->element_str(e));
        jl.push_back(lb);
    }
    json j{{"schema_version", kSchemaVersion},
           {"command", "loewy"},
           {"loewy_dims", dims},
           {"layers", jl}};
    std::ostringstream t;
    t << "loewy dims [";
    for (std::size_t d = 0; d < layers.size(); ++d)
        t << (d ? ", " : "") << layers[d].basis.size();
    t << "]\n";
    for (const LoewyLayer& l : layers) {
        t << "layer " << l.depth << ":\n";
        for (const ModuleElement& e : l.basis) t << "  " << bp.module->element_str(e) << "\n";
    }
    emit(as_json, j, t.str());
    return 0;
}

int cmd_mingens(const std::string& file, int degree_cap, bool as_json, bool oracle_check) {
    BuiltProblem bp = load(file, degree_cap);
    F5Result r = f5_stdbasis(*bp.module, bp.generators);
    std::vector<ModuleElement> mg = minimal_generators(*bp.module, r.basis);
    if (oracle_check) {
        Oracle oracle(*bp.module);
        std::vector<int> rad = oracle.radical_filtration(bp.generators);
        int head = rad.size() >= 2 ? rad[0] - rad[1] : rad[0];
        if (head != static_cast<int>(mg.size()))
            throw Error(ErrorClass::OracleMismatch,
                        "oracle check failed: minimal generator count disagrees with "
                        "dim M - dim Rad M");
    }
    json gens = json::array();
    for (const ModuleElement& e : mg) gens.push_back(bp.module->element_str(e));
    json j{{"schema_version", kSchemaVersion},
           {"command", "mingens"},
           {"count", mg.size()},
           {"generators", gens}};
    std::ostringstream t;
    t << "minimal generators " << mg.size() << "\n";
    for (const ModuleElement& e : mg) t << "  " << bp.module->element_str(e) << "\n";
    emit(as_json, j, t.str());
    return 0;
}

int cmd_oracle(const std::string& file, int degree_cap, bool as_json) {
    BuiltProblem bp = load(file, degree_cap);
    Oracle oracle(*bp.module);
    Oracle::EchelonResult e = oracle.module_echelon(bp.generators);
    std::vector<int> rad = oracle.radical_filtration(bp.generators);
    json pivots = json::array();
    for (const ModMono& p : e.pivots) pivots.push_back(bp.module->mono_str(p));
    json j{{"schema_version", kSchemaVersion},
           {"command", "oracle"},
           {"dim", e.dim},
           {"pivots", pivots},
           {"radical_dims", rad}};
    std::ostringstream t;
    t << "dim " << e.dim << "\npivots:\n";
    for (const ModMono& p : e.pivots) t << "  " << bp.module->mono_str(p) << "\n";
    t << "radical dims [";
    for (std::size_t d = 0; d < rad.size(); ++d) t << (d ? ", " : "") << rad[d];
    t << "]\n";
    emit(as_json, j, t.str());
    return 0;
}

int cmd_bench(std::uint64_t seed, int count, bool as_json) {
    json rows = json::array();
    std::ostringstream t;
    t << "seed  dimA  rank  gens  | buch topplings  buch zero | f5 pairs  f5 zero\n";
    for (int i = 0; i < count; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        RandomInstance inst = random_instance(s);
        BuchbergerResult br = buchberger_stdbasis(*inst.built.module, inst.built.generators);
        F5Result fr = f5_stdbasis(*inst.built.module, inst.built.generators);
        rows.push_back({{"seed", s},
                        {"dim_a", inst.built.algebra->dim()},
                        {"rank", inst.built.module->rank()},
                        {"gens", inst.built.generators.size()},
                        {"buchberger", stats_json(br.stats)},
                        {"f5", stats_json(fr.stats)}});
        t << s << "  " << inst.built.algebra->dim() << "  " << inst.built.module->rank() << "  "
          << inst.built.generators.size() << "  | " << br.stats.topplings_processed << "  "
          << br.stats.zero_reductions << " | " << fr.stats.pairs_considered << "  "
          << fr.stats.zero_reductions << "\n";
    }
    json j{{"schema_version", kSchemaVersion}, {"command", "bench"}, {"instances", rows}};
    emit(as_json, j, t.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed standard bases over basic algebras"};
    app.require_subcommand(1);

    bool as_json = false;
    bool oracle_check = false;
    int degree_cap = 64;
    std::uint64_t seed = 1;
    int bench_count = 10;
    std::string file;

    app.add_flag("--json", as_json, "machine-readable JSON on stdout");
    app.add_option("--degree-cap", degree_cap, "cap for automatic nilpotency detection");

    auto add_file_sub = [&](const char* name, const char* desc, bool with_oracle) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("file", file, "problem file")->required();
        if (with_oracle)
            sub->add_flag("--oracle-check", oracle_check,
                          "cross-check against the linear-algebra oracle");
        return sub;
    };

    CLI::App* sub_algebra = add_file_sub("algebra", "build the algebra and report its basis", false);
    CLI::App* sub_stdbasis =
        add_file_sub("stdbasis", "Buchberger-style standard basis", true);
    CLI::App* sub_f5 = add_file_sub("f5", "signature-based (F5) standard basis", true);
    CLI::App* sub_loewy = add_file_sub("loewy", "Loewy layers of the submodule", true);
    CLI::App* sub_mingens = add_file_sub("mingens", "minimal generating set", true);
    CLI::App* sub_oracle = add_file_sub("oracle", "linear-algebra ground truth", false);
    CLI::App* sub_bench =
        app.add_subcommand("bench", "random-instance comparison of stdbasis vs f5");
    sub_bench->add_option("--seed", seed, "instance generator seed");
    sub_bench->add_option("--count", bench_count, "number of instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ErrorClass::Usage);
    }

    try {
        if (sub_algebra->parsed()) return cmd_algebra(file, degree_cap, as_json);
        if (sub_stdbasis->parsed()) return cmd_stdbasis(file, degree_cap, as_json, oracle_check);
        if (sub_f5->parsed()) return cmd_f5(file, degree_cap, as_json, oracle_check);
        if (sub_loewy->parsed()) return cmd_loewy(file, degree_cap, as_json, oracle_check);
        if (sub_mingens->parsed()) return cmd_mingens(file, degree_cap, as_json, oracle_check);
        if (sub_oracle->parsed()) return cmd_oracle(file, degree_cap, as_json);
        if (sub_bench->parsed()) return cmd_bench(seed, bench_count, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.cls());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ErrorClass::Computation);
    }
    return static_cast<int>(ErrorClass::Usage);
}
