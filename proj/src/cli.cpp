#include "chevalley/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "chevalley/table_io.hpp"

namespace chevalley::cli {

namespace {

using nlohmann::ordered_json;

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
};

bool use_color() {
    const char* v = std::getenv("CHEVALLEY_COLOR");
    if (v && std::string(v) == "never") return false;
    return isatty(1);
}

std::string pass_fail(bool ok) {
    if (!use_color()) return ok ? "PASS" : "FAIL";
    return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

// Shared lazily-built algebra state; every command needs the same objects.
struct Engine {
    RootSystem rs = RootSystem::build_f4();
    ExtraspecialChoice choice = find_extraspecial(rs);
    ConstantTable table = solve_constants(rs, choice);
};

const Engine& engine() {
    static Engine e;
    return e;
}

std::vector<int> signed_ordinals() {
    std::vector<int> out;
    for (int k = -24; k <= -1; ++k) out.push_back(k);
    for (int k = 1; k <= 24; ++k) out.push_back(k);
    return out;
}

std::string csv_matrix(const std::vector<int>& row_labels, const std::vector<int>& col_labels,
                       const std::function<std::string(int, int)>& cell) {
    std::ostringstream out;
    for (int c : col_labels) out << ',' << c;
    out << '\n';
    for (int r : row_labels) {
        out << r;
        for (int c : col_labels) out << ',' << cell(r, c);
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------- roots ----

int cmd_roots(const std::string& format, const Output& out) {
    const auto& rs = engine().rs;
    if (format == "csv" || format == "plain") {
        std::ostringstream os;
        if (format == "csv") os << "ordinal,quadruple,euclid,height,norm2\n";
        for (int k = 1; k <= 24; ++k) {
            const Root& r = rs.root(k);
            if (format == "csv")
                os << k << ',' << quadruple(r) << ',' << euclid_form(r) << ',' << r.height()
                   << ',' << inner(r, r).str() << '\n';
            else
                os << k << "\t" << quadruple(r) << "\t" << sum_form(r) << "\t" << euclid_form(r)
                   << "\tht=" << r.height() << "\t(r,r)=" << inner(r, r).str() << '\n';
        }
        out.write(os.str());
        return 0;
    }
    ordered_json j;
    j["roots"] = ordered_json::array();
    for (int k = 1; k <= 24; ++k) {
        const Root& r = rs.root(k);
        ordered_json jr;
        jr["ordinal"] = k;
        jr["quadruple"] = quadruple(r);
        jr["sum"] = sum_form(r);
        jr["coeffs"] = r.coeffs;
        jr["euclid"] = {r.euclid[0].str(), r.euclid[1].str(), r.euclid[2].str(),
                        r.euclid[3].str()};
        jr["height"] = r.height();
        jr["norm2"] = inner(r, r).as_integer();
        j["roots"].push_back(jr);
    }
    out.write(j.dump(2));
    return 0;
}

// ------------------------------------------------------------ constants ----

int cmd_constants(bool symbolic, const std::string& signs, const std::string& format,
                  const Output& out) {
    const auto& e = engine();
    SignAssignment assignment;
    if (!symbolic) assignment = parse_assignment_spec(signs);

    auto cell_text = [&](int r, int s) -> std::string {
        if (r == 0 || s == 0 || !e.table.is_pair(r, s)) return "";
        if (symbolic) return e.table.entry(r, s).str();
        return std::to_string(e.table.entry(r, s).evaluate(assignment).as_integer());
    };

    if (format == "csv" || format == "plain") {
        auto labels = signed_ordinals();
        out.write(csv_matrix(labels, labels, cell_text));
        return 0;
    }
    ordered_json j;
    j["symbolic"] = symbolic;
    if (!symbolic) j["signs"] = signs;
    ordered_json entries = ordered_json::object();
    for (const auto& [r, s] : e.table.pairs()) {
        std::string key = std::to_string(r) + "," + std::to_string(s);
        if (symbolic)
            entries[key] = e.table.entry(r, s).str();
        else
            entries[key] = e.table.entry(r, s).evaluate(assignment).as_integer();
    }
    j["entries"] = entries;
    out.write(j.dump(2));
    return 0;
}

// ------------------------------------------------------------- formulas ----

int cmd_formulas(bool symbolic, const std::string& signs, const std::string& section,
                 const std::string& format, const Output& out) {
    const auto& e = engine();
    SignAssignment assignment;
    if (!symbolic) assignment = parse_assignment_spec(signs);
    FormulaCatalog cat = formula_catalog(e.table);

    std::vector<std::pair<std::string, const std::vector<CommutatorFormula>*>> sections;
    if (section == "positive" || section == "all") sections.push_back({"positive", &cat.positive});
    if (section == "negative" || section == "all") sections.push_back({"negative", &cat.negative});
    if (section == "mixed" || section == "all") sections.push_back({"mixed", &cat.mixed});

    if (format == "plain") {
        std::ostringstream os;
        for (const auto& [name, list] : sections) {
            os << "# " << name << " (" << list->size() << " formulas)\n";
            for (const auto& f : *list)
                os << (symbolic ? formula_line(f) : formula_line(f, assignment)) << '\n';
        }
        out.write(os.str());
        return 0;
    }
    ordered_json j;
    j["symbolic"] = symbolic;
    for (const auto& [name, list] : sections) {
        ordered_json arr = ordered_json::array();
        for (const auto& f : *list) {
            ordered_json jf;
            jf["s"] = e.rs.ordinal(f.s);
            jf["r"] = e.rs.ordinal(f.r);
            ordered_json terms = ordered_json::array();
            for (const auto& t : f.terms) {
                ordered_json jt;
                jt["i"] = t.i;
                jt["j"] = t.j;
                jt["root"] = e.rs.ordinal(t.root);
                if (symbolic)
                    jt["coeff"] = t.coeff.str();
                else
                    jt["coeff"] = t.coeff.evaluate(assignment).as_integer();
                terms.push_back(jt);
            }
            jf["terms"] = terms;
            arr.push_back(jf);
        }
        j[name] = arr;
    }
    out.write(j.dump(2));
    return 0;
}

// ---------------------------------------------------------------- graph ----

int cmd_graph(const std::string& side, const std::string& delta_letters, const std::string& what,
              bool symbolic, const std::string& signs, const std::string& format,
              const Output& out) {
    const auto& e = engine();
    int sign = side == "pos" ? +1 : -1;
    auto delta = parse_delta(e.rs, delta_letters);
    RootGraph g = build_graph(e.rs, e.table, sign, delta);
    SignAssignment assignment;
    if (!symbolic) assignment = parse_assignment_spec(signs);

    std::vector<int> labels;
    for (int k = 1; k <= 24; ++k) labels.push_back(sign * k);

    if (format == "dot") {
        std::ostringstream os;
        os << "digraph G {\n";
        for (int l : labels) os << "  \"" << l << "\";\n";
        for (const auto& edge : g.edges) {
            std::string w = symbolic ? edge.weight.str()
                                     : edge.weight.evaluate(assignment).str();
            os << "  \"" << edge.s_ord << "\" -> \"" << edge.r_ord << "\" [label=\""
               << edge.label << ", " << w << "\"];\n";
        }
        os << "}\n";
        out.write(os.str());
        return 0;
    }

    auto cell = [&](int r, int c) -> std::string {
        int si = std::abs(r) - 1, ri = std::abs(c) - 1;
        if (what == "adjacency") return std::to_string(g.adjacency[si][ri]);
        if (what == "paths")  // diagonal prints 0: a path has at least one edge
            return std::to_string(r == c ? 0 : path_count(g, e.rs.root(r), e.rs.root(c)));
        const SignMonomial& wgt = g.weights[si][ri];
        if (symbolic) return wgt.is_zero() ? "0" : wgt.str();
        return wgt.evaluate(assignment).str();
    };
    if (what == "edges" || format == "json") {
        ordered_json j;
        j["side"] = side;
        j["delta"] = delta_letters;
        j["what"] = what;
        if (what == "edges") {
            ordered_json arr = ordered_json::array();
            for (const auto& edge : g.edges) {
                ordered_json je;
                je["from"] = edge.s_ord;
                je["to"] = edge.r_ord;
                je["label"] = std::string(1, edge.label);
                if (symbolic)
                    je["weight"] = edge.weight.str();
                else
                    je["weight"] = edge.weight.evaluate(assignment).as_integer();
                arr.push_back(je);
            }
            j["edges"] = arr;
        } else {
            ordered_json rows = ordered_json::array();
            for (int r : labels) {
                ordered_json row = ordered_json::array();
                for (int c : labels) row.push_back(cell(r, c));
                rows.push_back(row);
            }
            j["labels"] = labels;
            j["rows"] = rows;
        }
        out.write(j.dump(2));
        return 0;
    }
    out.write(csv_matrix(labels, labels, cell));
    return 0;
}

// -------------------------------------------------------------------- k ----

int cmd_k(const std::string& side, const std::string& delta_letters, const std::string& signs,
          const std::string& format, const Output& out) {
    const auto& e = engine();
    int sign = side == "pos" ? +1 : -1;
    auto delta = parse_delta(e.rs, delta_letters);
    SignAssignment assignment = parse_assignment_spec(signs);
    RootGraph g = build_graph(e.rs, e.table, sign, delta);
    KTable kt = k_table(e.rs, g, assignment);

    std::vector<int> labels;
    for (int k = 1; k <= 24; ++k) labels.push_back(sign * k);
    auto cell = [&](int r, int s) {
        return std::to_string(kt.values[std::abs(r) - 1][std::abs(s) - 1]);
    };
    if (format == "json") {
        ordered_json j;
        j["side"] = side;
        j["delta"] = delta_letters;
        j["labels"] = labels;
        ordered_json rows = ordered_json::array();
        for (int r : labels) {
            ordered_json row = ordered_json::array();
            for (int s : labels) row.push_back(kt.values[std::abs(r) - 1][std::abs(s) - 1]);
            rows.push_back(row);
        }
        j["rows"] = rows;
        out.write(j.dump(2));
        return 0;
    }
    out.write(csv_matrix(labels, labels, cell));
    return 0;
}

// -------------------------------------------------------------- collect ----

int cmd_collect(int m, int w, const std::string& delta_letters, const std::string& signs,
                const std::string& format, const Output& out) {
    const auto& e = engine();
    auto delta = parse_delta(e.rs, delta_letters);
    SignAssignment assignment = parse_assignment_spec(signs);
    IntConstantTable int_table = specialize(e.table, assignment);

    std::vector<int> base;
    for (int k = 1; k <= 24; ++k)
        if (e.rs.root(k).height() == m) base.push_back(k);
    int l = static_cast<int>(base.size());
    auto var_name = [](int v) { return "t" + std::to_string(v + 1); };

    Collector collector(e.rs, int_table);
    std::vector<GroupWord::Factor> bf, af;
    for (int j = 0; j < l; ++j) bf.push_back({base[j], TPolynomial::variable(l, j)});
    std::vector<Root> ds = delta;
    std::sort(ds.begin(), ds.end(), order_less);
    for (const Root& q : ds) af.push_back({e.rs.ordinal(q), TPolynomial::constant(l, 1)});
    GroupWord word = collector.word(std::move(bf));
    GroupWord a = collector.word(std::move(af));
    for (int step = 0; step < w; ++step) word = collector.commutator(word, a);

    if (format == "json") {
        ordered_json j;
        j["m"] = m;
        j["w"] = w;
        j["delta"] = delta_letters;
        ordered_json vars = ordered_json::array();
        for (int k : base) vars.push_back(k);
        j["base_roots"] = vars;
        ordered_json arr = ordered_json::array();
        for (const auto& f : word.factors) {
            ordered_json jf;
            jf["root"] = f.root_ord;
            jf["arg"] = f.arg.str(var_name);
            arr.push_back(jf);
        }
        j["factors"] = arr;
        out.write(j.dump(2));
        return 0;
    }
    std::ostringstream os;
    os << "[B,_" << w << "A] with B = ";
    for (int j = 0; j < l; ++j) os << "x[" << base[j] << "](t" << j + 1 << ")";
    os << ", A = ";
    for (const Root& q : ds) os << "x[" << e.rs.ordinal(q) << "](1)";
    os << "\n" << collector.render(word, var_name) << "\n";
    out.write(os.str());
    return 0;
}

// --------------------------------------------------------------- verify ----

struct VerifyOptions {
    bool relations = false, jacobi = false, ktables = false, theorem5 = false, theorem6 = false;
    std::string signs = "all-plus";
    int random = 0;
    uint64_t seed = 20240001;
    int jobs = 0;
};

SignAssignment random_assignment(std::mt19937_64& rng) {
    SignAssignment a;
    for (int id = 0; id < SignSymbol::count; ++id)
        a.set(SignSymbol::from_id(id), (rng() & 1) ? 1 : -1);
    return a;
}

int cmd_verify(VerifyOptions opt, const Output& out) {
    const auto& e = engine();
    if (opt.jobs <= 0) opt.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::ostringstream os;
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        os << pass_fail(ok) << " " << name;
        if (!detail.empty()) os << " (" << detail << ")";
        os << "\n";
        all_ok &= ok;
    };

    std::vector<std::pair<std::string, SignAssignment>> assignments;
    assignments.push_back({opt.signs, parse_assignment_spec(opt.signs)});
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.random; ++i)
        assignments.push_back({"random#" + std::to_string(i + 1), random_assignment(rng)});

    if (opt.relations) {
        size_t bad = 0, quads = 0;
        for (const auto& [name, a] : assignments) {
            RelationReport r = verify_relations(specialize(e.table, a));
            bad += r.violations.size();
            quads = r.checked_iv;
        }
        report("relations i-iv", bad == 0,
               std::to_string(assignments.size()) + " assignments, " + std::to_string(quads) +
                   " quadruples each, " + std::to_string(bad) + " violations");
    }
    if (opt.jacobi) {
        bool ok = true;
        for (const auto& [name, a] : assignments)
            ok &= jacobi_oracle(e.rs, specialize(e.table, a), opt.jobs);
        report("jacobi identity", ok, std::to_string(assignments.size()) + " assignments");
    }
    if (opt.ktables) {
        bool ok = true;
        size_t checked = 0;
        for (const auto& [dname, dl] : {std::pair<std::string, std::string>{"a,b,c,d", "a,b,c,d"},
                                        {"b,c,d", "b,c,d"}}) {
            auto delta = parse_delta(e.rs, dl);
            for (int sign : {+1, -1}) {
                RootGraph g = build_graph(e.rs, e.table, sign, delta);
                for (const auto& [name, a] : assignments) {
                    KTable kt = k_table(e.rs, g, a);
                    for (int r = 1; r <= 24; ++r)
                        for (int s = 1; s <= 24; ++s) {
                            long long brute = k_number_bruteforce(
                                e.rs, e.table, a, delta, e.rs.root(sign * r), e.rs.root(sign * s));
                            ok &= kt.values[r - 1][s - 1] == brute;
                            ++checked;
                        }
                }
            }
        }
        report("k matrix powers vs brute force", ok, std::to_string(checked) + " cells");
    }
    if (opt.theorem5) {
        bool ok = true;
        for (const auto& [dname, dl] : {std::pair<std::string, std::string>{"a,b,c,d", "a,b,c,d"},
                                        {"b,c,d", "b,c,d"}}) {
            auto delta = parse_delta(e.rs, dl);
            RootGraph gp = build_graph(e.rs, e.table, +1, delta);
            RootGraph gn = build_graph(e.rs, e.table, -1, delta);
            for (const auto& [name, a] : assignments)
                ok &= theorem5_check(e.rs, k_table(e.rs, gp, a), k_table(e.rs, gn, a)).ok();
        }
        report("theorem 5 sign-length identity", ok,
               std::to_string(assignments.size()) + " assignments x 2 deltas");
    }
    if (opt.theorem6) {
        bool ok = true;
        for (const auto& [name, a] : assignments) {
            IntConstantTable t = specialize(e.table, a);
            for (const std::string& dl : {std::string("a,b,c,d"), std::string("b,c,d")}) {
                auto delta = parse_delta(e.rs, dl);
                for (int w = 1; w <= 10; ++w)
                    ok &= theorem6_check(e.rs, t, delta, 1, w).ok();
            }
        }
        report("theorem 6 collection vs K tables", ok,
               "m=1, w=1..10, 2 deltas, " + std::to_string(assignments.size()) + " assignments");
    }
    out.write(os.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact tables for the F4 root system: structure constants, commutator "
                 "formulas, root-graph path and K numbers, and collection checks"};
    app.require_subcommand(1);

    std::string format = "plain", output_path;
    auto add_io = [&](CLI::App* cmd, const std::string& formats) {
        cmd->add_option("--format", format, "output format: " + formats)
            ->default_val("plain");
        cmd->add_option("--output,-o", output_path, "write to file instead of stdout");
    };

    auto* roots = app.add_subcommand("roots", "the 24 positive roots with table data");
    add_io(roots, "plain|csv|json");

    bool symbolic = false;
    std::string signs = "all-plus";
    auto* constants = app.add_subcommand("constants", "structure constant table");
    constants->add_flag("--symbolic", symbolic, "keep free signs symbolic");
    constants->add_option("--signs", signs, "all-plus or a JSON assignment file");
    add_io(constants, "plain|csv|json");

    std::string section = "all";
    auto* formulas = app.add_subcommand("formulas", "Chevalley commutator formulas");
    formulas->add_flag("--symbolic", symbolic, "keep free signs symbolic");
    formulas->add_option("--signs", signs, "all-plus or a JSON assignment file");
    formulas->add_option("--section", section, "positive|negative|mixed|all")
        ->check(CLI::IsMember({"positive", "negative", "mixed", "all"}));
    add_io(formulas, "plain|json");

    std::string side = "neg", delta_letters = "a,b,c,d", what = "adjacency";
    auto* graph = app.add_subcommand("graph", "root graph and its matrices");
    graph->add_option("--side", side, "pos|neg")->check(CLI::IsMember({"pos", "neg"}));
    graph->add_option("--delta", delta_letters, "subset of a,b,c,d");
    graph->add_option("--what", what, "adjacency|weights|paths|edges")
        ->check(CLI::IsMember({"adjacency", "weights", "paths", "edges"}));
    graph->add_flag("--symbolic", symbolic, "symbolic weights");
    graph->add_option("--signs", signs, "all-plus or a JSON assignment file");
    add_io(graph, "csv|json|dot");

    auto* k = app.add_subcommand("k", "K number table from weight-matrix powers");
    k->add_option("--side", side, "pos|neg")->check(CLI::IsMember({"pos", "neg"}));
    k->add_option("--delta", delta_letters, "subset of a,b,c,d");
    k->add_option("--signs", signs, "all-plus or a JSON assignment file");
    add_io(k, "csv|json");

    int m = 1, w = 1;
    auto* collect = app.add_subcommand("collect", "iterated commutator [B,_wA] in normal form");
    collect->add_option("--m", m, "height of the seed roots")->check(CLI::Range(1, 11));
    collect->add_option("--w", w, "commutator depth")->check(CLI::Range(1, 10))->required();
    collect->add_option("--delta", delta_letters, "subset of a,b,c,d");
    collect->add_option("--signs", signs, "all-plus or a JSON assignment file");
    add_io(collect, "plain|json");

    VerifyOptions vo;
    bool verify_all = false;
    auto* verify = app.add_subcommand("verify", "re-check the identities behind every table");
    verify->add_flag("--all", verify_all, "run every check");
    verify->add_flag("--relations", vo.relations, "relations (i)-(iv)");
    verify->add_flag("--jacobi", vo.jacobi, "Jacobi identity on the Chevalley basis");
    verify->add_flag("--ktables", vo.ktables, "matrix powers vs brute-force K numbers");
    verify->add_flag("--theorem5", vo.theorem5, "positive/negative K symmetry");
    verify->add_flag("--theorem6", vo.theorem6, "collection vs K tables");
    verify->add_option("--signs", vo.signs, "base assignment (all-plus or JSON file)");
    verify->add_option("--random", vo.random, "extra random assignments");
    verify->add_option("--seed", vo.seed, "seed for random assignments");
    verify->add_option("--jobs", vo.jobs, "worker threads (default: all cores)");
    verify->add_option("--output,-o", output_path, "write to file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("chevalley");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    Output out{output_path};
    try {
        if (roots->parsed()) return cmd_roots(format, out);
        if (constants->parsed()) return cmd_constants(symbolic, signs, format, out);
        if (formulas->parsed()) return cmd_formulas(symbolic, signs, section, format, out);
        if (graph->parsed())
            return cmd_graph(side, delta_letters, what, symbolic, signs, format, out);
        if (k->parsed()) return cmd_k(side, delta_letters, signs, format, out);
        if (collect->parsed()) return cmd_collect(m, w, delta_letters, signs, format, out);
        if (verify->parsed()) {
            if (verify_all)
                vo.relations = vo.jacobi = vo.ktables = vo.theorem5 = vo.theorem6 = true;
            if (!(vo.relations || vo.jacobi || vo.ktables || vo.theorem5 || vo.theorem6))
                vo.relations = vo.jacobi = vo.ktables = vo.theorem5 = vo.theorem6 = true;
            return cmd_verify(vo, out);
        }
    } catch (const MissingSymbolError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace chevalley::cli
