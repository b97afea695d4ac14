// polyu command-line tool. All engine work goes through the shared-library C
// API (polyu.h); this file only parses arguments, applies configuration
// precedence and formats output.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyu.h"

namespace {

using nlohmann::json;

struct EngineError : std::runtime_error {
    polyu_status status;
    EngineError(polyu_status st, const std::string& what) : std::runtime_error(what), status(st) {}
};

void check(polyu_status status) {
    if (status != POLYU_OK) throw EngineError(status, polyu_last_error());
}

std::string take(char* s) {
    std::string out = s ? s : "";
    polyu_free_string(s);
    return out;
}

struct SumDeleter {
    void operator()(polyu_sum* p) const { polyu_sum_free(p); }
};
struct FormDeleter {
    void operator()(polyu_form* p) const { polyu_form_free(p); }
};
struct CatalogueDeleter {
    void operator()(polyu_catalogue* p) const { polyu_catalogue_free(p); }
};
using SumPtr = std::unique_ptr<polyu_sum, SumDeleter>;
using FormPtr = std::unique_ptr<polyu_form, FormDeleter>;
using CataloguePtr = std::unique_ptr<polyu_catalogue, CatalogueDeleter>;

SumPtr parse_sum(const std::string& text) {
    polyu_sum* raw = nullptr;
    check(polyu_sum_parse(text.c_str(), &raw));
    return SumPtr(raw);
}

FormPtr parse_form(const std::string& text) {
    polyu_form* raw = nullptr;
    check(polyu_form_parse(text.c_str(), &raw));
    return FormPtr(raw);
}

// 3x3 integer matrix in the row notation "5,0,0;0,4,-3;0,3,4".
std::array<int64_t, 9> parse_matrix(const std::string& text) {
    std::array<int64_t, 9> m{};
    std::size_t idx = 0, pos = 0;
    while (pos <= text.size() && idx < 9) {
        std::size_t next = text.find_first_of(",;", pos);
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        m[idx++] = std::stoll(tok);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (idx != 9) throw EngineError(POLYU_ERROR_INVALID_ARGUMENT, "matrix needs 9 entries, rows ';'-separated");
    return m;
}

struct RunConfig {
    int64_t bound = 100000;
    int threads = 0;  // auto
    std::string format = "text";
    std::string output;
    std::string fixtures;
};

std::optional<std::string> env(const char* name) {
    const char* v = std::getenv(name);
    if (v && *v) return std::string(v);
    return std::nullopt;
}

// Precedence: command-line flags > POLYU_* environment > config file > defaults.
RunConfig resolve_config(const CLI::App& app, const std::string& config_path,
                         const RunConfig& flag_values) {
    RunConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw EngineError(POLYU_ERROR_IO, "cannot open config file " + config_path);
        json j = json::parse(in);
        if (j.contains("bound")) cfg.bound = j["bound"].get<int64_t>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (j.contains("output")) cfg.output = j["output"].get<std::string>();
        if (j.contains("fixtures")) cfg.fixtures = j["fixtures"].get<std::string>();
    }
    if (auto v = env("POLYU_BOUND")) cfg.bound = std::stoll(*v);
    if (auto v = env("POLYU_THREADS")) cfg.threads = std::stoi(*v);
    if (auto v = env("POLYU_FORMAT")) cfg.format = *v;
    if (auto v = env("POLYU_OUTPUT")) cfg.output = *v;
    if (auto v = env("POLYU_FIXTURES")) cfg.fixtures = *v;
    if (app.count("--bound")) cfg.bound = flag_values.bound;
    if (app.count("--threads")) cfg.threads = flag_values.threads;
    if (app.count("--format")) cfg.format = flag_values.format;
    if (app.count("--output")) cfg.output = flag_values.output;
    if (app.count("--fixtures")) cfg.fixtures = flag_values.fixtures;
    if (cfg.bound < 61) throw EngineError(POLYU_ERROR_INVALID_ARGUMENT, "bound must be at least 61");
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
        throw EngineError(POLYU_ERROR_INVALID_ARGUMENT, "format must be text, json or csv");
    if (!cfg.fixtures.empty()) check(polyu_set_fixture_directory(cfg.fixtures.c_str()));
    return cfg;
}

void emit(const RunConfig& cfg, const std::string& text_out, const json& json_out,
          const std::string& csv_out = "") {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) throw EngineError(POLYU_ERROR_IO, "cannot open output file " + cfg.output);
        os = &file;
    }
    if (cfg.format == "json")
        *os << json_out.dump(2) << '\n';
    else if (cfg.format == "csv" && !csv_out.empty())
        *os << csv_out;
    else
        *os << text_out;
}

std::vector<int64_t> take_i64(int64_t* data, size_t count) {
    std::vector<int64_t> out(data, data + count);
    polyu_free_i64(data);
    return out;
}

int64_t arg_i64(const std::string& s) { return std::stoll(s); }

int cmd_check(const RunConfig& cfg, const std::string& sum_text, int64_t n) {
    SumPtr sum = parse_sum(sum_text);
    char* witness_raw = nullptr;
    check(polyu_sum_witness(sum.get(), n, &witness_raw));
    json witness = json::parse(take(witness_raw));
    bool represented = !witness.is_null();
    std::string text;
    if (represented) {
        std::string xs, ys;
        for (const auto& x : witness["x"]) xs += (xs.empty() ? "" : ",") + x.dump();
        for (const auto& y : witness["y"]) ys += (ys.empty() ? "" : ",") + y.dump();
        text = "represented\nwitness: x=(" + xs + ") y=(" + ys + ")\n";
    } else {
        text = "not represented\n";
    }
    emit(cfg, text, json{{"sum", sum_text}, {"n", n}, {"represented", represented}, {"witness", witness}});
    return 0;
}

int cmd_truant(const RunConfig& cfg, const std::string& sum_text) {
    SumPtr sum = parse_sum(sum_text);
    int verdict = 0, criterion = 0;
    int64_t truant = 0;
    check(polyu_sum_truant(sum.get(), cfg.bound, &verdict, &truant, &criterion));
    std::string text = verdict ? "universal (criterion passed, searched to " +
                                     std::to_string(cfg.bound) + ")\n"
                               : "truant " + std::to_string(truant) + "\n";
    json j = {{"sum", sum_text},
              {"verdict", verdict ? "universal" : "non_universal"},
              {"truant", verdict ? json(nullptr) : json(truant)},
              {"searched_bound", cfg.bound},
              {"criterion_passed", criterion != 0}};
    emit(cfg, text, j);
    return 0;
}

int cmd_universal(const RunConfig& cfg, const std::string& sum_text) {
    SumPtr sum = parse_sum(sum_text);
    int universal = 0;
    check(polyu_sum_criterion_universal(sum.get(), &universal));
    emit(cfg, universal ? "universal\n" : "not universal\n",
         json{{"sum", sum_text}, {"universal", universal != 0}});
    return 0;
}

int cmd_exceptional(const RunConfig& cfg, const std::string& sum_text) {
    SumPtr sum = parse_sum(sum_text);
    int64_t* values = nullptr;
    size_t count = 0;
    check(polyu_sum_exceptional_set(sum.get(), cfg.bound, &values, &count));
    auto set = take_i64(values, count);
    std::string text;
    std::string csv = "n\n";
    for (size_t i = 0; i < set.size(); ++i) {
        text += (i ? " " : "") + std::to_string(set[i]);
        csv += std::to_string(set[i]) + "\n";
    }
    if (set.empty()) text = "(none)";
    text += "\n";
    emit(cfg, text, json{{"sum", sum_text}, {"bound", cfg.bound}, {"exceptional", set}}, csv);
    return 0;
}

CataloguePtr run_catalogue(const RunConfig& cfg) {
    polyu_catalogue* raw = nullptr;
    check(polyu_catalogue_run(cfg.bound, cfg.threads, &raw));
    return CataloguePtr(raw);
}

int arity_listing(const RunConfig& cfg, const CataloguePtr& cat, int arity) {
    char* raw = nullptr;
    check(polyu_catalogue_run_json(cat.get(), arity, &raw));
    json run = json::parse(take(raw));
    char* csv_raw = nullptr;
    check(polyu_catalogue_run_csv(cat.get(), arity, &csv_raw));
    std::string csv = take(csv_raw);
    std::string text;
    for (const auto& e : run["entries"]) {
        if (e["report"]["verdict"] == "universal" && e["proper"] == true)
            text += e["notation"].get<std::string>() + "\n";
    }
    text += std::to_string(arity) + ":" + std::to_string(run["proper_universal"].get<int64_t>()) + "\n";
    emit(cfg, text, run, csv);
    return 0;
}

int cmd_escalate(const RunConfig& cfg, int arity) {
    CataloguePtr cat = run_catalogue(cfg);
    char* raw = nullptr;
    check(polyu_catalogue_run_json(cat.get(), arity, &raw));
    json run = json::parse(take(raw));
    char* csv_raw = nullptr;
    check(polyu_catalogue_run_csv(cat.get(), arity, &csv_raw));
    std::string csv = take(csv_raw);
    std::string text;
    for (const auto& e : run["entries"]) {
        text += e["notation"].get<std::string>();
        if (e["report"]["verdict"] == "universal")
            text += " universal";
        else
            text += " truant " + e["report"]["truant"].dump();
        text += "\n";
    }
    text += "candidates: " + std::to_string(run["entries"].size()) + "\n";
    emit(cfg, text, run, csv);
    return 0;
}

int cmd_catalogue(const RunConfig& cfg, int arity, const std::string& out_dir) {
    CataloguePtr cat = run_catalogue(cfg);
    char* summary_raw = nullptr;
    check(polyu_catalogue_summary(cat.get(), &summary_raw));
    std::string summary = take(summary_raw);

    if (!out_dir.empty()) {
        int64_t* arities = nullptr;
        size_t count = 0;
        check(polyu_catalogue_arities(cat.get(), &arities, &count));
        auto list = take_i64(arities, count);
        for (int64_t a : list) {
            char* csv_raw = nullptr;
            check(polyu_catalogue_run_csv(cat.get(), static_cast<int>(a), &csv_raw));
            std::ofstream csv_file(out_dir + "/arity_" + std::to_string(a) + ".csv");
            csv_file << take(csv_raw);
            char* json_raw = nullptr;
            check(polyu_catalogue_run_json(cat.get(), static_cast<int>(a), &json_raw));
            std::ofstream json_file(out_dir + "/arity_" + std::to_string(a) + ".json");
            json_file << take(json_raw) << '\n';
        }
        char* cat_raw = nullptr;
        check(polyu_catalogue_json(cat.get(), &cat_raw));
        std::ofstream cat_file(out_dir + "/catalogue.json");
        cat_file << take(cat_raw) << '\n';
    }

    if (arity > 0) arity_listing(cfg, cat, arity);

    // The published counts are the regression contract.
    const std::pair<int, int64_t> expected[] = {{3, 6}, {4, 547}, {5, 707}, {6, 11}};
    bool counts_ok = true;
    std::string diff;
    for (auto [a, want] : expected) {
        int64_t proper = 0;
        check(polyu_catalogue_counts(cat.get(), a, nullptr, nullptr, &proper));
        if (proper != want) {
            counts_ok = false;
            diff += "arity " + std::to_string(a) + ": expected " + std::to_string(want) + ", got " +
                    std::to_string(proper) + "\n";
        }
    }
    int64_t total = 0;
    check(polyu_catalogue_total(cat.get(), &total));
    if (total != 1271) {
        counts_ok = false;
        diff += "total: expected 1271, got " + std::to_string(total) + "\n";
    }
    std::cout << summary << '\n';
    if (!counts_ok) {
        std::cerr << "catalogue count mismatch:\n" << diff;
        return 1;
    }
    return 0;
}

int cmd_forms_count(const RunConfig& cfg, const std::string& form_text, int64_t n) {
    FormPtr form = parse_form(form_text);
    int64_t count = 0;
    check(polyu_form_rep_count(form.get(), n, &count));
    emit(cfg, std::to_string(count) + "\n", json{{"form", form_text}, {"n", n}, {"count", count}});
    return 0;
}

int cmd_forms_represented(const RunConfig& cfg, const std::string& form_text, bool complement) {
    FormPtr form = parse_form(form_text);
    int64_t* values = nullptr;
    size_t count = 0;
    check(polyu_form_represented_set(form.get(), cfg.bound, &values, &count));
    auto set = take_i64(values, count);
    if (complement) {
        std::vector<int64_t> comp;
        size_t i = 0;
        for (int64_t n = 0; n <= cfg.bound; ++n) {
            if (i < set.size() && set[i] == n)
                ++i;
            else
                comp.push_back(n);
        }
        set = std::move(comp);
    }
    std::string text, csv = "n\n";
    for (size_t i = 0; i < set.size(); ++i) {
        text += (i ? " " : "") + std::to_string(set[i]);
        csv += std::to_string(set[i]) + "\n";
    }
    if (set.empty()) text = "(none)";
    text += "\n";
    emit(cfg, text,
         json{{"form", form_text}, {"bound", cfg.bound}, {complement ? "complement" : "represented", set}},
         csv);
    return 0;
}

int cmd_forms_classes(const RunConfig& cfg, const std::string& g_text, int64_t d, int64_t a) {
    FormPtr g = parse_form(g_text);
    char* raw = nullptr;
    check(polyu_congruence_classes(g.get(), d, a, &raw));
    json classes = json::parse(take(raw));
    std::string text;
    for (const auto& v : classes) text += "(" + v[0].dump() + "," + v[1].dump() + "," + v[2].dump() + ")\n";
    text += "count: " + std::to_string(classes.size()) + "\n";
    emit(cfg, text, json{{"g", g_text}, {"d", d}, {"a", a}, {"classes", classes}});
    return 0;
}

int cmd_forms_transforms(const RunConfig& cfg, const std::string& f_text, const std::string& g_text,
                         int64_t d) {
    FormPtr f = parse_form(f_text);
    FormPtr g = parse_form(g_text);
    char* raw = nullptr;
    check(polyu_transformation_set(f.get(), g.get(), d, &raw));
    json ts = json::parse(take(raw));
    std::string text;
    for (const auto& T : ts) text += T.dump() + "\n";
    text += "count: " + std::to_string(ts.size()) + "\n";
    emit(cfg, text, json{{"f", f_text}, {"g", g_text}, {"d", d}, {"transformations", ts}});
    return 0;
}

int cmd_forms_bad(const RunConfig& cfg, const std::string& f_text, const std::string& g_text, int64_t d,
                  int64_t a) {
    FormPtr f = parse_form(f_text);
    FormPtr g = parse_form(g_text);
    char* raw = nullptr;
    check(polyu_good_partition(f.get(), g.get(), d, a, &raw));
    json cert = json::parse(take(raw));
    std::string text;
    for (const auto& v : cert["bad_pairs"])
        text += "+/-(" + v[0].dump() + "," + v[1].dump() + "," + v[2].dump() + ")\n";
    if (cert["bad_pairs"].empty()) text = "(empty)\n";
    emit(cfg, text, cert);
    return 0;
}

int cmd_forms_prec(const RunConfig& cfg, const std::string& f_text, const std::string& g_text, int64_t d,
                   int64_t a, int64_t spot_bound) {
    FormPtr f = parse_form(f_text);
    FormPtr g = parse_form(g_text);
    int ok = 0;
    check(polyu_prec_check(f.get(), g.get(), d, a, spot_bound, &ok));
    emit(cfg, ok ? "true\n" : "false\n",
         json{{"f", f_text}, {"g", g_text}, {"d", d}, {"a", a}, {"prec", ok != 0}});
    return ok ? 0 : 1;
}

int cmd_forms_pme(const RunConfig& cfg, const std::string& f_text, const std::string& g_text, int64_t d,
                  int64_t a, const std::string& t_text, int64_t conclusion_bound) {
    FormPtr f = parse_form(f_text);
    FormPtr g = parse_form(g_text);
    auto T = parse_matrix(t_text);
    char* raw = nullptr;
    check(polyu_pme_check(f.get(), g.get(), d, a, T.data(), &raw));
    json pme = json::parse(take(raw));
    bool verdict = pme["verdict"].get<bool>();
    std::string text = std::string("verdict: ") + (verdict ? "true" : "false") + "\n";
    text += "conditions: " + pme["conditions"].dump() + "\n";
    text += "eigenvectors: " + pme["eigenvectors"].dump() + "\n";
    bool conclusion_ok = true;
    if (conclusion_bound > 0) {
        int ok = 0;
        int64_t counterexample = 0;
        check(polyu_pme_conclusion_check(f.get(), g.get(), d, a, T.data(), conclusion_bound, &ok,
                                         &counterexample));
        conclusion_ok = ok != 0;
        pme["conclusion_bound"] = conclusion_bound;
        pme["conclusion_holds"] = conclusion_ok;
        text += "conclusion to " + std::to_string(conclusion_bound) + ": " +
                (conclusion_ok ? "holds" : "fails at " + std::to_string(counterexample)) + "\n";
    }
    emit(cfg, text, pme);
    return verdict && conclusion_ok ? 0 : 1;
}

int cmd_forms_siegel(const RunConfig& cfg) {
    int ok = 0;
    int64_t first = 0;
    check(polyu_siegel_identity_check(cfg.bound, &ok, &first));
    std::string text = ok ? "identity holds to " + std::to_string(cfg.bound) + "\n"
                          : "identity fails at n = " + std::to_string(first) + "\n";
    emit(cfg, text,
         json{{"bound", cfg.bound}, {"holds", ok != 0}, {"first_failure", ok ? json(nullptr) : json(first)}});
    return ok ? 0 : 1;
}

int cmd_verify_tables(const RunConfig& cfg, const std::string& table) {
    std::vector<std::string> ids;
    if (!table.empty())
        ids.push_back(table);
    else
        ids = {"3.1", "4.1", "4.3", "5.1", "5.2", "eq3.1", "critical19"};
    bool all_ok = true;
    json all = json::array();
    std::string text;
    for (const auto& id : ids) {
        int passed = 0;
        char* raw = nullptr;
        check(polyu_verify_table(id.c_str(), cfg.bound, cfg.threads, &passed, &raw));
        json report = json::parse(take(raw));
        all.push_back(report);
        for (const auto& row : report["rows"]) {
            bool pass = row["pass"].get<bool>();
            text += std::string(pass ? "PASS" : "FAIL") + " [" + id + "] " +
                    row["label"].get<std::string>();
            if (!pass)
                text += " (expected " + row["expected"].get<std::string>() + ", got " +
                        row["actual"].get<std::string>() + ")";
            text += "\n";
        }
        text += "table " + id + ": " + (passed ? "ok" : "MISMATCH") + "\n";
        all_ok = all_ok && passed;
    }
    emit(cfg, text, all);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal mixed sums of generalized square and octagonal numbers"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    RunConfig flags;
    std::string config_path;
    app.add_option("--bound", flags.bound, "scan bound for universality checks (default 100000)");
    app.add_option("--threads", flags.threads, "worker threads, 0 = hardware");
    app.add_option("--format", flags.format, "text, json or csv");
    app.add_option("--output", flags.output, "write output to this file");
    app.add_option("--fixtures", flags.fixtures, "fixture data directory");
    app.add_option("--config", config_path, "JSON config file");

    std::string sum_text, form_text, g_text, t_text, table;
    int64_t n = 0, d = 1, a = 0, spot_bound = 2000, conclusion_bound = 0;
    int arity = 0;
    bool complement = false;
    std::string out_dir;

    auto* c_check = app.add_subcommand("check", "decide whether a sum represents n");
    c_check->add_option("sum", sum_text)->required();
    c_check->add_option("n", n)->required();

    auto* c_truant = app.add_subcommand("truant", "least non-represented positive integer");
    c_truant->add_option("sum", sum_text)->required();

    auto* c_universal = app.add_subcommand("universal", "19-integer universality criterion");
    c_universal->add_option("sum", sum_text)->required();

    auto* c_exceptional = app.add_subcommand("exceptional", "all non-represented n up to the bound");
    c_exceptional->add_option("sum", sum_text)->required();

    auto* c_escalate = app.add_subcommand("escalate", "candidates of one escalation stage");
    c_escalate->add_option("--arity", arity, "stage to print (1..6)")->required();

    auto* c_catalogue = app.add_subcommand("catalogue", "full classification run");
    c_catalogue->add_option("--arity", arity, "also list that stage's proper universal sums");
    c_catalogue->add_option("--out-dir", out_dir, "write per-arity CSV/JSON files here");

    auto* c_forms = app.add_subcommand("forms", "ternary quadratic form machinery");
    c_forms->require_subcommand(1);
    auto* f_count = c_forms->add_subcommand("count", "number of representations of n");
    f_count->add_option("form", form_text)->required();
    f_count->add_option("n", n)->required();
    auto* f_repr = c_forms->add_subcommand("represented", "represented set up to the bound");
    f_repr->add_option("form", form_text)->required();
    f_repr->add_flag("--complement", complement, "print the complement instead");
    auto* f_classes = c_forms->add_subcommand("classes", "residue classes with g(v) = a (mod d)");
    f_classes->add_option("g", g_text)->required();
    f_classes->add_option("d", d)->required();
    f_classes->add_option("a", a)->required();
    auto* f_trans = c_forms->add_subcommand("transforms", "integral T with T^t Mf T = d^2 Mg");
    f_trans->add_option("f", form_text)->required();
    f_trans->add_option("g", g_text)->required();
    f_trans->add_option("d", d)->required();
    auto* f_bad = c_forms->add_subcommand("bad", "residue classes not transported by any T");
    f_bad->add_option("f", form_text)->required();
    f_bad->add_option("g", g_text)->required();
    f_bad->add_option("d", d)->required();
    f_bad->add_option("a", a)->required();
    auto* f_prec = c_forms->add_subcommand("prec", "all residue classes transported");
    f_prec->add_option("f", form_text)->required();
    f_prec->add_option("g", g_text)->required();
    f_prec->add_option("d", d)->required();
    f_prec->add_option("a", a)->required();
    f_prec->add_option("--spot-bound", spot_bound, "verify the implied inclusion up to here");
    auto* f_pme = c_forms->add_subcommand("pme", "transport-matrix conditions and eigenvectors");
    f_pme->add_option("f", form_text)->required();
    f_pme->add_option("g", g_text)->required();
    f_pme->add_option("d", d)->required();
    f_pme->add_option("a", a)->required();
    f_pme->add_option("--t", t_text, "matrix rows, e.g. 5,0,0;0,4,-3;0,3,4")->required();
    f_pme->add_option("--conclusion-bound", conclusion_bound, "also verify the conclusion up to here");
    auto* f_siegel = c_forms->add_subcommand("siegel", "genus representation-count identity");
    (void)f_siegel;

    auto* c_verify = app.add_subcommand("verify-tables", "recompute the published tables");
    c_verify->add_option("--table", table, "verify one table (3.1, 4.1, 4.3, 5.1, 5.2, eq3.1, critical19)");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = resolve_config(app, config_path, flags);
        if (c_check->parsed()) return cmd_check(cfg, sum_text, n);
        if (c_truant->parsed()) return cmd_truant(cfg, sum_text);
        if (c_universal->parsed()) return cmd_universal(cfg, sum_text);
        if (c_exceptional->parsed()) return cmd_exceptional(cfg, sum_text);
        if (c_escalate->parsed()) return cmd_escalate(cfg, arity);
        if (c_catalogue->parsed()) return cmd_catalogue(cfg, arity, out_dir);
        if (c_forms->parsed()) {
            if (f_count->parsed()) return cmd_forms_count(cfg, form_text, n);
            if (f_repr->parsed()) return cmd_forms_represented(cfg, form_text, complement);
            if (f_classes->parsed()) return cmd_forms_classes(cfg, g_text, d, a);
            if (f_trans->parsed()) return cmd_forms_transforms(cfg, form_text, g_text, d);
            if (f_bad->parsed()) return cmd_forms_bad(cfg, form_text, g_text, d, a);
            if (f_prec->parsed()) return cmd_forms_prec(cfg, form_text, g_text, d, a, spot_bound);
            if (f_pme->parsed())
                return cmd_forms_pme(cfg, form_text, g_text, d, a, t_text, conclusion_bound);
            if (f_siegel->parsed()) return cmd_forms_siegel(cfg);
        }
        if (c_verify->parsed()) return cmd_verify_tables(cfg, table);
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.status == POLYU_ERROR_INVALID_ARGUMENT ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
