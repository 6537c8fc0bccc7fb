#include <iostream>

#include "CLI11.hpp"

#include "grw/io.hpp"

namespace {

using namespace grw;

Semantics parse_semantics(const std::string& s) {
    if (s == "dpo") return Semantics::DPO;
    if (s == "sqpo") return Semantics::SqPO;
    fail(Errc::ConfigInvalid, "semantics must be dpo or sqpo");
}

void emit(const io::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(Errc::ParseError, out_path + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

io::json wrap(io::json j, const char* kind) {
    j["kind"] = kind;
    j["format_version"] = io::kFormatVersion;
    return j;
}

int cmd_matches(const std::string& rule_path, const std::string& host_path,
                const std::string& semantics, const std::string& out_path) {
    RuleWC rule = io::load(rule_path).rule();
    Graph host = io::load(host_path).graph();
    Semantics sem = parse_semantics(semantics);
    auto ms = enumerate_matches(rule, host, sem);
    io::json arr = io::json::array();
    for (const Morphism& m : ms) arr.push_back(io::to_json(m, false));
    emit({{"count", ms.size()}, {"matches", arr}}, out_path);
    return 0;
}

int cmd_apply(const std::string& rule_path, const std::string& host_path,
              const std::string& semantics, int match_index, const std::string& out_path,
              const std::string& trace_path) {
    RuleWC rule = io::load(rule_path).rule();
    Graph host = io::load(host_path).graph();
    Semantics sem = parse_semantics(semantics);
    auto ms = enumerate_matches(rule, host, sem);
    if (ms.empty()) fail(Errc::NoAdmissibleMatch, "rule does not apply to the host");
    if (match_index < 0 || static_cast<std::size_t>(match_index) >= ms.size())
        fail(Errc::ConfigInvalid, "match index out of range (have " +
                                      std::to_string(ms.size()) + ")");
    RewriteStep step = apply(rule, host, ms[static_cast<std::size_t>(match_index)], sem);
    if (!trace_path.empty()) io::save(io::document_for(step), trace_path);
    if (!out_path.empty() && out_path.size() > 4 &&
        out_path.compare(out_path.size() - 4, 4, ".dot") == 0) {
        io::save(io::document_for(step.result), out_path);
    } else {
        emit(wrap(io::to_json(step.result), "graph"), out_path);
    }
    return 0;
}

int cmd_compose(const std::string& second_path, const std::string& first_path,
                const std::string& semantics, int overlap_index, bool strict,
                const std::string& out_path) {
    RuleWC second = io::load(second_path).rule();
    RuleWC first = io::load(first_path).rule();
    Semantics sem = parse_semantics(semantics);
    auto overlaps = enumerate_rule_overlaps(second, first);

    io::json composites = io::json::array();
    std::size_t begin = 0;
    std::size_t end = overlaps.size();
    if (overlap_index >= 0) {
        if (static_cast<std::size_t>(overlap_index) >= overlaps.size())
            fail(Errc::ConfigInvalid, "overlap index out of range (have " +
                                          std::to_string(overlaps.size()) + ")");
        begin = static_cast<std::size_t>(overlap_index);
        end = begin + 1;
    }
    std::size_t admissible = 0;
    for (std::size_t k = begin; k < end; ++k) {
        auto comp = compose(second, overlaps[k], first, sem);
        if (!comp) continue;
        ++admissible;
        io::json entry = io::to_json(*comp);
        entry["overlap_index"] = k;
        if (strict) {
            CorpusSpec probe{3, 3, {comp->input}};
            if (!condition_satisfiable_on_corpus(comp->cond, comp->composite_rule(), sem,
                                                 probe)) {
                entry["corpus_satisfiable"] = false;
                std::cerr << io::json{{"warning",
                                       {{"code", "CorpusUnsatisfiableCondition"},
                                        {"overlap_index", k}}}}
                                 .dump()
                          << "\n";
            }
        }
        composites.push_back(std::move(entry));
    }
    emit({{"overlaps", overlaps.size()}, {"admissible", admissible},
          {"composites", composites}},
         out_path);
    return 0;
}

int cmd_shift(const std::string& morphism_path, const std::string& cond_path,
              const std::string& out_path) {
    Morphism p = io::load(morphism_path).morphism();
    io::Document cd = io::load(cond_path);
    if (cd.condition()->root() != p.dom())
        fail(Errc::RootMismatch, "condition root differs from the morphism domain");
    ConditionPtr shifted = shift(p, cd.condition());
    io::json j = io::condition_document(shifted);
    emit(wrap(std::move(j), "condition"), out_path);
    return 0;
}

int cmd_trans(const std::string& rule_path, const std::string& cond_path,
              const std::string& out_path) {
    RuleWC rule = io::load(rule_path).rule();
    io::Document cd = io::load(cond_path);
    if (cd.condition()->root() != rule.rule.output)
        fail(Errc::RootMismatch, "condition root differs from the rule output");
    ConditionPtr moved = trans(rule.rule, cd.condition());
    emit(wrap(io::condition_document(moved), "condition"), out_path);
    return 0;
}

int cmd_simplify(const std::string& cond_path, const std::string& out_path) {
    io::Document cd = io::load(cond_path);
    emit(wrap(io::condition_document(simplify(cd.condition())), "condition"), out_path);
    return 0;
}

int cmd_check(std::uint64_t seed, int corpus_size, bool quick, const std::string& out_path) {
    SuiteConfig cfg = quick ? SuiteConfig::quick() : SuiteConfig{};
    cfg.seed = seed;
    if (corpus_size >= 0) {
        cfg.corpus.max_vertices = static_cast<std::size_t>(corpus_size);
        cfg.corpus.max_edges = static_cast<std::size_t>(corpus_size);
    }
    std::vector<LawReport> reports = run_suite(cfg, &std::cerr);
    std::ostringstream os;
    bool ok = true;
    for (const LawReport& rep : reports) {
        os << rep.to_json_line() << "\n";
        ok = ok && rep.passed();
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path);
        if (!out) fail(Errc::ParseError, out_path + ": cannot open for writing");
        out << os.str();
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DPO/SqPO rewriting over finite multigraphs"};
    app.require_subcommand(1);

    std::string rule_path, second_path, first_path, host_path, cond_path, morphism_path;
    std::string semantics = "dpo";
    std::string out_path, trace_path;
    int match_index = 0;
    int overlap_index = -1;
    std::uint64_t seed = 7;
    int corpus_size = -1;
    bool quick = false;
    bool strict_probe = false;

    auto* matches = app.add_subcommand("matches", "list admissible matches of a rule");
    matches->add_option("rule", rule_path)->required();
    matches->add_option("host", host_path)->required();
    matches->add_option("--semantics", semantics)->check(CLI::IsMember({"dpo", "sqpo"}));
    matches->add_option("-o,--out", out_path);

    auto* apply_cmd = app.add_subcommand("apply", "apply a rule at one admissible match");
    apply_cmd->add_option("rule", rule_path)->required();
    apply_cmd->add_option("host", host_path)->required();
    apply_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"dpo", "sqpo"}));
    apply_cmd->add_option("--match-index", match_index);
    apply_cmd->add_option("-o,--out", out_path);
    apply_cmd->add_option("--trace", trace_path);

    auto* compose_cmd =
        app.add_subcommand("compose", "compose two rules over their overlaps");
    compose_cmd->add_option("second", second_path)->required();
    compose_cmd->add_option("first", first_path)
        ->required();
    compose_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"dpo", "sqpo"}));
    compose_cmd->add_option("--overlap-index", overlap_index);
    compose_cmd->add_flag("--strict", strict_probe,
                          "warn when a composite condition is unsatisfiable on the corpus");
    compose_cmd->add_option("-o,--out", out_path);

    auto* shift_cmd = app.add_subcommand("shift", "shift a condition along a mono");
    shift_cmd->add_option("morphism", morphism_path)->required();
    shift_cmd->add_option("condition", cond_path)->required();
    shift_cmd->add_option("-o,--out", out_path);

    auto* trans_cmd = app.add_subcommand("trans", "transport a condition over a rule");
    trans_cmd->add_option("rule", rule_path)->required();
    trans_cmd->add_option("condition", cond_path)->required();
    trans_cmd->add_option("-o,--out", out_path);

    auto* simplify_cmd = app.add_subcommand("simplify", "normalize a condition");
    simplify_cmd->add_option("condition", cond_path)->required();
    simplify_cmd->add_option("-o,--out", out_path);

    auto* check_cmd = app.add_subcommand("check", "run the law suite");
    check_cmd->add_option("--seed", seed);
    check_cmd->add_option("--corpus-size", corpus_size);
    check_cmd->add_flag("--quick", quick);
    check_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (matches->parsed()) return cmd_matches(rule_path, host_path, semantics, out_path);
        if (apply_cmd->parsed())
            return cmd_apply(rule_path, host_path, semantics, match_index, out_path,
                             trace_path);
        if (compose_cmd->parsed())
            return cmd_compose(second_path, first_path, semantics, overlap_index,
                               strict_probe, out_path);
        if (shift_cmd->parsed()) return cmd_shift(morphism_path, cond_path, out_path);
        if (trans_cmd->parsed()) return cmd_trans(rule_path, cond_path, out_path);
        if (simplify_cmd->parsed()) return cmd_simplify(cond_path, out_path);
        if (check_cmd->parsed()) return cmd_check(seed, corpus_size, quick, out_path);
    } catch (const grw::Error& e) {
        io::json err = {{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":{\"code\":\"Internal\",\"message\":\"" << e.what()
                  << "\"}}\n";
        return 1;
    }
    return 2;
}
