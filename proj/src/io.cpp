#include "grw/io.hpp"

#include <fstream>
#include <sstream>

namespace grw::io {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
    fail(Errc::ParseError, path.empty() ? what : path + ": " + what);
}

Flavor flavor_from_string(const std::string& s) {
    if (s == "directed") return Flavor::Directed;
    if (s == "undirected") return Flavor::Undirected;
    fail(Errc::ParseError, "unknown flavor '" + s + "'");
}

json map_to_json(const std::vector<std::pair<Id, Id>>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

std::vector<std::pair<Id, Id>> map_from_json(const json& j, const char* field) {
    if (!j.is_object()) fail(Errc::ParseError, std::string(field) + " must be an object");
    std::vector<std::pair<Id, Id>> out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_number_unsigned())
            fail(Errc::ParseError, std::string(field) + " values must be identifiers");
        out.emplace_back(static_cast<Id>(std::stoul(k)), v.get<Id>());
    }
    return out;
}

} // namespace

const char* doc_kind_name(DocKind k) {
    switch (k) {
        case DocKind::Graph: return "graph";
        case DocKind::Morphism: return "morphism";
        case DocKind::Rule: return "rule";
        case DocKind::Condition: return "condition";
        case DocKind::Trace: return "trace";
        case DocKind::Report: return "report";
    }
    return "?";
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({{"id", e.id}, {"ends", {e.a, e.b}}});
    return {{"flavor", g.flavor() == Flavor::Directed ? "directed" : "undirected"},
            {"vertices", g.vertices()},
            {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::ParseError, "graph must be an object");
    if (!j.contains("flavor") || !j.contains("vertices") || !j.contains("edges"))
        fail(Errc::ParseError, "graph needs flavor, vertices, edges");
    Flavor fl = flavor_from_string(j.at("flavor").get<std::string>());
    std::vector<Id> verts;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_number_unsigned()) fail(Errc::ParseError, "vertex ids must be unsigned");
        verts.push_back(v.get<Id>());
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.contains("id") || !e.contains("ends") || e.at("ends").size() != 2)
            fail(Errc::ParseError, "edge needs id and two ends");
        edges.push_back(Edge{e.at("id").get<Id>(), e.at("ends")[0].get<Id>(),
                             e.at("ends")[1].get<Id>()});
    }
    try {
        return Graph::make(fl, std::move(verts), std::move(edges));
    } catch (const Error& err) {
        if (err.code() == Errc::DuplicateId || err.code() == Errc::DanglingEndpoint)
            fail(Errc::InvariantViolation, err.what());
        throw;
    }
}

json to_json(const Morphism& m, bool inline_graphs) {
    json j = {{"vmap", map_to_json(m.vmap())}, {"emap", map_to_json(m.emap())}};
    if (inline_graphs) {
        j["dom"] = to_json(m.dom());
        j["cod"] = to_json(m.cod());
    }
    return j;
}

Morphism morphism_from_json(const json& j, const Graph& dom, const Graph& cod) {
    try {
        return Morphism::make(dom, cod, map_from_json(j.at("vmap"), "vmap"),
                              map_from_json(j.at("emap"), "emap"));
    } catch (const Error& err) {
        if (err.code() == Errc::NotTotal || err.code() == Errc::IncidenceViolation)
            fail(Errc::InvariantViolation, err.what());
        throw;
    }
}

Morphism morphism_from_json(const json& j) {
    if (!j.contains("dom") || !j.contains("cod"))
        fail(Errc::ParseError, "standalone morphism needs inline dom and cod");
    Graph dom = graph_from_json(j.at("dom"));
    Graph cod = graph_from_json(j.at("cod"));
    return morphism_from_json(j, dom, cod);
}

json to_json(const ConditionPtr& c) {
    json node = {{"op", cond_op_name(c->op())}};
    switch (c->op()) {
        case CondOp::True:
        case CondOp::False: break;
        case CondOp::Exists: {
            const Morphism& a = c->morphism();
            node["morphism"] = {{"cod", to_json(a.cod())},
                                {"vmap", map_to_json(a.vmap())},
                                {"emap", map_to_json(a.emap())}};
            node["children"] = json::array({to_json(c->children()[0])});
            break;
        }
        case CondOp::Not:
        case CondOp::And:
        case CondOp::Or: {
            json kids = json::array();
            for (const auto& k : c->children()) kids.push_back(to_json(k));
            node["children"] = kids;
            break;
        }
    }
    return node;
}

json condition_document(const ConditionPtr& c) {
    return {{"root", to_json(c->root())}, {"tree", to_json(c)}};
}

ConditionPtr condition_from_json(const json& node, const Graph& root) {
    if (!node.is_object() || !node.contains("op"))
        fail(Errc::ParseError, "condition node needs an op");
    std::string op = node.at("op").get<std::string>();
    auto kids = [&](std::size_t expect_at_least) {
        if (!node.contains("children") || node.at("children").size() < expect_at_least)
            fail(Errc::ParseError, "condition node '" + op + "' lacks children");
        return node.at("children");
    };
    if (op == "true") return Condition::truth(root);
    if (op == "false") return Condition::falsity(root);
    if (op == "not") return Condition::negation(condition_from_json(kids(1)[0], root));
    if (op == "and" || op == "or") {
        std::vector<ConditionPtr> children;
        if (node.contains("children"))
            for (const auto& k : node.at("children"))
                children.push_back(condition_from_json(k, root));
        return op == "and" ? Condition::conjunction(root, std::move(children))
                           : Condition::disjunction(root, std::move(children));
    }
    if (op == "exists") {
        if (!node.contains("morphism")) fail(Errc::ParseError, "exists needs a morphism");
        const json& mj = node.at("morphism");
        if (!mj.contains("cod")) fail(Errc::ParseError, "exists morphism needs a cod graph");
        Graph target = graph_from_json(mj.at("cod"));
        Morphism a = morphism_from_json(mj, root, target);
        if (!a.is_mono()) fail(Errc::InvariantViolation, "exists morphism must be mono");
        ConditionPtr sub = condition_from_json(kids(1)[0], target);
        return Condition::exists(std::move(a), std::move(sub));
    }
    fail(Errc::ParseError, "unknown condition op '" + op + "'");
}

json to_json(const RuleWC& r) {
    json j = {{"O", to_json(r.rule.output)},
              {"K", to_json(r.rule.context)},
              {"I", to_json(r.rule.input)},
              {"o", to_json(r.rule.to_output, false)},
              {"i", to_json(r.rule.to_input, false)}};
    if (!is_true(r.cond)) j["condition"] = to_json(r.cond);
    return j;
}

RuleWC rule_from_json(const json& j) {
    for (const char* f : {"O", "K", "I", "o", "i"})
        if (!j.contains(f)) fail(Errc::ParseError, std::string("rule needs field ") + f);
    Graph O = graph_from_json(j.at("O"));
    Graph K = graph_from_json(j.at("K"));
    Graph I = graph_from_json(j.at("I"));
    Morphism o = morphism_from_json(j.at("o"), K, O);
    Morphism i = morphism_from_json(j.at("i"), K, I);
    Rule rule = Rule::make(std::move(o), std::move(i));
    ConditionPtr cond = j.contains("condition")
                            ? condition_from_json(j.at("condition"), rule.input)
                            : Condition::truth(rule.input);
    // conditions authored on the output side transport to the input on load
    if (j.contains("condition_on_output")) {
        ConditionPtr on_out = condition_from_json(j.at("condition_on_output"), rule.output);
        cond = simplify(Condition::conjunction(rule.input, {cond, trans(rule, on_out)}));
    }
    return RuleWC::make(std::move(rule), std::move(cond));
}

json to_json(const RewriteStep& s) {
    return {{"semantics", semantics_name(s.semantics)},
            {"rule", to_json(s.rule)},
            {"host", to_json(s.host)},
            {"match", to_json(s.match, false)},
            {"result", to_json(s.result)},
            {"comatch", to_json(s.comatch, false)},
            {"complement", to_json(s.complement())},
            {"context_to_complement", to_json(s.context_to_complement(), false)},
            {"complement_in_host", to_json(s.complement_in_host(), false)},
            {"complement_in_result", to_json(s.complement_in_result(), false)},
            {"squares",
             {{"left", square_kind_name(s.left_square.kind)},
              {"right", square_kind_name(s.right_square.kind)}}}};
}

json to_json(const CompositeDiagram& d) {
    return {{"semantics", semantics_name(d.semantics)},
            {"second", to_json(d.second)},
            {"first", to_json(d.first)},
            {"overlap",
             {{"apex", to_json(d.overlap.apex())},
              {"into_second_input", to_json(d.overlap.left, false)},
              {"into_first_output", to_json(d.overlap.right, false)}}},
            {"glue", to_json(d.glue)},
            {"composite", to_json(d.composite())}};
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    bool dir = g.flavor() == Flavor::Directed;
    os << (dir ? "digraph" : "graph") << " G {\n";
    for (Id v : g.vertices()) os << "  v" << v << ";\n";
    for (const Edge& e : g.edges())
        os << "  v" << e.a << (dir ? " -> " : " -- ") << "v" << e.b << " [label=\"e" << e.id
           << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(),
                                                  suffix) == 0;
}

} // namespace

Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, path + ": cannot open");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        parse_fail(path, e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("format_version"))
        parse_fail(path, "document needs kind and format_version");
    if (j.at("format_version").get<int>() != kFormatVersion)
        fail(Errc::SchemaVersionMismatch,
             path + ": format_version " + j.at("format_version").dump());
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "graph") return Document{DocKind::Graph, graph_from_json(j)};
    if (kind == "morphism") return Document{DocKind::Morphism, morphism_from_json(j)};
    if (kind == "rule") return Document{DocKind::Rule, rule_from_json(j)};
    if (kind == "condition") {
        if (!j.contains("root") || !j.contains("tree"))
            parse_fail(path, "condition document needs root and tree");
        Graph root = graph_from_json(j.at("root"));
        return Document{DocKind::Condition,
                        ConditionDoc{condition_from_json(j.at("tree"), root)}};
    }
    parse_fail(path, "unsupported document kind '" + kind + "'");
}

void save(const Document& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, path + ": cannot open for writing");
    if (ends_with(path, ".dot")) {
        if (doc.kind != DocKind::Graph)
            fail(Errc::ConfigInvalid, "only graphs render to dot");
        out << to_dot(doc.graph());
        return;
    }
    json j;
    switch (doc.kind) {
        case DocKind::Graph: j = to_json(doc.graph()); break;
        case DocKind::Morphism: j = to_json(doc.morphism()); break;
        case DocKind::Rule: j = to_json(doc.rule()); break;
        case DocKind::Condition: j = condition_document(doc.condition()); break;
        case DocKind::Trace: j = to_json(doc.trace()); break;
        case DocKind::Report: fail(Errc::ConfigInvalid, "reports are written line-wise");
    }
    j["kind"] = doc_kind_name(doc.kind);
    j["format_version"] = kFormatVersion;
    out << j.dump(2) << "\n";
}

Document document_for(Graph g) { return Document{DocKind::Graph, std::move(g)}; }
Document document_for(RuleWC r) { return Document{DocKind::Rule, std::move(r)}; }
Document document_for(ConditionPtr c) {
    return Document{DocKind::Condition, ConditionDoc{std::move(c)}};
}
Document document_for(RewriteStep s) { return Document{DocKind::Trace, std::move(s)}; }

} // namespace grw::io
