#pragma once

#include <string>
#include <variant>

#include "grw/laws.hpp"

#include "json.hpp"

namespace grw::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

enum class DocKind { Graph, Morphism, Rule, Condition, Trace, Report };

const char* doc_kind_name(DocKind k);

// Top-level condition document carries its root; node trees are rootless and
// inherit roots from their parents.
struct ConditionDoc {
    ConditionPtr tree;
};

struct Document {
    DocKind kind;
    std::variant<Graph, Morphism, RuleWC, ConditionDoc, RewriteStep> payload;

    const Graph& graph() const { return std::get<Graph>(payload); }
    const Morphism& morphism() const { return std::get<Morphism>(payload); }
    const RuleWC& rule() const { return std::get<RuleWC>(payload); }
    const ConditionPtr& condition() const { return std::get<ConditionDoc>(payload).tree; }
    const RewriteStep& trace() const { return std::get<RewriteStep>(payload); }
};

json to_json(const Graph& g);
json to_json(const Morphism& m, bool inline_graphs = true);
json to_json(const ConditionPtr& c); // node tree, no root
json condition_document(const ConditionPtr& c);
json to_json(const RuleWC& r);
json to_json(const RewriteStep& s);
json to_json(const CompositeDiagram& d);

Graph graph_from_json(const json& j);
Morphism morphism_from_json(const json& j);
Morphism morphism_from_json(const json& j, const Graph& dom, const Graph& cod);
ConditionPtr condition_from_json(const json& node, const Graph& root);
RuleWC rule_from_json(const json& j);

std::string to_dot(const Graph& g);

Document load(const std::string& path);
void save(const Document& doc, const std::string& path); // .dot renders graphs

Document document_for(Graph g);
Document document_for(RuleWC r);
Document document_for(ConditionPtr c);
Document document_for(RewriteStep s);

} // namespace grw::io
