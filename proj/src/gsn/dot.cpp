#include "argus/gsn/case.hpp"

#include <algorithm>

namespace argus::gsn {

namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::string_view shape_attributes(NodeKind kind) {
    switch (kind) {
        case NodeKind::Goal: return "shape=box";
        case NodeKind::Strategy: return "shape=parallelogram";
        case NodeKind::Solution: return "shape=circle";
        case NodeKind::Context: return "shape=box, style=\"rounded\"";
        case NodeKind::Justification: return "shape=ellipse, xlabel=\"J\"";
        case NodeKind::Counterclaim: return "shape=octagon";
    }
    return "shape=box";
}

std::optional<std::string_view> fill_color(std::string_view status) {
    if (status == "Supported" || status == "Satisfied" || status == "Mitigated") {
        return "green";
    }
    if (status == "Defeated" || status == "Violated" || status == "Active") {
        return "red";
    }
    if (status == "Inconclusive") {
        return "orange";
    }
    if (status == "Undeveloped" || status == "Unknown") {
        return "gray";
    }
    return std::nullopt;
}

std::string_view edge_attributes(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::SupportedBy: return "";
        case EdgeKind::InContextOf: return " [style=dashed]";
        case EdgeKind::Challenges: return " [style=bold, color=red]";
        case EdgeKind::MitigatedBy: return " [style=dotted]";
    }
    return "";
}

}  // namespace

std::string render_dot(const AssuranceCase& gsn_case, const std::optional<StatusMap>& statuses) {
    std::string out = "digraph \"" + escape(gsn_case.title) + "\" {\n";
    out += "  rankdir=TB;\n";
    out += "  node [fontname=\"Helvetica\"];\n";
    for (const auto& [id, n] : gsn_case.nodes) {
        std::string attrs(shape_attributes(n.kind));
        if (statuses) {
            auto it = statuses->find(id);
            if (it != statuses->end()) {
                if (auto color = fill_color(it->second)) {
                    if (n.kind == NodeKind::Context) {
                        attrs = "shape=box, style=\"rounded,filled\"";
                    } else {
                        attrs += ", style=filled";
                    }
                    attrs += ", fillcolor=" + std::string(*color);
                }
            }
        }
        out += "  \"" + escape(id) + "\" [" + attrs + ", label=\"" + escape(id) + "\\n" + escape(n.statement) +
               "\"];\n";
    }
    auto edges = gsn_case.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
        out += "  \"" + escape(e.from) + "\" -> \"" + escape(e.to) + "\"" + std::string(edge_attributes(e.kind)) +
               ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace argus::gsn
