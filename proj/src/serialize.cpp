#include "tangles/serialize.hpp"

#include <sstream>

namespace tangles {

namespace {

Json id_list(const IdSet& s) { return Json(s.elements()); }

Json mask_list(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (mask & (std::uint64_t{1} << i)) out.push_back(i + 1);
    return Json(out);
}

Json pair_list(const std::vector<std::pair<int, int>>& pairs) {
    Json out = Json::array();
    for (auto [a, b] : pairs) out.push_back(Json::array({a, b}));
    return out;
}

Json member_document(const Separation& s) {
    Json out;
    out["separator"] = id_list(s.separator());
    out["big_vertices"] = id_list(s.verts_b);
    out["big_edges"] = id_list(s.edges_b);
    return out;
}

} // namespace

Json graph_document(const Graph& g) {
    Json out;
    out["kind"] = "graph";
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    Json edges = Json::array();
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        edges.push_back(Json::array({u, v}));
    }
    out["edges"] = edges;
    return out;
}

Json components_document(const std::vector<IdSet>& comps) {
    Json out;
    out["kind"] = "components";
    out["count"] = comps.size();
    Json list = Json::array();
    for (const auto& c : comps) list.push_back(id_list(c));
    out["components"] = list;
    return out;
}

Json blocks_document(const BlockSet& blocks) {
    Json out;
    out["kind"] = "blocks";
    out["k"] = blocks.k;
    out["count"] = blocks.members.size();
    Json list = Json::array();
    for (const auto& b : blocks.members) list.push_back(id_list(b));
    out["blocks"] = list;
    return out;
}

Json torsos_document(const std::vector<Torso>& torsos) {
    Json out;
    out["kind"] = "torsos";
    out["count"] = torsos.size();
    Json list = Json::array();
    for (const auto& t : torsos) {
        Json item;
        item["base"] = id_list(t.base);
        item["order"] = t.order();
        item["real_edges"] = pair_list(t.real_edges);
        item["virtual_edges"] = pair_list(t.virtual_edges);
        item["proper"] = t.proper;
        list.push_back(item);
    }
    out["torsos"] = list;
    return out;
}

Json tangle_document(const GraphTangle& t) {
    Json out;
    out["order"] = t.order;
    out["member_count"] = t.members.size();
    Json members = Json::array();
    for (const auto& s : t.members) members.push_back(member_document(s));
    out["members"] = members;
    return out;
}

Json tangles_document(const std::vector<GraphTangle>& ts) {
    Json out;
    out["kind"] = "tangles";
    out["count"] = ts.size();
    Json list = Json::array();
    for (const auto& t : ts) list.push_back(tangle_document(t));
    out["tangles"] = list;
    return out;
}

Json family_document(const SubgraphFamily& family) {
    Json out;
    out["kind"] = "subgraph-family";
    out["count"] = family.members.size();
    Json list = Json::array();
    for (const auto& m : family.members) {
        Json item;
        item["vertices"] = id_list(m.verts);
        item["edges"] = id_list(m.edges);
        list.push_back(item);
    }
    out["members"] = list;
    return out;
}

Json kappa_tangles_document(const ConnectivitySystem& sys, const std::vector<KappaTangle>& ts) {
    Json out;
    out["kind"] = "kappa-tangles";
    out["universe"] = sys.universe_size();
    out["count"] = ts.size();
    Json list = Json::array();
    for (const auto& t : ts) {
        Json item;
        item["order"] = t.order;
        Json members = Json::array();
        for (std::uint64_t m : t.members) members.push_back(mask_list(m));
        item["members"] = members;
        list.push_back(item);
    }
    out["tangles"] = list;
    return out;
}

Json decomposition_document(const ConnectivitySystem& sys, const BranchWidthResult& r) {
    Json out;
    out["kind"] = "branch-decomposition";
    out["width"] = r.width;
    out["nodes"] = r.decomposition.tree.node_count;
    out["edges"] = pair_list(r.decomposition.tree.edges);
    Json leaves = Json::array();
    for (auto [node, element] : r.decomposition.leaf_map) {
        Json item;
        item["node"] = node;
        item["element"] = element;
        item["label"] = sys.element_name(element);
        leaves.push_back(item);
    }
    out["leaves"] = leaves;
    Json widths = Json::array();
    for (auto [a, b] : r.decomposition.tree.edges) {
        Json item;
        item["edge"] = Json::array({a, b});
        item["value"] = sys.value(r.decomposition.side_mask(a, b));
        widths.push_back(item);
    }
    out["edge_values"] = widths;
    return out;
}

Json duality_document(const DualityReport& r) {
    Json out;
    out["kind"] = "duality";
    out["branch_width"] = r.branch_width;
    out["max_tangle_order"] = r.max_tangle_order;
    out["equal"] = r.equal;
    return out;
}

Json inequalities_document(const InequalityReport& r) {
    Json out;
    out["kind"] = "inequalities";
    out["branch_width"] = r.branch_width;
    out["treewidth"] = r.treewidth;
    out["holds"] = r.holds;
    out["left_tight"] = r.left_tight;
    out["right_tight"] = r.right_tight;
    return out;
}

namespace {

void render(const Json& value, const std::string& prefix, std::ostringstream& out) {
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) {
            std::string next = prefix.empty() ? key : prefix + "." + key;
            render(item, next, out);
        }
        return;
    }
    if (value.is_array()) {
        bool scalar = true;
        for (const auto& item : value)
            if (item.is_object() || item.is_array()) scalar = false;
        if (scalar) {
            out << prefix << ':';
            for (const auto& item : value) out << ' ' << item.dump();
            out << '\n';
            return;
        }
        int index = 0;
        for (const auto& item : value) render(item, prefix + "[" + std::to_string(index++) + "]", out);
        return;
    }
    out << prefix << ": " << value.dump() << '\n';
}

} // namespace

std::string to_text(const Json& doc) {
    std::ostringstream out;
    render(doc, "", out);
    return out.str();
}

} // namespace tangles
