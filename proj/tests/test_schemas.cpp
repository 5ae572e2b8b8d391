#include "tangles/serialize.hpp"

#include "tangles/bramble.hpp"
#include "tangles/kappa_tangle.hpp"

#include "doctest.h"

#include <fstream>

using namespace tangles;

namespace {

// Validator for the schema subset the shipped files use: type, enum,
// required, properties with additionalProperties=false, items, minimum.
bool validates(const Json& schema, const Json& value) {
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& allowed : schema["enum"])
            if (allowed == value) hit = true;
        if (!hit) return false;
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        if (type == "object" && !value.is_object()) return false;
        if (type == "array" && !value.is_array()) return false;
        if (type == "string" && !value.is_string()) return false;
        if (type == "boolean" && !value.is_boolean()) return false;
        if (type == "integer" && !value.is_number_integer()) return false;
        if (type == "number" && !value.is_number()) return false;
    }
    if (schema.contains("minimum") && value.is_number() &&
        value.get<double>() < schema["minimum"].get<double>())
        return false;
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !validates(sub, value.at(key))) return false;
        if (schema.value("additionalProperties", Json(true)) == Json(false))
            for (const auto& [key, item] : value.items())
                if (!schema["properties"].contains(key)) return false;
    }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validates(schema["items"], item)) return false;
    return true;
}

Json load_schema(const std::string& name) {
    std::ifstream in(std::string(SCHEMA_DIR) + "/" + name + ".schema.json");
    REQUIRE(in.good());
    return Json::parse(in);
}

void check_doc(const std::string& schema_name, const Json& doc) {
    CAPTURE(schema_name);
    CHECK(validates(load_schema(schema_name), doc));
}

} // namespace

TEST_SUITE_BEGIN("json schemas");

TEST_CASE("every document kind validates against its shipped schema") {
    Graph g = named_graph("fig3", {});
    auto sys = ConnectivitySystem::vertex_connectivity(g);

    check_doc("graph", graph_document(g));
    check_doc("components", components_document(components(g)));
    check_doc("blocks", blocks_document(k_blocks(g, 1)));
    check_doc("torsos", torsos_document(triconnected_components(g)));
    check_doc("tangles", tangles_document(enumerate_graph_tangles(g, 2)));
    check_doc("subgraph-family",
              family_document(touching_family_from_tangle(
                  g, block_tangle(g, IdSet::of({2, 7, 8}), 2))));
    check_doc("kappa-tangles",
              kappa_tangles_document(sys, enumerate_kappa_tangles(sys, 2)));
    check_doc("branch-decomposition", decomposition_document(sys, branch_width(sys)));
    Json tw;
    tw["kind"] = "treewidth";
    tw["treewidth"] = treewidth(g);
    check_doc("treewidth", tw);
    check_doc("duality", duality_document(verify_duality(sys)));
    check_doc("inequalities", inequalities_document(verify_inequalities(g)));
}

TEST_CASE("the validator really rejects") {
    Json schema = load_schema("duality");
    Json doc = duality_document(DualityReport{2, 2, true});
    CHECK(validates(schema, doc));
    doc["extra"] = 1;
    CHECK(!validates(schema, doc));
    doc.erase("extra");
    doc["branch_width"] = "two";
    CHECK(!validates(schema, doc));
    doc.erase("equal");
    CHECK(!validates(schema, doc));
}

TEST_SUITE_END();
