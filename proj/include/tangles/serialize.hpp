#pragma once

#include "tangles/blocks.hpp"
#include "tangles/bramble.hpp"
#include "tangles/branch_decomposition.hpp"
#include "tangles/graph.hpp"
#include "tangles/graph_tangle.hpp"
#include "tangles/kappa_tangle.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace tangles {

using Json = nlohmann::ordered_json;

Json graph_document(const Graph& g);
Json components_document(const std::vector<IdSet>& comps);
Json blocks_document(const BlockSet& blocks);
Json torsos_document(const std::vector<Torso>& torsos);
Json tangle_document(const GraphTangle& t);
Json tangles_document(const std::vector<GraphTangle>& ts);
Json family_document(const SubgraphFamily& family);
Json kappa_tangles_document(const ConnectivitySystem& sys, const std::vector<KappaTangle>& ts);
Json decomposition_document(const ConnectivitySystem& sys, const BranchWidthResult& r);
Json duality_document(const DualityReport& r);
Json inequalities_document(const InequalityReport& r);

// Text renderings: one record per line, deterministic.
std::string to_text(const Json& doc);

} // namespace tangles
