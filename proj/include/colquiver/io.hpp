#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "colquiver/cluster.hpp"
#include "colquiver/polygon.hpp"
#include "colquiver/tracker.hpp"

namespace colquiver {

using Json = nlohmann::ordered_json;

// All vertex indices in JSON are 0-based. Polygon vertices keep their 1..N labels.

/// {"m", "labels", "arrows": [{"from", "to", "colour", "mult"}]}, arrows sorted
/// by (from, to, colour), zero counts omitted.
Json quiver_to_json(const ColouredQuiver& q);
/// Shape checks only; conditions (I)-(III) are left to validate().
ColouredQuiver quiver_from_json(const Json& j);

Json algebra_to_json(const AlgebraData& algebra);
std::shared_ptr<const AlgebraData> algebra_from_json(const Json& j);

Json summand_to_json(const DecoratedSummand& s);
DecoratedSummand summand_from_json(const Json& j);

Json state_to_json(const TiltingState& state);
/// Rejects states whose quiver or summands are malformed.
TiltingState state_from_json(const Json& j);

Json coloured_root_to_json(const ColouredRoot& x);
ColouredRoot coloured_root_from_json(const Json& j);
/// Array of elements in vertex order.
Json cluster_to_json(const OrderedMCluster& cluster);

/// {"n", "m", "diagonals": [[a, b], ...]} with the diagonals sorted.
Json angulation_to_json(const Polygon& p, const Angulation& angulation);
/// Validates against the polygon given by "n" and "m"; diagonals keep their given order.
Angulation angulation_from_json(const Json& j, int* n_out = nullptr, int* m_out = nullptr);

/// One edge per arrow unit, labelled with its colour.
std::string quiver_dot(const ColouredQuiver& q, const std::string& name = "Q");

/// {"states": count, "edges": count, "adjacency": {key: [neighbour key for each vertex]}}.
Json exchange_graph_json(const Enumeration& e);
std::string exchange_graph_dot(const Enumeration& e);

/// Totals, isomorphism classes of the coloured and of the colour-0 quivers,
/// edge count, wall time. Class counts are null above the canonical-form bound.
Json enumeration_report(const Enumeration& e);

/// Reads a whole file and parses it; invalid_input on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace colquiver
