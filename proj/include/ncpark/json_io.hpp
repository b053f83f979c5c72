#pragma once

#include <string>

#include "json.hpp"

#include "ncpark/parking.hpp"
#include "ncpark/poset.hpp"
#include "ncpark/shelling.hpp"

namespace ncpark {

using Json = nlohmann::json;

// {"n": 3, "blocks": [[1, 3], [2]]}, blocks in canonical order.
Json to_json(const SetPartition& p);
SetPartition set_partition_from_json(const Json& j);
NoncrossingPartition partition_from_json(const Json& j);

// Words are integer arrays. Trees are {"label": [...], "children": [...]}
// with leaves {"label": [], "children": []}. Pairs are the partition object
// of pi with an extra "sigma" array. Triples are {"pi": ..., "rho": ...,
// "lambda": [...]} with lambda indexing the blocks of rho.
Json to_json(const ParkingWord& w);
Json to_json(const ParkingTree& t);
Json to_json(const ParkingObject& p);
Json to_json(const NC2Triple& t);
Json to_json(const AnyRepresentation& x);

ParkingWord word_from_json(const Json& j);
ParkingTree tree_from_json(const Json& j);
ParkingObject pair_from_json(const Json& j);
NC2Triple triple_from_json(const Json& j);
// Parses and validates; throws std::invalid_argument with a diagnostic.
AnyRepresentation representation_from_json(const Json& j, Representation kind);

// Reads a representation from text: JSON, or for words also a digit string
// such as 1325271 or a list separated by spaces or commas.
AnyRepresentation parse_representation(const std::string& text, Representation kind);
// "word", "tree", "pair" or "triple"; throws std::invalid_argument otherwise.
Representation representation_from_name(const std::string& name);

// {"n": n, "elements": [labels], "covers": [[i, j], ...]}.
Json poset_to_json(const FinitePoset& p, int n);
// Hasse diagram with one node per element, labelled by its display label.
std::string poset_to_dot(const FinitePoset& p, const std::string& name);

// {"lemma": name, "domain": size, "passed": count, "counterexample": text or null}.
Json to_json(const LemmaReport& r);
Json to_json(const ShellingReport& r);
Json to_json(const KeyLemmaReport& r);

}  // namespace ncpark
