#pragma once

// JSON forms of the library's objects. Every number is a decimal string so
// arbitrary-precision values survive the round trip.

#include <nlohmann/json.hpp>

#include "chaircodes/codes.hpp"
#include "chaircodes/splitting.hpp"
#include "chaircodes/wom.hpp"

namespace chaircodes {

using Json = nlohmann::ordered_json;

Json to_json(const Point& p);
Json to_json(const RPoint& p);
Json to_json(const IntMatrix& m);
Json to_json(const Chair& c);
Json to_json(const Lattice& lat);
Json to_json(const SplittingSequence& s);
Json to_json(const CompositeGroupLabeling& g);
Json to_json(const Verdict& v);
Json to_json(const LatticeCode& code);
/// Metadata and per-color class sizes; the grid itself is exported as CSV or binary.
Json to_json(const Coloring& col);

// The readers throw ParseError on malformed input.
Point point_from_json(const Json& j);
Chair chair_from_json(const Json& j);
Lattice lattice_from_json(const Json& j);
SplittingSequence splitting_from_json(const Json& j);
/// Rebuilds the code from its generator and sphere and checks the stored
/// table, if any, against the rebuilt one.
LatticeCode code_from_json(const Json& j, std::uint64_t budget = kDefaultBudget);

/// Table key for a coset label, e.g. "3,0".
std::string label_key(const CosetLabel& label);

}  // namespace chaircodes
