#pragma once

// JSON interchange and DOT export.

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mckay/cuts.hpp"
#include "mckay/groupspec.hpp"
#include "mckay/height.hpp"
#include "mckay/mutation.hpp"
#include "mckay/types.hpp"

namespace mckay {

using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A group as read from input: either generators or a B' matrix.
struct GroupInput {
  std::optional<GroupSpec> spec;
  LatticeEmbedding embedding;
};

/// {"n": int, "generators": [{"order": int, "weights": [...]}]} or
/// {"n": int, "bprime": [[...], ...]} (rows). Throws ParseError on malformed
/// input and InvalidSpecError on inconsistent specs.
GroupInput parse_group(const Json& j);
GroupInput parse_group(const std::string& text);

/// "a,b,c" -> (a, b, c).
TypeVector parse_type(const std::string& text);

/// {"type": [...], "arrows": [{"source": rep, "arrow_type": i}]}. The set is
/// not checked to be a cut; "type", when present, is returned separately.
struct CutInput {
  ArrowSet arrows;
  std::optional<TypeVector> declared_type;
};
CutInput parse_cut(const McKayQuiver& q, const Json& j);

Json to_json(const LatticeEmbedding& e);
Json to_json(const McKayQuiver& q);
Json to_json(const McKayQuiver& q, const Cut& c);
Json to_json(const McKayQuiver& q, const HeightFunction& h);
Json to_json(const TypeSimplexReport& r);
Json to_json(const McKayQuiver& q, const DegreeZeroPresentation& p);
Json to_json(const McKayQuiver& q, const MutationLattice& lat);
Json to_json(const TypeVector& t);

/// "a,b" key used for representatives in maps.
std::string rep_key(const CosetPoint& p);

std::string quiver_dot(const McKayQuiver& q);
/// Q with the arrows of c dashed.
std::string cut_dot(const McKayQuiver& q, const Cut& c);
std::string hasse_dot(const McKayQuiver& q, const MutationLattice& lat);

}  // namespace mckay
