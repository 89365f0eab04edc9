#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "hyperoct/forest.hpp"
#include "hyperoct/hypermap.hpp"
#include "hyperoct/series.hpp"

namespace hyperoct {

using Json = nlohmann::ordered_json;

/// Malformed input; the message carries line/column context when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses JSON text, reporting syntax errors as "<source>:<line>:<col>: ...".
Json parseJson(const std::string& text, const std::string& source);
std::string readFile(const std::string& path);

Json toJson(const Partition& partition);

/// {"n", "vertices": [...], "loopAssignments": {"<id>": vertex}}
Json toJson(const PermutedForest& forest);
/// Structural parse only; semantic checks belong to validateForest().
PermutedForest forestFromJson(const Json& json);

/// {"n", "f3": [[a, b], ...], "pi1": [[...], ...], "pi2": [[...], ...]} with
/// signed points (-i for î).
Json toJson(const PartitionedHypermap& map);
PartitionedHypermap hypermapFromJson(const Json& json);

/// {"basis", "n", "entries": [{"lambda", "mu", "value"}]}; values are
/// fraction strings.
Json toJson(const SymSeries& series);

/// Header "lambda,mu,count"; partitions written as "2+1" so fields need no
/// quoting.
std::string tableToCsv(const CountTable& table);
/// {"<lambda>": {"<mu>": "count"}}
Json tableToJson(const CountTable& table);

Json toJson(const DegreeArray& a);

}  // namespace hyperoct
