#pragma once

// JSON documents for inputs and reports. Indices are 1-based and exact
// numbers are fraction strings ("-3", "1/2") everywhere in these documents.
// The schemas are described in docs/formats.md.

#include "tropibound/bergman_fan.hpp"
#include "tropibound/exact_arith.hpp"
#include "tropibound/numeric_verify.hpp"
#include "tropibound/oriented_matroid.hpp"
#include "tropibound/regular_subdivision.hpp"
#include "tropibound/tropical_intersection.hpp"
#include "tropibound/vertical_systems.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropibound::io {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field or the line and
/// column of a syntax error.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text, const std::string& source = "<input>");

Rational rational_from_json(const Json& j, const std::string& field);
RationalVector rational_vector_from_json(const Json& j, const std::string& field);
RationalMatrix rational_matrix_from_json(const Json& j, const std::string& field);
std::int64_t integer_from_json(const Json& j, const std::string& field);
IntMatrix int_matrix_from_json(const Json& j, const std::string& field);
IndexSet index_set_from_json(const Json& j, const std::string& field);

Json to_json(const Rational& x);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);
Json to_json(const IntMatrix& m);
Json to_json(IndexSet s);

enum class InputKind { Matrix, System, Crn };

struct InputDocument {
    InputKind kind = InputKind::Matrix;
    RationalMatrix matrix;  // Matrix documents
    VerticalSystem system;  // System documents, and assembled CRNs
    CRNModel crn;           // Crn documents
};

/// {"C": ...} is a matrix document, {"C", "A", "h"} a system and
/// {"N", "B", "W", "T", "h"} a reaction network. "N" is accepted for "C"
/// outside reaction networks.
InputDocument parse_input(const Json& j);
InputDocument parse_input(const std::filesystem::path& path);

/// Coefficient matrix of any input kind.
const RationalMatrix& coefficient_matrix(const InputDocument& doc);
/// Throws ParseError for matrix documents.
const VerticalSystem& system_of(const InputDocument& doc);

Json system_to_json(const VerticalSystem& s);
Json crn_to_json(const CRNModel& m);

Json circuits_to_json(std::size_t ground_size, const std::vector<SignedCircuit>& circuits);
std::vector<SignedCircuit> circuits_from_json(const Json& j);

Json flats_to_json(std::size_t ground_size, const std::vector<Flat>& flats);
std::vector<Flat> flats_from_json(const Json& j);

Json cone_to_json(const FlagCone& cone);
FlagCone cone_from_json(const Json& j);
/// kind = "bergman" or "positive-bergman".
Json fan_to_json(const std::string& kind, std::size_t ground_size, const std::vector<FlagCone>& cones, bool free);
std::vector<FlagCone> fan_from_json(const Json& j);

Json coarse_to_json(const std::vector<CoarseConeCheck>& checks);
/// {"rays": [[...]], "cones": [[1, 2], ...]} with 1-based ray indices.
std::pair<std::vector<RationalVector>, std::vector<std::vector<std::size_t>>> coarse_input_from_json(const Json& j);

Json report_to_json(const IntersectionReport& r);
IntersectionReport report_from_json(const Json& j);

Json cells_to_json(const std::vector<Cell>& cells, bool triangulation);
std::vector<Cell> cells_from_json(const Json& j);

Json decorated_to_json(const DecoratedCount& d);
DecoratedCount decorated_from_json(const Json& j);

Json bound_to_json(const BoundReport& b);
BoundReport bound_from_json(const Json& j);

Json witnesses_to_json(const std::vector<RootWitness>& ws, const CountOptions& options, std::size_t certified_bound);
std::vector<RootWitness> witnesses_from_json(const Json& j);

/// Canonical text of a document: two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace tropibound::io
