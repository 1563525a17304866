#pragma once

// JSON formats.  Indices are 1-based in every document; field elements are
// canonical integers.
//
//   field       {"p": 2, "m": 3, "modulus": [1, 0, 1, 1]}   modulus optional
//   rs code     {"field": {...}, "kind": "rs", "k": 3, "points": [0, 1, 2, 3, 4, 5]}
//   generator   {"field": {...}, "kind": "generator", "k": 3, "generator": [[...], ...]}
//   collection  {"n": 6, "sets": [[1, 2], [3, 4], [5, 6]]}

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hmds/listdec.hpp"
#include "hmds/rs.hpp"
#include "hmds/sizer.hpp"
#include "hmds/verifier.hpp"

namespace hmds::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CodeKind { RS, Generator };

struct CodeDescription {
  gf::Field field;
  CodeKind kind = CodeKind::Generator;
  int k = 0;
  std::optional<rs::RSCode> rs;  // set iff kind == RS
  linalg::Matrix generator;      // Vandermonde matrix for RS codes

  int n() const { return static_cast<int>(generator.cols()); }
};

json field_to_json(const gf::Field& f);
gf::Field field_from_json(const json& j);

json matrix_to_json(const linalg::Matrix& m);

json collection_to_json(const SubsetCollection& c);
SubsetCollection collection_from_json(const json& j);

json code_to_json(const CodeDescription& c);
json code_to_json(const rs::RSCode& c);
/// Throws FormatError on any schema violation.
CodeDescription code_from_json(const json& j);
CodeDescription describe(const rs::RSCode& c);
CodeDescription describe(const linalg::Matrix& g);

json report_to_json(const verifier::VerificationReport& r, bool timing = true);
json witness_to_json(const listdec::LDWitness& w);
json bound_to_json(const sizer::BoundValue& b);

/// Reads and parses a file; throws FormatError with the path on failure.
json read_json_file(const std::string& path);

}  // namespace hmds::io
