#include "hmds/io.hpp"

#include <fstream>

namespace hmds::io {

namespace {

template <class T>
T get(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": bad \"" + key + "\": " + e.what());
  }
}

}  // namespace

json field_to_json(const gf::Field& f) {
  json j = {{"p", f.p()}, {"m", f.m()}};
  if (f.m() > 1) j["modulus"] = f.modulus();
  return j;
}

gf::Field field_from_json(const json& j) {
  const auto p = get<std::uint64_t>(j, "p", "field");
  const int m = j.contains("m") ? get<int>(j, "m", "field") : 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) modulus = get<std::vector<std::uint32_t>>(j, "modulus", "field");
  try {
    return gf::Field::make(p, m, modulus);
  } catch (const std::exception& e) {
    throw FormatError(std::string("field: ") + e.what());
  }
}

json matrix_to_json(const linalg::Matrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.to_rows()}};
}

json collection_to_json(const SubsetCollection& c) { return {{"n", c.n()}, {"sets", c.to_lists()}}; }

SubsetCollection collection_from_json(const json& j) {
  const int n = get<int>(j, "n", "collection");
  const auto sets = get<std::vector<std::vector<int>>>(j, "sets", "collection");
  try {
    return SubsetCollection::from_lists(n, sets);
  } catch (const std::exception& e) {
    throw FormatError(std::string("collection: ") + e.what());
  }
}

CodeDescription describe(const rs::RSCode& c) {
  return {c.field(), CodeKind::RS, c.k(), c, rs::vandermonde(c)};
}

CodeDescription describe(const linalg::Matrix& g) {
  return {g.field(), CodeKind::Generator, static_cast<int>(g.rows()), std::nullopt, g};
}

json code_to_json(const rs::RSCode& c) {
  return {{"field", field_to_json(c.field())}, {"kind", "rs"}, {"k", c.k()}, {"points", c.points()}};
}

json code_to_json(const CodeDescription& c) {
  if (c.kind == CodeKind::RS) return code_to_json(*c.rs);
  return {{"field", field_to_json(c.field)}, {"kind", "generator"}, {"k", c.k}, {"generator", c.generator.to_rows()}};
}

CodeDescription code_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("code: expected an object");
  const auto field = field_from_json(get<json>(j, "field", "code"));
  const auto kind = get<std::string>(j, "kind", "code");
  const int k = get<int>(j, "k", "code");
  try {
    if (kind == "rs") {
      if (j.contains("generator")) throw FormatError("code: rs codes take \"points\", not \"generator\"");
      const auto pts = get<std::vector<std::uint64_t>>(j, "points", "code");
      std::vector<gf::Elem> elems;
      for (auto v : pts) {
        if (!field.contains(v)) throw FormatError("code: point " + std::to_string(v) + " outside " + field.name());
        elems.push_back(static_cast<gf::Elem>(v));
      }
      return describe(rs::RSCode(field, std::move(elems), k));
    }
    if (kind == "generator") {
      if (j.contains("points")) throw FormatError("code: generator codes take \"generator\", not \"points\"");
      const auto rows = get<std::vector<std::vector<std::uint64_t>>>(j, "generator", "code");
      if (static_cast<int>(rows.size()) != k)
        throw FormatError("code: k=" + std::to_string(k) + " but generator has " + std::to_string(rows.size()) + " rows");
      auto g = linalg::Matrix::from_rows(field, rows);
      if (g.cols() == 0 || static_cast<int>(g.cols()) > kMaxLength) throw FormatError("code: bad length");
      return describe(g);
    }
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("code: ") + e.what());
  }
  throw FormatError("code: unknown kind \"" + kind + "\"");
}

json report_to_json(const verifier::VerificationReport& r, bool timing) {
  json j = {{"property", r.property},
            {"holds", r.holds},
            {"witness", r.witness ? collection_to_json(*r.witness) : json(nullptr)},
            {"collections_checked", r.collections_checked},
            {"method", r.method}};
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json witness_to_json(const listdec::LDWitness& w) {
  return {{"y", w.y}, {"codewords", w.codewords}, {"total_weight", w.total_weight}};
}

json bound_to_json(const sizer::BoundValue& b) {
  json j = {{"formula", b.formula}, {"exact", b.exact.str()}, {"log2", b.log2}};
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace hmds::io
