#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tetra/core.hpp"
#include "tetra/families.hpp"

namespace tetra::io {

using json = nlohmann::ordered_json;

template <Scalar T>
json scalar_array(const std::vector<T>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

/// Entries may be strings ("p/q", "-3", "0.25") or JSON integers.
template <Scalar T>
std::vector<T> parse_array(const json& doc, const std::string& field) {
  if (!doc.contains(field)) throw InputError("missing field '" + field + "'");
  const auto& arr = doc.at(field);
  if (!arr.is_array()) throw InputError("field '" + field + "' must be an array");
  std::vector<T> out;
  for (const auto& e : arr) {
    if (e.is_string()) out.push_back(parse_scalar<T>(e.get<std::string>()));
    else if (e.is_number_integer()) out.push_back(parse_scalar<T>(std::to_string(e.get<long long>())));
    else throw InputError("field '" + field + "' must hold rational strings");
  }
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text << '\n';
}

inline void check_start(const json& doc, const std::string& field, Index expected) {
  if (!doc.contains("start_index")) return;
  const auto& s = doc.at("start_index");
  Index got = 0;
  if (s.is_number_integer()) {
    got = s.get<Index>();
  } else if (s.is_object() && s.contains(field)) {
    got = s.at(field).get<Index>();
  } else {
    return;
  }
  if (got != expected)
    throw InputError("start_index for '" + field + "' must be " + std::to_string(expected) + ", got " +
                     std::to_string(got));
}

/// Built-in families: "ones" (every alpha is 1), "jp-first", "jp-akv" with
/// "params": {"alpha", "beta", "gamma"}.
template <Scalar T>
AlphaSequence<T> generator_alphas(const json& doc) {
  const auto name = doc.at("generator").get<std::string>();
  if (name == "ones") return AlphaSequence<T>(typename Band<T>::Generator([](Index) { return T(1); }));
  if (name == "jp-first" || name == "jp-akv") {
    if (!doc.contains("params")) throw InputError("generator '" + name + "' needs 'params'");
    const auto& p = doc.at("params");
    auto get = [&](const char* key) {
      if (!p.contains(key)) throw InputError(std::string("generator params need '") + key + "'");
      return parse_scalar<T>(p.at(key).is_string() ? p.at(key).get<std::string>() : p.at(key).dump());
    };
    JPParams<T> params{get("alpha"), get("beta"), get("gamma")};
    return jp_generator(params, name == "jp-first" ? JPVariant::FIRST : JPVariant::AKV);
  }
  throw InputError("unknown generator '" + name + "'");
}

/// {"alpha": [...], "start_index": 1} or {"generator": ...}.
template <Scalar T>
AlphaSequence<T> alphas_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("alpha document must be a JSON object");
  if (doc.contains("generator")) return generator_alphas<T>(doc);
  check_start(doc, "alpha", 1);
  return AlphaSequence<T>(parse_array<T>(doc, "alpha"));
}

/// {"a": [...], "b": [...], "c": [...], "start_index": {"a": 2, "b": 1, "c": 0}}
/// or {"generator": ...}, in which case the matrix is L1 L2 U of that family.
template <Scalar T>
TetraHessenberg<T> matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("matrix document must be a JSON object");
  if (doc.contains("generator")) return tetra_from_alphas(generator_alphas<T>(doc));
  check_start(doc, "a", 2);
  check_start(doc, "b", 1);
  check_start(doc, "c", 0);
  return tetra_from_bands<T>(parse_array<T>(doc, "a"), parse_array<T>(doc, "b"), parse_array<T>(doc, "c"));
}

template <Scalar T>
json alphas_to_json(const std::vector<T>& alphas) {
  json doc;
  doc["alpha"] = scalar_array(alphas);
  doc["start_index"] = 1;
  return doc;
}

/// Bands of T^{[N]}: c_0..c_N, b_1..b_N, a_2..a_N.
template <Scalar T>
json matrix_to_json(const TetraHessenberg<T>& t, Index n) {
  std::vector<T> a, b, c;
  for (Index i = 0; i <= n; ++i) c.push_back(t.c(i));
  for (Index i = 1; i <= n; ++i) b.push_back(t.b(i));
  for (Index i = 2; i <= n; ++i) a.push_back(t.a(i));
  json doc;
  doc["a"] = scalar_array(a);
  doc["b"] = scalar_array(b);
  doc["c"] = scalar_array(c);
  doc["start_index"] = {{"a", 2}, {"b", 1}, {"c", 0}};
  return doc;
}

template <Scalar T>
json polynomial_to_json(const Polynomial<T>& p) {
  return scalar_array(p.coefficients());
}

}  // namespace tetra::io
