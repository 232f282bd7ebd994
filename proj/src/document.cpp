#include "roadcolor/document.hpp"

#include <json.hpp>

#include "roadcolor/error.hpp"

namespace roadcolor {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1";

std::size_t positive(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(Errc::Parse, std::string("missing \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw Error(Errc::Shape, std::string("\"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

std::vector<std::vector<State>> table(const json& v, std::size_t n, std::size_t k, const char* key) {
  if (!v.is_array()) throw Error(Errc::Parse, std::string("\"") + key + "\" must be an array");
  if (v.size() != n) throw Error(Errc::Shape, std::string("\"") + key + "\" must have n rows");
  std::vector<std::vector<State>> rows(n);
  for (std::size_t p = 0; p < n; ++p) {
    const json& row = v[p];
    if (!row.is_array()) throw Error(Errc::Parse, "row " + std::to_string(p) + " must be an array");
    if (row.size() != k) throw Error(Errc::Shape, "row " + std::to_string(p) + " must have k entries");
    for (const json& x : row) {
      if (!x.is_number_unsigned()) throw Error(Errc::Parse, "targets must be non-negative integers");
      if (x.get<std::uint64_t>() >= n) throw Error(Errc::Shape, "target out of range in row " + std::to_string(p));
      rows[p].push_back(x.get<State>());
    }
  }
  return rows;
}

}  // namespace

Document read_document(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw Error(Errc::Parse, "malformed JSON");
  if (!j.is_object()) throw Error(Errc::Parse, "document must be an object");
  if (!j.contains("version") || !j["version"].is_string()) throw Error(Errc::Parse, "missing \"version\"");
  if (j["version"].get<std::string>() != kVersion)
    throw Error(Errc::Version, "unsupported version " + j["version"].get<std::string>());
  const std::size_t n = positive(j, "n"), k = positive(j, "k");
  const bool adj = j.contains("adj"), delta = j.contains("delta");
  if (adj == delta) throw Error(Errc::Shape, "exactly one of \"adj\" and \"delta\" is required");
  if (adj) return Digraph(n, k, table(j["adj"], n, k, "adj"));
  return Automaton::from_transitions(n, k, table(j["delta"], n, k, "delta"));
}

std::string write_document(const Document& doc) {
  json j;
  j["version"] = kVersion;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Digraph>) {
          j["n"] = x.size();
          j["k"] = x.degree();
          j["adj"] = x.rows();
        } else {
          j["n"] = x.size();
          j["k"] = x.alphabet_size();
          j["delta"] = x.rows();
        }
      },
      doc);
  return j.dump() + "\n";
}

}  // namespace roadcolor
