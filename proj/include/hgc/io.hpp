#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hgc/containers.hpp"
#include "hgc/rational.hpp"

namespace hgc {

using Json = nlohmann::ordered_json;

inline Json ids_json(const VertexSet& s) { return Json(s.ids()); }

inline VertexSet ids_from_json(const Json& j, std::size_t capacity) {
  if (!j.is_array()) throw InputError("expected an array of vertex ids");
  VertexSet out(capacity);
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw InputError("vertex ids must be positive integers");
    out.insert(x.get<VertexId>());
  }
  return out;
}

/// {"params":{k,p,c,eps,C,family},"records":[{fingerprint,container}]}; records sorted by fingerprint.
inline Json to_json(const ContainerMap& map) {
  Json records = Json::array();
  for (const auto& [s, f] : map.records)
    records.push_back(Json{{"fingerprint", ids_json(s)}, {"container", ids_json(f)}});
  return Json{{"params",
               {{"k", map.k},
                {"p", to_string(map.p)},
                {"c", to_string(map.c)},
                {"eps", to_string(map.eps)},
                {"C", to_string(map.C)},
                {"family", map.family}}},
              {"records", std::move(records)}};
}

/// Inverse of to_json; ids are checked against `capacity`. A fingerprint listed
/// twice with different containers is a ContractError.
inline ContainerMap container_map_from_json(const Json& j, std::size_t capacity) {
  try {
    const auto& params = j.at("params");
    ContainerMap map;
    map.k = params.at("k").get<int>();
    map.capacity = capacity;
    map.p = parse_rational(params.at("p").get<std::string>());
    map.c = parse_rational(params.at("c").get<std::string>());
    map.eps = parse_rational(params.at("eps").get<std::string>());
    map.C = parse_rational(params.at("C").get<std::string>());
    map.family = params.at("family").get<std::string>();
    for (const auto& r : j.at("records")) {
      auto container = ids_from_json(r.at("container"), capacity);
      auto [it, fresh] = map.records.emplace(ids_from_json(r.at("fingerprint"), capacity), container);
      if (!fresh && it->second != container)
        throw ContractError("fingerprint " + it->first.to_string() + " maps to both " + it->second.to_string() +
                            " and " + container.to_string());
    }
    return map;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed container file: ") + e.what());
  }
}

/// Exact independent-set counts per size, with the parameters that produced them.
struct CountReport {
  std::map<std::string, std::string> parameters;
  std::vector<BigInt> counts;  ///< counts[m]
};

inline Json to_json(const CountReport& report) {
  Json params = Json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  Json rows = Json::array();
  for (std::size_t m = 0; m < report.counts.size(); ++m)
    rows.push_back(Json{{"m", m}, {"count", report.counts[m].str()}});
  return Json{{"parameters", std::move(params)}, {"counts", std::move(rows)}};
}

/// Columns m,count; parameters echoed as leading '#' lines.
inline void write_csv(std::ostream& out, const CountReport& report) {
  for (const auto& [k, v] : report.parameters) out << "# " << k << '=' << v << '\n';
  out << "m,count\n";
  for (std::size_t m = 0; m < report.counts.size(); ++m) out << m << ',' << report.counts[m].str() << '\n';
}

/// 64-bit FNV-1a, used for input digests in run manifests.
inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex_digest(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(data);
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += digits[(h >> shift) & 0xF];
  return out;
}

}  // namespace hgc
