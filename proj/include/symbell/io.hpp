#pragma once
// Serialization (schema "symbell/1"), CSV emission, and run manifests.
// Integers outside the 53-bit range are serialized as strings so that
// JSON round-trips stay lossless.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symbell/types.hpp"

namespace symbell {

struct FacetList;

inline constexpr const char* kSchema = "symbell/1";
inline constexpr const char* kArtifactVersion = "1.0.0";

using json = nlohmann::ordered_json;

// i64 <-> JSON value honoring the 53-bit string rule.
json json_int(i64 v);
i64 int_from_json(const json& v);

json to_json(const SymmetricVector& v);
json to_json(const BellInequality& q);
json to_json(const StrategyCounts& p);
SymmetricVector symvec_from_json(const json& j);
BellInequality ineq_from_json(const json& j);

// Facet streams: one canonical inequality per line (JSON-lines), or CSV
// with header n,alpha,beta,gamma,delta,epsilon,beta_c.
std::string facets_to_jsonl(const FacetList& fl);
std::string facets_to_csv(const FacetList& fl);

std::string sha256_hex(const std::string& payload);

struct RunManifest {
  std::string command;
  json parameters;
  std::string version = kArtifactVersion;
  std::string timestamp;        // ISO-8601 UTC, excluded from determinism
  std::string output_sha256;

  json to_json() const;
};

RunManifest make_manifest(const std::string& command, json parameters,
                          const std::string& payload);

}  // namespace symbell
