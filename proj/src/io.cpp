#include "symbell/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <ctime>

#include "symbell/polytope.hpp"

namespace symbell {
namespace {

constexpr i64 kJsonSafe = (1LL << 53) - 1;

i64 require_int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw precondition_error(std::string("missing field '") + key + "' in JSON input");
  return int_from_json(j.at(key));
}

}  // namespace

json json_int(i64 v) {
  if (v > kJsonSafe || v < -kJsonSafe) return json(std::to_string(v));
  return json(v);
}

i64 int_from_json(const json& v) {
  if (v.is_number_integer()) return v.get<i64>();
  if (v.is_number_unsigned()) {
    const std::uint64_t u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX))
      throw precondition_error("integer out of 64-bit range in JSON input");
    return static_cast<i64>(u);
  }
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    try {
      std::size_t pos = 0;
      const i64 parsed = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return parsed;
    } catch (const std::exception&) {
      throw precondition_error("malformed integer string '" + s + "' in JSON input");
    }
  }
  throw precondition_error("expected an integer (or integer string) in JSON input");
}

json to_json(const SymmetricVector& v) {
  json j;
  j["s0"] = json_int(v.s0);
  j["s1"] = json_int(v.s1);
  j["s00"] = json_int(v.s00);
  j["s01"] = json_int(v.s01);
  j["s11"] = json_int(v.s11);
  return j;
}

json to_json(const BellInequality& q) {
  json j;
  j["n"] = json_int(q.n);
  j["alpha"] = json_int(q.alpha);
  j["beta"] = json_int(q.beta);
  j["gamma"] = json_int(q.gamma);
  j["delta"] = json_int(q.delta);
  j["epsilon"] = json_int(q.epsilon);
  j["beta_c"] = json_int(q.beta_c);
  return j;
}

json to_json(const StrategyCounts& p) {
  json j;
  j["a"] = json_int(p.a);
  j["b"] = json_int(p.b);
  j["c"] = json_int(p.c);
  j["d"] = json_int(p.d);
  j["n"] = json_int(p.n);
  return j;
}

SymmetricVector symvec_from_json(const json& j) {
  SymmetricVector v;
  v.s0 = require_int_field(j, "s0");
  v.s1 = require_int_field(j, "s1");
  v.s00 = require_int_field(j, "s00");
  v.s01 = require_int_field(j, "s01");
  v.s11 = require_int_field(j, "s11");
  return v;
}

BellInequality ineq_from_json(const json& j) {
  BellInequality q;
  q.n = require_int_field(j, "n");
  q.alpha = require_int_field(j, "alpha");
  q.beta = require_int_field(j, "beta");
  q.gamma = require_int_field(j, "gamma");
  q.delta = require_int_field(j, "delta");
  q.epsilon = require_int_field(j, "epsilon");
  q.beta_c = require_int_field(j, "beta_c");
  return q;
}

std::string facets_to_jsonl(const FacetList& fl) {
  std::string out;
  for (const BellInequality& f : fl.facets) {
    out += to_json(f).dump();
    out += '\n';
  }
  return out;
}

std::string facets_to_csv(const FacetList& fl) {
  std::string out = "n,alpha,beta,gamma,delta,epsilon,beta_c\n";
  for (const BellInequality& f : fl.facets) {
    out += std::to_string(f.n) + ',' + std::to_string(f.alpha) + ',' +
           std::to_string(f.beta) + ',' + std::to_string(f.gamma) + ',' +
           std::to_string(f.delta) + ',' + std::to_string(f.epsilon) + ',' +
           std::to_string(f.beta_c) + '\n';
  }
  return out;
}

std::string sha256_hex(const std::string& payload) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1)
    throw internal_error("SHA-256 digest computation failed");
  std::string hex(2 * len, '0');
  static const char* k = "0123456789abcdef";
  for (unsigned int i = 0; i < len; ++i) {
    hex[2 * i] = k[digest[i] >> 4];
    hex[2 * i + 1] = k[digest[i] & 0xf];
  }
  return hex;
}

json RunManifest::to_json() const {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["parameters"] = parameters;
  j["version"] = version;
  j["timestamp"] = timestamp;
  j["output_sha256"] = output_sha256;
  return j;
}

RunManifest make_manifest(const std::string& command, json parameters,
                          const std::string& payload) {
  RunManifest m;
  m.command = command;
  m.parameters = std::move(parameters);
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  m.timestamp = buf;
  m.output_sha256 = sha256_hex(payload);
  return m;
}

}  // namespace symbell
