#pragma once

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <openssl/evp.h>

#include <json.hpp>

#include "glk/error.hpp"

#ifndef GLK_VERSION
#define GLK_VERSION "0.0.0"
#endif

namespace glk {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::InvalidArgument, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::InvalidArgument, "cannot write " + path);
  out << data;
}

inline std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorCode::InvalidArgument, "SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

/// UTC time, or SOURCE_DATE_EPOCH when set so reruns can be byte-identical.
inline std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct RunManifest {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::optional<unsigned long long> seed;
  nlohmann::json inputs = nlohmann::json::object();  // path -> sha256
  std::string timestamp = utc_timestamp();

  void add_input(const std::string& path, const std::string& contents) { inputs[path] = sha256_hex(contents); }

  nlohmann::json to_json() const {
    nlohmann::json j{{"command", command}, {"params", params}, {"version", GLK_VERSION},
                     {"inputs", inputs},   {"timestamp", timestamp}};
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return j;
  }
};

}  // namespace glk
