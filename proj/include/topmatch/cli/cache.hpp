#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include "json.hpp"
#include "topmatch/transcript_io.hpp"

namespace topmatch::cli {

/// Directory of write-once JSON records, one file per key digest. Writes go
/// to a private temporary file and are renamed into place, so concurrent
/// writers of the same key never expose a partial record.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) throw InputError("cannot create cache directory " + dir_->string() + ": " + ec.message());
  }

  bool enabled() const { return dir_.has_value(); }
  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }

  static std::string digest(const std::string& op, const std::string& subject, const std::string& params) {
    return sha256_hex(op + '\x1f' + subject + '\x1f' + params);
  }

  std::optional<json> get(const std::string& op, const std::string& subject, const std::string& params) {
    if (!dir_) return std::nullopt;
    const auto key = digest(op, subject, params);
    std::ifstream in(path_for(key));
    if (!in) {
      ++misses_;
      return std::nullopt;
    }
    try {
      json rec = json::parse(in);
      if (rec.at("key").get<std::string>() != key || rec.at("op").get<std::string>() != op) {
        ++misses_;
        return std::nullopt;
      }
      ++hits_;
      return rec.at("value");
    } catch (const json::exception&) {
      ++misses_;
      return std::nullopt;
    }
  }

  void put(const std::string& op, const std::string& subject, const std::string& params, const json& value) {
    if (!dir_) return;
    const auto key = digest(op, subject, params);
    const json rec{{"key", key}, {"op", op}, {"params", params}, {"engine_version", kEngineVersion}, {"value", value}};
    std::ostringstream tmp_name;
    tmp_name << ".tmp-" << key << "-" << ::getpid() << "-" << std::this_thread::get_id() << "-" << counter_++;
    const auto tmp = *dir_ / tmp_name.str();
    {
      std::ofstream out(tmp);
      if (!out) return;  // an unwritable cache only costs recomputation
      out << rec.dump();
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_for(key), ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  /// Looks the value up, or computes and stores it.
  template <class Compute>
  json fetch(const std::string& op, const std::string& subject, const std::string& params, Compute&& compute) {
    if (auto hit = get(op, subject, params)) return *hit;
    json value = compute();
    put(op, subject, params, value);
    return value;
  }

 private:
  std::filesystem::path path_for(const std::string& key) const { return *dir_ / (key + ".json"); }

  std::optional<std::filesystem::path> dir_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
  std::atomic<std::size_t> counter_{0};
};

}  // namespace topmatch::cli
