// Copyright Advocate Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advocate/crypto.hpp"
#include "advocate/errors.hpp"
#include "advocate/util.hpp"

namespace advocate::cas {

// Content address: SHA-256 over the raw blob bytes, rendered as
// "sha2-256:<64 hex chars>". The digest is always exactly 32 bytes.
struct ContentHash {
  crypto::Digest digest{};

  static constexpr std::string_view kPrefix = "sha2-256:";

  static ContentHash of(std::string_view content) {
    return ContentHash{crypto::sha256(content)};
  }

  std::string render() const { return std::string(kPrefix) + hex_encode(digest); }

  static std::optional<ContentHash> parse(std::string_view text) {
    if (text.size() != kPrefix.size() + 64 || text.substr(0, kPrefix.size()) != kPrefix) {
      return std::nullopt;
    }
    auto bytes = hex_decode(text.substr(kPrefix.size()));
    if (!bytes || bytes->size() != 32) return std::nullopt;
    ContentHash h;
    std::copy(bytes->begin(), bytes->end(), h.digest.begin());
    return h;
  }

  // Parse that throws; for internal paths where the rendering is trusted input.
  static ContentHash parse_or_throw(std::string_view text) {
    auto h = parse(text);
    if (!h) throw Error(ErrorCode::MalformedClaim, "bad content hash: " + std::string(text));
    return *h;
  }

  bool operator==(const ContentHash& other) const { return digest == other.digest; }
  bool operator!=(const ContentHash& other) const { return digest != other.digest; }
  bool operator<(const ContentHash& other) const { return digest < other.digest; }
};

// Local content-addressable store. Blobs are immutable files laid out as
// <root>/<first-2-hex>/<full-hex> holding the exact byte sequence with no
// envelope. The read path re-hashes and compares against the address, so
// on-disk tampering surfaces as IntegrityViolation instead of bad data.
class Store {
 public:
  explicit Store(fs::path root) : root_(std::move(root)) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) throw Error(ErrorCode::StoreUnavailable, "cannot create " + root_.string());
  }

  ContentHash put(std::string_view content) {
    ContentHash hash = ContentHash::of(content);
    fs::path path = blob_path(hash);
    if (fs::exists(path)) return hash;  // idempotent: one blob per content
    try {
      atomic_write_file(path, content);
    } catch (const Error& e) {
      throw Error(ErrorCode::StoreUnavailable, e.what());
    }
    return hash;
  }

  std::string get(const ContentHash& hash) const {
    auto content = read_file_if_exists(blob_path(hash));
    if (!content) {
      throw Error(ErrorCode::NotFound, "no blob for " + hash.render());
    }
    if (ContentHash::of(*content) != hash) {
      throw Error(ErrorCode::IntegrityViolation,
                  "blob digest mismatch for " + hash.render());
    }
    return *content;
  }

  bool has(const ContentHash& hash) const { return fs::exists(blob_path(hash)); }

  // Visits every stored blob (integrity-checked). Used for index rebuilds and
  // for locating claims whose index row went missing.
  void scan(const std::function<void(const ContentHash&, const std::string&)>& fn) const {
    if (!fs::exists(root_)) return;
    for (const auto& shard : fs::directory_iterator(root_)) {
      if (!shard.is_directory()) continue;
      for (const auto& entry : fs::directory_iterator(shard.path())) {
        if (!entry.is_regular_file()) continue;
        auto name = entry.path().filename().string();
        auto digest = hex_decode(name);
        if (!digest || digest->size() != 32) continue;  // stray temp file
        ContentHash hash;
        std::copy(digest->begin(), digest->end(), hash.digest.begin());
        auto content = read_file_if_exists(entry.path());
        if (!content || ContentHash::of(*content) != hash) continue;
        fn(hash, *content);
      }
    }
  }

  size_t blob_count() const {
    size_t n = 0;
    scan([&](const ContentHash&, const std::string&) { ++n; });
    return n;
  }

  fs::path blob_path(const ContentHash& hash) const {
    std::string hex = hex_encode(hash.digest);
    return root_ / hex.substr(0, 2) / hex;
  }

  const fs::path& root() const { return root_; }

 private:
  fs::path root_;
};

}  // namespace advocate::cas
