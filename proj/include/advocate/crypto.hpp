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
#include <stdexcept>
#include <string_view>

#include <sodium.h>

#include "advocate/errors.hpp"
#include "advocate/util.hpp"

namespace advocate::crypto {

using Digest = std::array<uint8_t, 32>;
using PublicKey = std::array<uint8_t, 32>;
using SecretSeed = std::array<uint8_t, 32>;
using SignatureBytes = std::array<uint8_t, 64>;

inline void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialization failed");
}

inline Digest sha256(const uint8_t* data, size_t len) {
  ensure_sodium();
  Digest out{};
  crypto_hash_sha256(out.data(), data, static_cast<unsigned long long>(len));
  return out;
}

inline Digest sha256(const Bytes& data) { return sha256(data.data(), data.size()); }

inline Digest sha256(std::string_view data) {
  return sha256(reinterpret_cast<const uint8_t*>(data.data()), data.size());
}

inline SecretSeed random_seed() {
  ensure_sodium();
  SecretSeed seed{};
  randombytes_buf(seed.data(), seed.size());
  return seed;
}

// Ed25519 public key derived from a 32-byte seed. The seed is the stored
// secret; the expanded 64-byte secret key is rebuilt on demand for signing.
inline PublicKey ed25519_public_key(const SecretSeed& seed) {
  ensure_sodium();
  PublicKey pk{};
  std::array<uint8_t, crypto_sign_SECRETKEYBYTES> sk{};
  crypto_sign_seed_keypair(pk.data(), sk.data(), seed.data());
  sodium_memzero(sk.data(), sk.size());
  return pk;
}

inline SignatureBytes ed25519_sign(const SecretSeed& seed, std::string_view message) {
  ensure_sodium();
  PublicKey pk{};
  std::array<uint8_t, crypto_sign_SECRETKEYBYTES> sk{};
  crypto_sign_seed_keypair(pk.data(), sk.data(), seed.data());
  SignatureBytes sig{};
  crypto_sign_detached(sig.data(), nullptr,
                       reinterpret_cast<const uint8_t*>(message.data()), message.size(),
                       sk.data());
  sodium_memzero(sk.data(), sk.size());
  return sig;
}

inline bool ed25519_verify(const PublicKey& pk, std::string_view message,
                           const SignatureBytes& sig) {
  ensure_sodium();
  return crypto_sign_verify_detached(sig.data(),
                                     reinterpret_cast<const uint8_t*>(message.data()),
                                     message.size(), pk.data()) == 0;
}

}  // namespace advocate::crypto
