// Copyright 2026 The bpsim Authors
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

#ifndef BP_CONGEST_MESSAGE_HPP_
#define BP_CONGEST_MESSAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bp/errors.hpp"

namespace bp::congest {

// Every wire layout starts with a 4-bit tag.
inline constexpr unsigned kTagBits = 4;

// A bit string. bit_length() is exactly what the engine charges against the
// per-edge budget.
class Message {
 public:
  Message() = default;

  std::size_t bit_length() const { return bits_.size(); }
  const std::vector<bool>& bits() const { return bits_; }
  bool operator==(const Message&) const = default;

 private:
  friend class BitWriter;
  std::vector<bool> bits_;
};

class BitWriter {
 public:
  BitWriter& put(std::uint64_t value, unsigned width);
  BitWriter& flag(bool value) { return put(value ? 1 : 0, 1); }
  BitWriter& tag(unsigned value) { return put(value, kTagBits); }
  BitWriter& id(VertexId value, unsigned width) { return put(value, width); }
  // Presence bit, then the ID when present.
  BitWriter& optional_id(std::optional<VertexId> value, unsigned width);

  Message finish() { return std::move(message_); }

 private:
  Message message_;
};

class BitReader {
 public:
  explicit BitReader(const Message& message) : bits_(message.bits()) {}

  std::uint64_t get(unsigned width);
  bool flag() { return get(1) != 0; }
  unsigned tag() { return static_cast<unsigned>(get(kTagBits)); }
  VertexId id(unsigned width) { return static_cast<VertexId>(get(width)); }
  std::optional<VertexId> optional_id(unsigned width);

 private:
  const std::vector<bool>& bits_;
  std::size_t pos_ = 0;
};

// Tag-only message.
Message tag_message(unsigned tag);

}  // namespace bp::congest

#endif  // BP_CONGEST_MESSAGE_HPP_
