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

#include "bp/congest/message.hpp"

#include <stdexcept>
#include <string>

namespace bp::congest {

BitWriter& BitWriter::put(std::uint64_t value, unsigned width) {
  if (width < 64 && (value >> width) != 0) {
    throw std::logic_error("value does not fit in " + std::to_string(width) +
                           " bits");
  }
  // Most significant bit first.
  for (unsigned i = width; i-- > 0;) {
    message_.bits_.push_back(((value >> i) & 1) != 0);
  }
  return *this;
}

BitWriter& BitWriter::optional_id(std::optional<VertexId> value,
                                  unsigned width) {
  flag(value.has_value());
  if (value) id(*value, width);
  return *this;
}

std::uint64_t BitReader::get(unsigned width) {
  if (pos_ + width > bits_.size()) {
    throw std::logic_error("read past end of message");
  }
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) {
    value = (value << 1) | (bits_[pos_++] ? 1 : 0);
  }
  return value;
}

std::optional<VertexId> BitReader::optional_id(unsigned width) {
  if (!flag()) return std::nullopt;
  return id(width);
}

Message tag_message(unsigned tag) { return BitWriter().tag(tag).finish(); }

}  // namespace bp::congest
