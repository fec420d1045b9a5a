// Copyright 2026 The oBAKE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OBAKE_BYTES_HPP
#define OBAKE_BYTES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace obake {

using Bytes = std::vector<std::uint8_t>;

void store_be16(std::uint16_t value, std::uint8_t* out);
void store_be32(std::uint32_t value, std::uint8_t* out);
void store_be64(std::uint64_t value, std::uint8_t* out);
std::uint16_t load_be16(const std::uint8_t* in);
std::uint32_t load_be32(const std::uint8_t* in);
std::uint64_t load_be64(const std::uint8_t* in);

void append_be16(Bytes& out, std::uint16_t value);
void append_be32(Bytes& out, std::uint32_t value);
void append_be64(Bytes& out, std::uint64_t value);
void append(Bytes& out, std::span<const std::uint8_t> data);
void append(Bytes& out, std::string_view text);

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(std::string_view hex);

}  // namespace obake

#endif  // OBAKE_BYTES_HPP
