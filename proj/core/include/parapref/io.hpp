// Copyright 2026 The parapref Authors.
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

#ifndef PARAPREF_IO_HPP_
#define PARAPREF_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace parapref {

// One document per line. Lines that parse as a JSON object take the string
// field "text" (JSONL corpora); anything else is used verbatim. Blank lines
// are skipped. Decided per line, so plain text lines starting with '{' that
// are not valid JSON objects still load.
std::vector<std::string> read_corpus(const std::string& path);

std::string read_file(const std::string& path);
std::vector<std::string> read_lines(const std::string& path);
void write_file(const std::string& path, const std::string& data);

// FNV-1a 64-bit, hex encoded; used for manifest content hashes.
std::string fnv1a_hex(const std::string& bytes);
std::string file_hash_hex(const std::string& path);

// Little-endian binary primitives for the index/checkpoint formats.
namespace bin {
void put_u8(std::ostream& os, uint8_t v);
void put_u32(std::ostream& os, uint32_t v);
void put_u64(std::ostream& os, uint64_t v);
void put_i32(std::ostream& os, int32_t v);
void put_f64(std::ostream& os, double v);
void put_string(std::ostream& os, const std::string& s);

uint8_t get_u8(std::istream& is);
uint32_t get_u32(std::istream& is);
uint64_t get_u64(std::istream& is);
int32_t get_i32(std::istream& is);
double get_f64(std::istream& is);
std::string get_string(std::istream& is);
}  // namespace bin

}  // namespace parapref

#endif  // PARAPREF_IO_HPP_
