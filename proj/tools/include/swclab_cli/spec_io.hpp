// Copyright 2026 The swclab Authors
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

#ifndef SWCLAB_CLI_SPEC_IO_HPP_
#define SWCLAB_CLI_SPEC_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "swclab/code.hpp"
#include "swclab/counterexample.hpp"
#include "swclab/limits.hpp"
#include "swclab/module.hpp"
#include "swclab/ring.hpp"

namespace swclab::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"ring": {...}, "module": {...}, "bounds": {"max_n": .., "max_gens": ..}}
// Descriptors are kept verbatim after validation.
struct SpecFile {
  json ring;
  std::optional<json> module;
  std::optional<int> max_n;
  std::optional<int> max_gens;
};

// Throws swclab::Error(kInput) with "origin:line:column" on malformed JSON
// and a descriptor path on semantic errors.
SpecFile parse_spec_text(const std::string& text, const std::string& origin);
SpecFile parse_spec(const std::string& path);
SpecFile spec_from_json(const json& j, const std::string& origin);
json spec_to_json(const SpecFile& spec);

RingPtr build_ring(const json& desc, const Limits& limits);
ModulePtr build_module(const RingPtr& ring, const json& desc,
                       const Limits& limits);

struct Instance {
  RingPtr ring;
  ModulePtr module;  // null when the spec has none
};
Instance instantiate(const SpecFile& spec, const Limits& limits);

struct NamedCode {
  std::string name;
  std::vector<Word> generators;
};

struct NamedMap {
  std::string from;
  std::string to;
  std::vector<Word> gen_images;
};

struct PackInfo {
  int m = 0;
  int k = 0;
  int q = 0;
  std::uint64_t length = 0;
  int parameter_order = 0;
  std::string construction;
  json transcript;
};

// {"schema_version": 1, "alphabet": <spec object or path>, "length": n,
//  "codes": [...], "maps": [...], "pack": {...}?}
struct CodesFile {
  SpecFile alphabet;
  int length = 0;
  std::vector<NamedCode> codes;
  std::vector<NamedMap> maps;
  std::optional<PackInfo> pack;
};

// A string "alphabet" is a spec path resolved against base_dir.
CodesFile parse_codes_text(const std::string& text, const std::string& origin,
                           const std::string& base_dir);
CodesFile parse_codes(const std::string& path);
json codes_to_json(const CodesFile& codes);

struct LoadedCodes {
  Instance alphabet;
  std::vector<std::pair<std::string, CodePtr>> codes;
  std::vector<std::pair<std::string, CodeMap>> maps;
  const CodePtr& code(const std::string& name) const;
};
LoadedCodes load_codes(const CodesFile& file, const Limits& limits);

json transcript_to_json(const PackTranscript& t);
CodesFile pack_to_codes(const CounterexamplePack& pack,
                        const SpecFile& alphabet);

}  // namespace swclab::cli

#endif  // SWCLAB_CLI_SPEC_IO_HPP_
