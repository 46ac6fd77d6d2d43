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


#include "swclab_cli/spec_io.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "swclab/error.hpp"

namespace swclab::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points at the offending character.
    const size_t end = std::min<size_t>(e.byte > 0 ? e.byte - 1 : 0,
                                        text.size());
    int line = 1;
    int column = 1;
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(origin + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": parse error");
  }
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
}

void allow_keys(const json& j, std::initializer_list<const char*> keys,
                const std::string& path) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw InputError(path + ": unknown key \"" + it.key() + "\"");
    }
  }
}

const json& field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw InputError(path + ": missing \"" + std::string(key) + "\"");
  }
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) {
    throw InputError(path + ": integer out of range");
  }
  return static_cast<int>(v);
}

int int_field(const json& j, const char* key, const std::string& path) {
  return as_int(field(j, key, path), path + "." + key);
}

std::string string_field(const json& j, const char* key,
                         const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_string()) {
    throw InputError(path + "." + key + ": expected a string");
  }
  return v.get<std::string>();
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<int>> int_table(const json& j,
                                        const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(int_list(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void validate_ring(const json& d, const std::string& path) {
  expect_object(d, path);
  const std::string kind = string_field(d, "kind", path);
  if (kind == "matrix") {
    allow_keys(d, {"kind", "m", "q"}, path);
    int_field(d, "m", path);
    int_field(d, "q", path);
  } else if (kind == "mod_n") {
    allow_keys(d, {"kind", "n"}, path);
    int_field(d, "n", path);
  } else if (kind == "product") {
    allow_keys(d, {"kind", "factors"}, path);
    const json& f = field(d, "factors", path);
    if (!f.is_array() || f.empty()) {
      throw InputError(path + ".factors: expected a non-empty array");
    }
    for (size_t i = 0; i < f.size(); ++i) {
      validate_ring(f[i], path + ".factors[" + std::to_string(i) + "]");
    }
  } else if (kind == "table") {
    allow_keys(d, {"kind", "add", "mul"}, path);
    int_table(field(d, "add", path), path + ".add");
    int_table(field(d, "mul", path), path + ".mul");
  } else {
    throw InputError(path + ".kind: unknown ring kind \"" + kind + "\"");
  }
}

void validate_module(const json& d, const json& ring, const std::string& path) {
  expect_object(d, path);
  const std::string kind = string_field(d, "kind", path);
  const std::string ring_kind = ring.at("kind").get<std::string>();
  if (kind == "column") {
    allow_keys(d, {"kind", "k"}, path);
    int_field(d, "k", path);
    if (ring_kind != "matrix") {
      throw InputError(path + ": column module needs a matrix ring, got " +
                       ring_kind);
    }
  } else if (kind == "regular") {
    allow_keys(d, {"kind"}, path);
  } else if (kind == "mod_m") {
    allow_keys(d, {"kind", "m"}, path);
    int_field(d, "m", path);
    if (ring_kind != "mod_n") {
      throw InputError(path + ": mod_m module needs a mod_n ring, got " +
                       ring_kind);
    }
  } else if (kind == "direct_sum") {
    allow_keys(d, {"kind", "summands"}, path);
    const json& s = field(d, "summands", path);
    if (!s.is_array() || s.empty()) {
      throw InputError(path + ".summands: expected a non-empty array");
    }
    for (size_t i = 0; i < s.size(); ++i) {
      validate_module(s[i], ring, path + ".summands[" + std::to_string(i) + "]");
    }
  } else if (kind == "table") {
    allow_keys(d, {"kind", "add", "act"}, path);
    int_table(field(d, "add", path), path + ".add");
    int_table(field(d, "act", path), path + ".act");
  } else {
    throw InputError(path + ".kind: unknown module kind \"" + kind + "\"");
  }
}

std::vector<Word> word_list(const json& j, const std::string& path) {
  return int_table(j, path);
}

json words_json(const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(w);
  return out;
}

}  // namespace

SpecFile spec_from_json(const json& j, const std::string& origin) {
  expect_object(j, origin);
  allow_keys(j, {"ring", "module", "bounds"}, origin);
  SpecFile spec;
  spec.ring = field(j, "ring", origin);
  validate_ring(spec.ring, "ring");
  if (j.contains("module")) {
    spec.module = j.at("module");
    validate_module(*spec.module, spec.ring, "module");
  }
  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    expect_object(b, "bounds");
    allow_keys(b, {"max_n", "max_gens"}, "bounds");
    if (b.contains("max_n")) spec.max_n = int_field(b, "max_n", "bounds");
    if (b.contains("max_gens")) {
      spec.max_gens = int_field(b, "max_gens", "bounds");
    }
  }
  return spec;
}

SpecFile parse_spec_text(const std::string& text, const std::string& origin) {
  return spec_from_json(parse_json(text, origin), origin);
}

SpecFile parse_spec(const std::string& path) {
  return parse_spec_text(read_file(path), path);
}

json spec_to_json(const SpecFile& spec) {
  json j;
  j["ring"] = spec.ring;
  if (spec.module) j["module"] = *spec.module;
  if (spec.max_n || spec.max_gens) {
    json b = json::object();
    if (spec.max_n) b["max_n"] = *spec.max_n;
    if (spec.max_gens) b["max_gens"] = *spec.max_gens;
    j["bounds"] = b;
  }
  return j;
}

RingPtr build_ring(const json& d, const Limits& limits) {
  const std::string kind = d.at("kind").get<std::string>();
  if (kind == "matrix") {
    return make_matrix_ring(d.at("m").get<int>(), d.at("q").get<int>(), limits);
  }
  if (kind == "mod_n") return make_mod_n_ring(d.at("n").get<int>(), limits);
  if (kind == "product") {
    std::vector<RingPtr> factors;
    for (const json& f : d.at("factors")) {
      factors.push_back(build_ring(f, limits));
    }
    return make_product_ring(factors, limits);
  }
  return make_table_ring(int_table(d.at("add"), "ring.add"),
                         int_table(d.at("mul"), "ring.mul"), limits);
}

ModulePtr build_module(const RingPtr& ring, const json& d,
                       const Limits& limits) {
  const std::string kind = d.at("kind").get<std::string>();
  if (kind == "column") {
    return make_column_module(ring, d.at("k").get<int>(), limits);
  }
  if (kind == "regular") return make_regular_module(ring, limits);
  if (kind == "mod_m") {
    return make_mod_m_module(ring, d.at("m").get<int>(), limits);
  }
  if (kind == "direct_sum") {
    std::vector<ModulePtr> summands;
    for (const json& s : d.at("summands")) {
      summands.push_back(build_module(ring, s, limits));
    }
    return make_direct_sum(ring, summands, limits);
  }
  return make_table_module(ring, int_table(d.at("add"), "module.add"),
                           int_table(d.at("act"), "module.act"), limits);
}

Instance instantiate(const SpecFile& spec, const Limits& limits) {
  Instance inst;
  inst.ring = build_ring(spec.ring, limits);
  if (spec.module) inst.module = build_module(inst.ring, *spec.module, limits);
  return inst;
}

CodesFile parse_codes_text(const std::string& text, const std::string& origin,
                           const std::string& base_dir) {
  const json j = parse_json(text, origin);
  expect_object(j, origin);
  allow_keys(j, {"schema_version", "alphabet", "length", "codes", "maps", "pack"},
             origin);
  if (int_field(j, "schema_version", origin) != kSchemaVersion) {
    throw InputError(origin + ": unsupported schema_version");
  }
  CodesFile out;
  const json& alphabet = field(j, "alphabet", origin);
  if (alphabet.is_string()) {
    std::filesystem::path p(alphabet.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    out.alphabet = parse_spec(p.string());
  } else {
    out.alphabet = spec_from_json(alphabet, "alphabet");
  }
  if (!out.alphabet.module) throw InputError("alphabet: missing module");
  out.length = int_field(j, "length", origin);
  if (out.length < 1) throw InputError("length: must be positive");
  const json& codes = field(j, "codes", origin);
  if (!codes.is_array()) throw InputError("codes: expected an array");
  for (size_t i = 0; i < codes.size(); ++i) {
    const std::string path = "codes[" + std::to_string(i) + "]";
    expect_object(codes[i], path);
    allow_keys(codes[i], {"name", "generators"}, path);
    out.codes.push_back({string_field(codes[i], "name", path),
                         word_list(field(codes[i], "generators", path),
                                   path + ".generators")});
  }
  if (j.contains("maps")) {
    const json& maps = j.at("maps");
    if (!maps.is_array()) throw InputError("maps: expected an array");
    for (size_t i = 0; i < maps.size(); ++i) {
      const std::string path = "maps[" + std::to_string(i) + "]";
      expect_object(maps[i], path);
      allow_keys(maps[i], {"from", "to", "gen_images"}, path);
      out.maps.push_back({string_field(maps[i], "from", path),
                          string_field(maps[i], "to", path),
                          word_list(field(maps[i], "gen_images", path),
                                    path + ".gen_images")});
    }
  }
  if (j.contains("pack")) {
    const json& p = j.at("pack");
    expect_object(p, "pack");
    allow_keys(p, {"m", "k", "q", "length", "parameter_order", "construction",
                   "transcript"},
               "pack");
    PackInfo info;
    info.m = int_field(p, "m", "pack");
    info.k = int_field(p, "k", "pack");
    info.q = int_field(p, "q", "pack");
    info.length = static_cast<std::uint64_t>(int_field(p, "length", "pack"));
    info.parameter_order = int_field(p, "parameter_order", "pack");
    info.construction = string_field(p, "construction", "pack");
    info.transcript = field(p, "transcript", "pack");
    expect_object(info.transcript, "pack.transcript");
    out.pack = std::move(info);
  }
  return out;
}

CodesFile parse_codes(const std::string& path) {
  const std::string dir =
      std::filesystem::path(path).parent_path().string();
  return parse_codes_text(read_file(path), path, dir.empty() ? "." : dir);
}

json codes_to_json(const CodesFile& codes) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["alphabet"] = spec_to_json(codes.alphabet);
  j["length"] = codes.length;
  j["codes"] = json::array();
  for (const NamedCode& c : codes.codes) {
    j["codes"].push_back(
        {{"name", c.name}, {"generators", words_json(c.generators)}});
  }
  if (!codes.maps.empty()) {
    j["maps"] = json::array();
    for (const NamedMap& m : codes.maps) {
      j["maps"].push_back({{"from", m.from},
                           {"to", m.to},
                           {"gen_images", words_json(m.gen_images)}});
    }
  }
  if (codes.pack) {
    const PackInfo& p = *codes.pack;
    j["pack"] = {{"m", p.m},
                 {"k", p.k},
                 {"q", p.q},
                 {"length", p.length},
                 {"parameter_order", p.parameter_order},
                 {"construction", p.construction},
                 {"transcript", p.transcript}};
  }
  return j;
}

const CodePtr& LoadedCodes::code(const std::string& name) const {
  for (const auto& [n, c] : codes) {
    if (n == name) return c;
  }
  throw InputError("unknown code \"" + name + "\"");
}

LoadedCodes load_codes(const CodesFile& file, const Limits& limits) {
  LoadedCodes out;
  out.alphabet = instantiate(file.alphabet, limits);
  std::set<std::string> names;
  for (const NamedCode& c : file.codes) {
    if (!names.insert(c.name).second) {
      throw InputError("duplicate code name \"" + c.name + "\"");
    }
    out.codes.emplace_back(c.name, Code::generate(out.alphabet.module,
                                                  file.length, c.generators,
                                                  limits));
  }
  for (const NamedMap& m : file.maps) {
    out.maps.emplace_back(m.from + "->" + m.to,
                          CodeMap::make(out.code(m.from), out.code(m.to),
                                        m.gen_images));
  }
  return out;
}

json transcript_to_json(const PackTranscript& t) {
  return {{"length_ok", t.length_ok},
          {"bijection_ok", t.bijection_ok},
          {"hamming_ok", t.hamming_ok},
          {"swc_ok", t.swc_ok},
          {"zero_column_ok", t.zero_column_ok},
          {"non_extension_ok", t.non_extension_ok},
          {"all_pass", t.all_pass()},
          {"certificate", t.non_extension_certificate},
          {"aut_order", t.aut_order},
          {"zero_columns_plus", t.zero_columns_plus},
          {"zero_columns_minus", t.zero_columns_minus},
          {"candidate_space", t.candidate_space},
          {"search_nodes", t.search_nodes},
          {"tau_tests", t.tau_tests}};
}

CodesFile pack_to_codes(const CounterexamplePack& pack,
                        const SpecFile& alphabet) {
  CodesFile out;
  out.alphabet = alphabet;
  out.alphabet.max_n.reset();
  out.alphabet.max_gens.reset();
  out.length = static_cast<int>(pack.length);
  out.codes.push_back({"C_plus", pack.plus->generators()});
  out.codes.push_back({"C_minus", pack.minus->generators()});
  out.maps.push_back({"C_plus", "C_minus", pack.f.gen_images()});
  PackInfo info;
  info.m = pack.m;
  info.k = pack.k;
  info.q = pack.q;
  info.length = pack.length;
  info.parameter_order = pack.parameter_order;
  info.construction = pack.construction;
  info.transcript = transcript_to_json(pack.transcript);
  out.pack = std::move(info);
  return out;
}

}  // namespace swclab::cli
