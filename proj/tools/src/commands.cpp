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


#include "swclab_cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "swclab/automorphism.hpp"
#include "swclab/code.hpp"
#include "swclab/counterexample.hpp"
#include "swclab/extension.hpp"
#include "swclab/ring.hpp"
#include "swclab/socle.hpp"
#include "swclab/version.hpp"

namespace swclab::cli {
namespace {

constexpr int kMaxListedAutomorphisms = 256;

std::string kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
      return "input";
    case ErrorKind::kGuardExceeded:
      return "guard-exceeded";
    case ErrorKind::kHypothesisUnmet:
      return "hypotheses-unmet";
    case ErrorKind::kUnsupported:
      return "unsupported";
    case ErrorKind::kInternal:
      return "internal";
  }
  return "unknown";
}

std::optional<int> env_int(const Invocation& inv, const char* name) {
  const char* raw = inv.getenv ? inv.getenv(name) : std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > (1L << 30)) {
    throw InputError(std::string(name) + ": expected a non-negative integer");
  }
  return static_cast<int>(v);
}

json limits_json(const Limits& l) {
  return {{"max_table_order", l.max_table_order},
          {"max_order", l.max_order},
          {"max_code_size", l.max_code_size},
          {"max_ambient_order", l.max_ambient_order},
          {"max_search_steps", l.max_search_steps},
          {"max_extension_work", l.max_extension_work},
          {"max_n", l.max_n},
          {"max_gens", l.max_gens}};
}

json partition_json(const OrbitIndex& index) {
  json out = json::array();
  for (int c : index.classes()) out.push_back(index.members(c));
  return out;
}

std::string profile_key(const WeightProfile& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, count] : p.counts) {
    if (!first) os << ",";
    first = false;
    os << label << ":" << count;
  }
  return os.str();
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

struct Context {
  const Invocation& inv;
  std::optional<SpecFile> spec;
  Limits limits;
  json inputs = json::object();

  Instance instance() const {
    if (!spec) throw InputError("this command needs a spec file");
    return instantiate(*spec, limits);
  }
  ModulePtr module() const {
    Instance inst = instance();
    if (!inst.module) throw InputError("spec has no module descriptor");
    return inst.module;
  }
  CodesFile codes() const {
    if (!inv.codes_path) throw InputError("this command needs --codes");
    return parse_codes(*inv.codes_path);
  }
};

using Handler = CommandResult (*)(Context&);

CommandResult verdict_result(const VerdictReport& r) {
  return {{{"verdict", verdict_to_json(r)}}, exit_code(r.result), {}};
}

CommandResult ring_info(Context& ctx) {
  const RingPtr ring = ctx.instance().ring;
  const Ring& r = *ring;
  json out;
  out["name"] = r.name();
  out["order"] = r.order();
  out["one"] = r.one();
  int units = 0;
  bool commutative = true;
  for (int a = 0; a < r.order(); ++a) {
    units += r.is_unit(a);
    for (int b = 0; b < r.order() && commutative; ++b) {
      commutative = r.mul(a, b) == r.mul(b, a);
    }
  }
  out["units"] = units;
  out["commutative"] = commutative;
  LeftIdeal rad = jacobson_radical(r);
  out["radical"] = rad.members;
  out["semisimple"] = rad.size() == 1;
  out["left_ideals"] = left_ideals_enumerate(r, ctx.limits).size();
  out["left_pir"] = is_left_pir(r, ctx.limits);
  json blocks = json::array();
  for (const WedderburnBlock& b : wedderburn_data(r, ctx.limits).blocks) {
    blocks.push_back({{"mu", b.mu}, {"q", b.q}});
  }
  out["wedderburn_blocks"] = blocks;
  return {{{"ring", out}}, kExitOk, {}};
}

CommandResult socle_report_cmd(Context& ctx) {
  const ModulePtr module = ctx.module();
  SocleReport s = socle_report(module, ctx.limits);
  SimpleCatalog catalog = simple_catalog(module->ring_ptr(), ctx.limits);
  json simples = json::array();
  for (size_t i = 0; i < catalog.entries.size(); ++i) {
    simples.push_back({{"order", catalog.entries[i].module->order()},
                       {"mu", s.mu[i]},
                       {"endo_order", s.endo_orders[i]},
                       {"multiplicity", s.multiplicities[i]}});
  }
  json out;
  out["module"] = module->name();
  out["module_order"] = module->order();
  out["socle"] = s.socle.members;
  out["simples"] = simples;
  out["cyclic"] = s.cyclic;
  out["cyclic_by_generator"] = s.cyclic_by_generator;
  out["socle_generator"] =
      s.socle_generator ? json(*s.socle_generator) : json(nullptr);
  out["cyclic_by_embedding"] =
      s.cyclic_by_embedding ? json(*s.cyclic_by_embedding) : json(nullptr);
  out["methods_agree"] = s.methods_agree;
  return {{{"socle", out}}, kExitOk, {}};
}

CommandResult aut_group_cmd(Context& ctx) {
  const ModulePtr module = ctx.module();
  AutGroup g = AutGroup::full(module, ctx.limits);
  json out;
  out["module"] = module->name();
  out["order"] = g.size();
  if (g.size() <= kMaxListedAutomorphisms) {
    out["elements"] = g.elements();
  } else {
    out["elements"] = nullptr;
  }
  return {{{"aut_group", out}}, kExitOk, {}};
}

CommandResult orbits_cmd(Context& ctx) {
  const ModulePtr module = ctx.module();
  AutGroup g = AutGroup::full(module, ctx.limits);
  OrbitIndex sim = orbit_partition(g);
  OrbitIndex ann = annihilator_partition(*module);
  json out;
  out["module"] = module->name();
  out["aut_orbits"] = partition_json(sim);
  out["annihilator_classes"] = partition_json(ann);
  out["refines"] = refines(sim, ann);
  out["equal"] = sim.label == ann.label;
  return {{{"orbits", out}}, kExitOk, {}};
}

CommandResult weights_cmd(Context& ctx) {
  const CodesFile file = ctx.codes();
  ctx.inputs["codes"] = codes_to_json(file);
  LoadedCodes loaded = load_codes(file, ctx.limits);
  AutGroup g = AutGroup::full(loaded.alphabet.module, ctx.limits);
  OrbitIndex sim = orbit_partition(g);
  OrbitIndex ann = annihilator_partition(*loaded.alphabet.module);
  json codes = json::object();
  for (const auto& [name, code] : loaded.codes) {
    std::map<std::string, int> ham, swc, aw;
    for (const Word& c : code->elements()) {
      ++ham[std::to_string(hamming_weight(c))];
      ++swc[profile_key(weight_profile(c, WeightKind::kSwc, &sim))];
      ++aw[profile_key(weight_profile(c, WeightKind::kAw, &ann))];
    }
    codes[name] = {{"size", code->size()},
                   {"hamming", ham},
                   {"swc", swc},
                   {"aw", aw}};
  }
  json maps = json::object();
  for (const auto& [name, f] : loaded.maps) {
    maps[name] = {{"hamming", map_preserves(f, WeightKind::kHamming)},
                  {"swc", map_preserves(f, WeightKind::kSwc, &sim)},
                  {"aw", map_preserves(f, WeightKind::kAw, &ann)}};
  }
  return {{{"codes", codes}, {"maps", maps}}, kExitOk, {}};
}

CommandResult ep_counterexample(Context& ctx) {
  int m = 0, k = 0, q = 0;
  if (ctx.inv.m || ctx.inv.k || ctx.inv.q) {
    if (!ctx.inv.m || !ctx.inv.k || !ctx.inv.q) {
      throw InputError("--m, --k and --q must be given together");
    }
    m = *ctx.inv.m;
    k = *ctx.inv.k;
    q = *ctx.inv.q;
  } else {
    if (!ctx.spec || !ctx.spec->module ||
        ctx.spec->ring.at("kind") != "matrix" ||
        ctx.spec->module->at("kind") != "column") {
      throw InputError(
          "ep-counterexample needs --m/--k/--q or a matrix/column spec");
    }
    m = ctx.spec->ring.at("m").get<int>();
    q = ctx.spec->ring.at("q").get<int>();
    k = ctx.spec->module->at("k").get<int>();
  }
  ctx.inputs["parameters"] = {
      {"m", m}, {"k", k}, {"q", q}, {"force_search", ctx.inv.force_search}};
  BuildOptions options;
  options.force_search = ctx.inv.force_search;
  CounterexamplePack pack = build_counterexample(m, k, q, ctx.limits, options);
  SpecFile alphabet;
  alphabet.ring = {{"kind", "matrix"}, {"m", m}, {"q", q}};
  alphabet.module = json{{"kind", "column"}, {"k", k}};
  const json codes = codes_to_json(pack_to_codes(pack, alphabet));
  if (ctx.inv.out_path) write_file(*ctx.inv.out_path, codes);
  json out;
  out["length"] = pack.length;
  out["expected_length"] = counterexample_length(q, k);
  out["construction"] = pack.construction;
  out["transcript"] = transcript_to_json(pack.transcript);
  out["pack"] = codes;
  return {{{"counterexample", out}}, kExitFails, {}};
}

CommandResult ep_check_extension(Context& ctx) {
  const CodesFile file = ctx.codes();
  ctx.inputs["codes"] = codes_to_json(file);
  LoadedCodes loaded = load_codes(file, ctx.limits);
  AutGroup g = AutGroup::full(loaded.alphabet.module, ctx.limits);
  json maps = json::object();
  bool any_fails = false;
  bool any_unknown = false;
  for (const auto& [name, f] : loaded.maps) {
    json m;
    try {
      ExtensionSearch es = extension_search(f, g, ctx.limits);
      m["certificate"] = "exhaustive-search";
      m["extends"] = es.transform.has_value();
      m["transform"] = es.transform
                           ? json{{"sigma", es.transform->sigma},
                                  {"taus", es.transform->taus}}
                           : json(nullptr);
      m["compatible_pairs"] = es.compatible_pairs;
      m["search_nodes"] = es.nodes;
      m["tau_tests"] = es.tau_tests;
      any_fails = any_fails || !es.transform;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kGuardExceeded) throw;
      const int zp = count_zero_columns(f.source());
      const int zm = count_zero_columns(f.target());
      m["zero_columns_source"] = zp;
      m["zero_columns_target"] = zm;
      if (zp != zm) {
        m["certificate"] = "zero-column";
        m["extends"] = false;
        any_fails = true;
      } else {
        m["certificate"] = "none";
        m["extends"] = nullptr;
        m["note"] = e.what();
        any_unknown = true;
      }
    }
    maps[name] = m;
  }
  json out;
  out["maps"] = maps;
  if (file.pack && !loaded.maps.empty()) {
    PackTranscript t = verify_pack(loaded.maps.front().second,
                                   file.pack->length,
                                   file.pack->parameter_order, ctx.limits);
    out["replay"] = transcript_to_json(t);
    out["replay_matches_recorded"] =
        out["replay"] == file.pack->transcript;
  }
  const int code = any_fails ? kExitFails : any_unknown ? kExitGuard : kExitOk;
  return {{{"extension", out}}, code, {}};
}

CommandResult verify_orbit_lemma_cmd(Context& ctx) {
  return verdict_result(verify_orbit_lemma(ctx.module(), ctx.limits));
}

CommandResult verify_midway_cmd(Context& ctx) {
  return verdict_result(verify_midway(ctx.module(), ctx.limits));
}

CommandResult verify_sufficiency_cmd(Context& ctx) {
  return verdict_result(verify_sufficiency(ctx.module(), ctx.limits));
}

CommandResult verify_necessity_cmd(Context& ctx) {
  NecessityResult n = verify_necessity(ctx.module(), ctx.limits);
  CommandResult out = verdict_result(n.report);
  if (n.pack) {
    const json codes = codes_to_json(pack_to_codes(*n.pack, *ctx.spec));
    if (ctx.inv.out_path) write_file(*ctx.inv.out_path, codes);
    out.report["pack"] = codes;
  }
  return out;
}

CommandResult verify_all_cmd(Context& ctx) {
  const ModulePtr module = ctx.module();
  const bool cyclic = socle_report(module, ctx.limits).cyclic;
  VerdictReport orbit = verify_orbit_lemma(module, ctx.limits);
  VerdictReport midway = verify_midway(module, ctx.limits);
  VerdictReport suff = verify_sufficiency(module, ctx.limits);
  NecessityResult nec = verify_necessity(module, ctx.limits);
  const bool dichotomy =
      cyclic ? (suff.result == Verdict::kVerified &&
                nec.report.result == Verdict::kHypothesesUnmet)
             : (nec.report.result == Verdict::kCounterexample &&
                suff.result == Verdict::kHypothesesUnmet);
  const std::vector<const VerdictReport*> all = {&orbit, &midway, &suff,
                                                 &nec.report};
  bool guard = false;
  bool fails = !dichotomy;
  for (const VerdictReport* r : all) {
    guard = guard || r->result == Verdict::kGuardExceeded;
  }
  fails = fails || orbit.result == Verdict::kCounterexample ||
          midway.result == Verdict::kCounterexample ||
          suff.result == Verdict::kCounterexample;
  json out;
  out["cyclic_socle"] = cyclic;
  out["extension_property"] = cyclic;
  out["dichotomy_consistent"] = dichotomy;
  out["orbit_lemma"] = verdict_to_json(orbit);
  out["midway"] = verdict_to_json(midway);
  out["sufficiency"] = verdict_to_json(suff);
  out["necessity"] = verdict_to_json(nec.report);
  const int code = guard ? kExitGuard : fails ? kExitFails : kExitOk;
  return {{{"verify_all", out}}, code, {}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"ring-info", ring_info},
      {"socle-report", socle_report_cmd},
      {"aut-group", aut_group_cmd},
      {"orbits", orbits_cmd},
      {"weights", weights_cmd},
      {"ep-counterexample", ep_counterexample},
      {"ep-check-extension", ep_check_extension},
      {"verify-orbit-lemma", verify_orbit_lemma_cmd},
      {"verify-midway", verify_midway_cmd},
      {"verify-sufficiency", verify_sufficiency_cmd},
      {"verify-necessity", verify_necessity_cmd},
      {"verify-all", verify_all_cmd},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kVerified:
      return kExitOk;
    case Verdict::kCounterexample:
      return kExitFails;
    case Verdict::kHypothesesUnmet:
      return kExitUnmet;
    case Verdict::kGuardExceeded:
      return kExitGuard;
  }
  return kExitFails;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
      return kExitInput;
    case ErrorKind::kGuardExceeded:
    case ErrorKind::kUnsupported:
      return kExitGuard;
    case ErrorKind::kHypothesisUnmet:
      return kExitUnmet;
    case ErrorKind::kInternal:
      return kExitFails;
  }
  return kExitFails;
}

Limits resolve_limits(const Invocation& inv, const SpecFile* spec) {
  Limits l;
  if (spec && spec->max_n) l.max_n = *spec->max_n;
  if (spec && spec->max_gens) l.max_gens = *spec->max_gens;
  if (auto v = env_int(inv, "SWCLAB_MAX_ORDER")) l.max_order = *v;
  if (auto v = env_int(inv, "SWCLAB_MAX_N")) l.max_n = *v;
  if (auto v = env_int(inv, "SWCLAB_MAX_GENS")) l.max_gens = *v;
  if (inv.max_order) l.max_order = *inv.max_order;
  if (inv.max_n) l.max_n = *inv.max_n;
  if (inv.max_gens) l.max_gens = *inv.max_gens;
  if (l.max_order < 1) throw InputError("max_order must be positive");
  if (l.max_n < 1) throw InputError("max_n must be positive");
  if (l.max_gens < 0) throw InputError("max_gens must be non-negative");
  return l;
}

json verdict_to_json(const VerdictReport& r) {
  return {{"claim", r.claim},
          {"hypotheses", r.hypotheses},
          {"result", verdict_name(r.result)},
          {"witness", r.witness},
          {"counts", r.counts},
          {"notes", r.notes}};
}

CommandResult run_command(const Invocation& inv) {
  json report;
  report["command"] = inv.command;
  report["version"] = kVersion;
  report["schema_version"] = kSchemaVersion;
  CommandResult result;
  try {
    auto it = handlers().find(inv.command);
    if (it == handlers().end()) {
      throw InputError("unknown command \"" + inv.command + "\"");
    }
    Context ctx{inv, std::nullopt, {}, json::object()};
    if (inv.spec_path) {
      ctx.spec = parse_spec(*inv.spec_path);
      ctx.inputs["spec"] = spec_to_json(*ctx.spec);
    }
    ctx.limits = resolve_limits(inv, ctx.spec ? &*ctx.spec : nullptr);
    report["limits"] = limits_json(ctx.limits);
    result = it->second(ctx);
    report["inputs"] = ctx.inputs;
    report["result"] = result.report;
  } catch (const Error& e) {
    result.exit_code = exit_code(e.kind());
    result.diagnostic = kind_name(e.kind()) + ": " + e.what();
    report["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
  } catch (const json::exception& e) {
    result.exit_code = kExitInput;
    result.diagnostic = std::string("input: ") + e.what();
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
  }
  report["exit_code"] = result.exit_code;
  result.report = std::move(report);
  return result;
}

}  // namespace swclab::cli
