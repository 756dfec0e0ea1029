// Copyright 2026 The eaqecc authors
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

#include "eaqecc/json_io.hpp"

#include <cstdio>
#include <json.hpp>

namespace eaqecc {

namespace {

using nlohmann::json;

std::string fmt(double v, const char* spec = "%.10g") {
  char buf[48];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

json stabilizer_to_obj(const StabilizerCode& code) {
  json obj;
  obj["n"] = code.n();
  obj["k"] = code.k();
  json gens = json::array();
  for (const auto& g : code.generators()) {
    gens.push_back(g.str());
  }
  obj["generators"] = std::move(gens);
  json logs = json::array();
  for (const auto& l : code.logical_ops()) {
    logs.push_back(l.str());
  }
  obj["logical_ops"] = std::move(logs);
  return obj;
}

StabilizerCode stabilizer_from_obj(const json& obj) {
  uint32_t n = obj.at("n").get<uint32_t>();
  uint32_t k = obj.at("k").get<uint32_t>();
  std::vector<PauliOperator> gens;
  for (const auto& s : obj.at("generators")) {
    gens.push_back(PauliOperator::from_string(s.get<std::string>()));
  }
  if (!obj.contains("logical_ops") || obj.at("logical_ops").empty()) {
    return StabilizerCode::with_completed_logicals(n, k, std::move(gens));
  }
  std::vector<PauliOperator> logs;
  for (const auto& s : obj.at("logical_ops")) {
    logs.push_back(PauliOperator::from_string(s.get<std::string>()));
  }
  return StabilizerCode(n, k, std::move(gens), std::move(logs));
}

json interval_to_obj(const Interval& iv) { return json{{"lo", iv.lo}, {"hi", iv.hi}}; }

json bound_to_obj(const BoundEntry& b) {
  return json{{"id", b.id},         {"direction", b.direction}, {"lhs", b.lhs},
              {"rhs", b.rhs},       {"satisfied", b.satisfied}, {"paper_eq", b.relation}};
}

std::string dump(const json& obj, int indent) {
  return indent < 0 ? obj.dump() : obj.dump(indent);
}

}  // namespace

std::string to_json(const StabilizerCode& code, int indent) {
  return dump(stabilizer_to_obj(code), indent);
}

StabilizerCode stabilizer_from_json(const std::string& text) {
  return stabilizer_from_obj(json::parse(text));
}

std::string to_json(const EACode& code, int indent) {
  json obj;
  obj["n_send"] = code.n_send;
  obj["k"] = code.k;
  obj["m"] = code.m;
  obj["a"] = code.a;
  obj["extended_code"] = stabilizer_to_obj(code.extended);
  return dump(obj, indent);
}

EACode eacode_from_json(const std::string& text) {
  json obj = json::parse(text);
  EACode code{obj.at("n_send").get<uint32_t>(), obj.at("k").get<uint32_t>(),
              obj.at("m").get<uint32_t>(), obj.at("a").get<uint32_t>(),
              stabilizer_from_obj(obj.at("extended_code"))};
  ValidationReport report = validate_ea(code);
  if (!report.ok) {
    throw std::invalid_argument("eacode_from_json: " + report.detail);
  }
  return code;
}

std::string to_json(const CapacityLedger& ledger, int indent) {
  json obj;
  obj["channel"] = ledger.channel;
  obj["C_E"] = ledger.C_E;
  obj["Q_E"] = ledger.Q_E;
  obj["C"] = ledger.C ? json(*ledger.C) : json(nullptr);
  obj["Q"] = ledger.Q ? json(*ledger.Q) : json(nullptr);
  obj["E_Q_bounds"] = interval_to_obj(ledger.E_Q_bounds);
  obj["E_C_bounds"] = interval_to_obj(ledger.E_C_bounds);
  obj["E_Q_random"] = ledger.E_Q_random;
  json bounds = json::array();
  for (const auto& b : ledger.bounds) {
    bounds.push_back(bound_to_obj(b));
  }
  obj["bounds"] = std::move(bounds);
  json flags;
  flags["entanglement_breaking"] = ledger.entanglement_breaking;
  flags["unital"] = ledger.unital;
  flags["conjecture_consistent"] =
      ledger.conjecture_consistent ? json(*ledger.conjecture_consistent) : json(nullptr);
  obj["flags"] = std::move(flags);
  if (ledger.hashing_bound) {
    obj["hashing_bound"] = json{{"raw", *ledger.hashing_bound},
                                {"clamped", std::max(0.0, *ledger.hashing_bound)}};
  }
  json cap;
  cap["optimizer_value"] = ledger.capacity.optimizer_value;
  cap["argmax_bloch"] = json::array({ledger.capacity.argmax_bloch[0],
                                     ledger.capacity.argmax_bloch[1],
                                     ledger.capacity.argmax_bloch[2]});
  if (ledger.capacity.shortcut_value) {
    cap["shortcut_value"] = *ledger.capacity.shortcut_value;
  }
  obj["optimizer"] = std::move(cap);
  return dump(obj, indent);
}

namespace {

json sim_to_obj(const SimResult& r, double rate, double appendix_bound) {
  json obj;
  obj["n"] = r.n;
  obj["k"] = r.k;
  obj["m"] = r.m;
  obj["a"] = r.a;
  obj["channel"] = r.channel;
  obj["rate"] = rate;
  obj["trials"] = r.trials;
  obj["failures"] = r.failures;
  obj["p_fail"] = r.p_fail;
  obj["ci_lo"] = r.ci95.lo;
  obj["ci_hi"] = r.ci95.hi;
  obj["appendix_bound"] = appendix_bound;
  obj["seed"] = r.seed;
  return obj;
}

}  // namespace

std::string to_json(const SimResult& result, double rate, double appendix_bound, int indent) {
  return dump(sim_to_obj(result, rate, appendix_bound), indent);
}

std::string sim_csv_header() {
  return "n,k,m,a,channel,rate,trials,failures,p_fail,ci_lo,ci_hi,appendix_bound,seed";
}

std::string sim_csv_row(const SimResult& r, double rate, double appendix_bound) {
  std::string row;
  row += std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + std::to_string(r.m) + ',' +
         std::to_string(r.a) + ',';
  row += r.channel + ',';
  row += fmt(rate) + ',';
  row += std::to_string(r.trials) + ',' + std::to_string(r.failures) + ',';
  row += fmt(r.p_fail) + ',' + fmt(r.ci95.lo) + ',' + fmt(r.ci95.hi) + ',';
  row += fmt(appendix_bound) + ',';
  row += std::to_string(r.seed);
  return row;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::string out = sim_csv_header();
  out += '\n';
  for (const auto& pt : points) {
    SimResult r;
    r.n = pt.n;
    r.k = pt.k;
    r.m = pt.m;
    r.a = pt.a;
    r.channel = pt.channel;
    r.trials = pt.total_trials;
    r.failures = pt.total_failures;
    r.p_fail = pt.p_fail;
    r.ci95 = pt.ci95;
    r.seed = pt.seed;
    out += sim_csv_row(r, pt.rate, pt.appendix_bound);
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<SweepPoint>& points, int indent) {
  json rows = json::array();
  for (const auto& pt : points) {
    json obj;
    obj["n"] = pt.n;
    obj["k"] = pt.k;
    obj["m"] = pt.m;
    obj["a"] = pt.a;
    obj["channel"] = pt.channel;
    obj["rate"] = pt.rate;
    obj["trials"] = pt.total_trials;
    obj["failures"] = pt.total_failures;
    obj["p_fail"] = pt.p_fail;
    obj["ci_lo"] = pt.ci95.lo;
    obj["ci_hi"] = pt.ci95.hi;
    obj["appendix_bound"] = pt.appendix_bound;
    obj["seed"] = pt.seed;
    obj["n_codes"] = pt.n_codes;
    obj["per_code_p_fail"] = pt.per_code_p_fail;
    rows.push_back(std::move(obj));
  }
  return dump(rows, indent);
}

}  // namespace eaqecc
