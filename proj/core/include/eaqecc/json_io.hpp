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

#pragma once

#include <string>
#include <vector>

#include "eaqecc/capacity.hpp"
#include "eaqecc/eacode.hpp"
#include "eaqecc/simulate.hpp"
#include "eaqecc/stabilizer.hpp"

namespace eaqecc {

/// {"n": ..., "k": ..., "generators": [...], "logical_ops": [...]} with
/// operators in text form.
std::string to_json(const StabilizerCode& code, int indent = -1);
StabilizerCode stabilizer_from_json(const std::string& text);

/// {"n_send", "k", "m", "a", "extended_code": <stabilizer object>}.
std::string to_json(const EACode& code, int indent = -1);
EACode eacode_from_json(const std::string& text);

std::string to_json(const CapacityLedger& ledger, int indent = 2);

std::string to_json(const SimResult& result, double rate, double appendix_bound,
                    int indent = 2);

std::string sim_csv_header();
std::string sim_csv_row(const SimResult& result, double rate, double appendix_bound);
std::string sweep_csv(const std::vector<SweepPoint>& points);
std::string to_json(const std::vector<SweepPoint>& points, int indent = 2);

}  // namespace eaqecc
