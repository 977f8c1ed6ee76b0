// Copyright 2026 The assocform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON certificates. Every document carries "schema": "assocform/1" and the
// keys operation, input, output, flags, witnesses in that order. Forms are
// strings in the text grammar; rationals are strings "p" or "p/q".

#include "assocform/parse.hpp"
#include "assocform/quotient.hpp"
#include "assocform/stability.hpp"
#include "assocform/subspace.hpp"

#include <json.hpp>

#include <string>

namespace assocform {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCertificateSchema = "assocform/1";

Json make_certificate(const std::string& operation, Json input, Json output, Json flags = Json::object(),
                      Json witnesses = Json::object());

Json form_json(const Form& f, Variables vars = Variables::source);
Json subspace_json(const Subspace& w);
Json matrix_json(const MatrixQ& m);
Json hilbert_json(const HilbertFunction& h);
Json hm_index_json(const HmIndex& h);
Json stability_json(const StabilityCertificate& c);

}  // namespace assocform
