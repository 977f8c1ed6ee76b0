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

#include "assocform/certificate.hpp"

namespace assocform {

Json make_certificate(const std::string& operation, Json input, Json output, Json flags, Json witnesses) {
  Json j;
  j["schema"] = kCertificateSchema;
  j["operation"] = operation;
  j["input"] = std::move(input);
  j["output"] = std::move(output);
  j["flags"] = std::move(flags);
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json form_json(const Form& f, Variables vars) { return format_form(f, FormatStyle::text, vars); }

Json subspace_json(const Subspace& w) {
  Json basis = Json::array();
  for (const auto& f : w.basis()) basis.push_back(form_json(f));
  return Json{{"degree", w.degree()}, {"dimension", w.dimension()}, {"basis", std::move(basis)}};
}

Json matrix_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json hilbert_json(const HilbertFunction& h) {
  Json a = Json::array();
  for (auto v : h) a.push_back(v);
  return a;
}

Json hm_index_json(const HmIndex& h) {
  Json j{{"mu", h.mu}, {"k", h.k}};
  if (h.l >= 0) j["l"] = h.l;
  return j;
}

Json stability_json(const StabilityCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["semistable"] = c.semistable();
  j["polystable"] = c.polystable;
  j["degree"] = c.degree;
  Json w{{"i", c.i}, {"j", c.j}};
  if (c.locus) w["locus"] = form_json(*c.locus);
  if (c.point) w["L"] = form_json(*c.point);
  j["witness"] = std::move(w);
  if (c.frame) {
    j["frame"] = {{"matrix", matrix_json(c.frame->coordinates().matrix())}, {"tau", Frame::tau}};
    if (c.index) j["frame"]["index"] = hm_index_json(*c.index);
  }
  if (c.limit) j["limit"] = subspace_json(*c.limit);
  return j;
}

}  // namespace assocform
