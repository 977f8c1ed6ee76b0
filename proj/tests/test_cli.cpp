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


// Runs the assocform executable; its path comes from the build.

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ASSOCFORM_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::ordered_json json(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("assoc golden") {
  const auto r = run("assoc --d 4 \"x^4 + y^4\"");
  CHECK(r.status == 0);
  const auto j = json(r);
  CHECK(j["schema"] == "assocform/1");
  CHECK(j["operation"] == "assoc");
  CHECK(j["output"]["associated_form"] == "1/24*y1^2*y2^2");
  CHECK(j["flags"]["hsop"] == true);
  CHECK(j["flags"]["cat_nonzero"] == true);
  CHECK(r.out.find("1/24*y1^2*y2^2") != std::string::npos);
}

TEST_CASE("stability golden") {
  const auto r = run("stability --d 4 \"x^2*y^2\"");
  CHECK(r.status == 0);
  const auto j = json(r);
  CHECK(j["output"]["verdict"] == "strictly_semistable");
  CHECK(j["output"]["polystable"] == true);
}

TEST_CASE("verify plumbing is deterministic") {
  const auto a = run("verify --suite equivariance --d 5 --trials 100 --seed 7");
  CHECK(a.status == 0);
  const auto j = json(a);
  CHECK(j["output"]["all_passed"] == true);
  CHECK(j["output"]["reports"][0]["passed"] == 100);
  const auto b = run("verify --suite equivariance --d 5 --trials 100 --seed 7");
  CHECK(a.out == b.out);
  CHECK(run("verify --suite nosuch --d 5").status == 1);
}

TEST_CASE("exit codes") {
  CHECK(run("assoc \"x^2*y^2\"").status == 2);
  CHECK(json(run("assoc \"x^2*y^2\""))["error"]["code"] == "degenerate");
  CHECK(run("hilbert \"x^2\" \"x*y\"").status == 2);
  CHECK(json(run("hilbert \"x^2\" \"x*y\""))["error"]["code"] == "not_hsop");
  CHECK(run("subspace-stability \"x^3\" \"2*x^3\"").status == 2);
  CHECK(run("limit \"x^3\" \"x^2*y\" --frame \"0 1; 1 0\"").status == 2);
  CHECK(run("assoc \"x^^2\"").status == 1);
  CHECK(run("b-map \"y1^2*y2^2\"").status == 1);
  CHECK(run("nosuchcommand").status == 1);
  CHECK(run("").status == 1);
}

TEST_CASE("other subcommands") {
  auto j = json(run("cat \"y1^2*y2^2\""));
  CHECK(j["output"]["catalecticant"] == "-1/216");
  j = json(run("cat \"x^2*y^2\""));  // source names accepted for dual input
  CHECK(j["output"]["catalecticant"] == "-1/216");
  j = json(run("res \"x^3\" \"y^3\""));
  CHECK(j["output"]["resultant"] == "1");
  j = json(run("disc \"x^2*y^2\""));
  CHECK(j["output"]["discriminant_nonzero"] == false);
  j = json(run("hilbert \"x^3\" \"y^3\""));
  CHECK(j["output"]["hilbert_function"] == nlohmann::ordered_json::array({1, 2, 3, 2, 1}));
  j = json(run("hilbert --n 3 x1^2 x2^2 x3^2"));
  CHECK(j["output"]["hilbert_function"] == nlohmann::ordered_json::array({1, 3, 3, 1}));
  j = json(run("inverse-system \"x^3\" \"y^3\""));
  CHECK(j["output"]["ideal_equals_perp"] == true);
  j = json(run("b-map --d 4 \"y1^2*y2^2\""));
  CHECK(j["flags"]["u_res_member"] == true);
  CHECK(j["output"]["subspace"]["basis"] == nlohmann::ordered_json::array({"x^3", "y^3"}));
  j = json(run("nabla \"x^3 + y^3\""));
  CHECK(j["output"]["subspace"]["dimension"] == 2);
  j = json(run("subspace-stability \"x^3\" \"x^2*y\""));
  CHECK(j["output"]["certificate"]["verdict"] == "unstable");
  CHECK(j["output"]["certificate"]["frame"]["index"]["mu"] == -4);
  j = json(run("hm-index \"x^3\" \"x^2*y\" --frame \"0 1; 1 0\""));
  CHECK(j["output"]["mu"] == -4);
  j = json(run("limit \"x*y^2 + y^3\" \"x^2*y\""));
  CHECK(j["output"]["limit"]["basis"] == nlohmann::ordered_json::array({"x^2*y", "x*y^2"}));
  j = json(run("wprime \"x^4 + x^3*y\" \"y^4 + x*y^3\""));
  CHECK(j["output"]["member"] == false);
  CHECK(j["witnesses"]["minor"]["value"] == "1/256");
  j = json(run("assoc-tuple \"x^3\" \"y^3\""));
  CHECK(j["output"]["associated_form"] == "2/3*y1^2*y2^2");
}

TEST_CASE("text format") {
  const auto r = run("stability --d 4 \"x^2*y^2\" --format text");
  CHECK(r.status == 0);
  CHECK(r.out.find("output.verdict: strictly_semistable\n") != std::string::npos);
}
