// Copyright 2026 The pythag Authors
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

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "pythag/records.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs a shell command line with the CLI binary substituted for "@".
Run run(const std::string& line) {
  std::string cmd;
  for (char c : line) {
    if (c == '@') cmd += "'" PYTHAG_CLI "'";
    else cmd += c;
  }
  cmd += " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int rc = pclose(p);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(PYTHAG_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("eval prints the output record") {
  auto r = run("@ eval uv2 --params 1,1,2,3,4");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"x\":[\"11\",\"-2\"],\"u\":\"5\",\"v\":\"25\"}\n");
  CHECK(run("@ eval triple --params f2,1,2,1").out == "{\"x\":[\"3\",\"4\",\"5\"]}\n");
  CHECK(run("@ eval descartes --params 1,1,2,3,4").out == "{\"b1\":\"6\",\"b2\":\"3\",\"b3\":\"23\",\"b4\":\"2\"}\n");
}

TEST_CASE("solve output piped into eval reproduces the tuple") {
  const char* cases[][2] = {
      {"triple", "{\"x\":[\"-3\",\"-4\",\"-5\"]}"},
      {"quadruple", "{\"x\":[\"2\",\"3\",\"6\",\"-7\"]}"},
      {"quintuple", "{\"x\":[\"1\",\"2\",\"2\",\"4\",\"5\"]}"},
      {"sextuple", "{\"x\":[\"1\",\"1\",\"1\",\"1\",\"0\",\"2\"]}"},
      {"uv2", "{\"x\":[\"11\",\"-2\"],\"u\":\"5\",\"v\":\"25\"}"},
      {"uv3", "{\"x\":[\"0\",\"0\",\"0\"],\"u\":\"0\",\"v\":\"7\"}"},
      {"uv4", "{\"x\":[\"3\",\"2\",\"-1\",\"0\"],\"u\":\"1\",\"v\":\"14\"}"},
      {"descartes", "{\"b1\":\"-1\",\"b2\":\"2\",\"b3\":\"2\",\"b4\":\"3\"}"},
  };
  for (const auto& c : cases) {
    CAPTURE(c[0]);
    auto path = temp_file(std::string("closure_") + c[0], std::string(c[1]) + "\n");
    auto r = run(std::string("@ solve ") + c[0] + " < '" + path + "' | @ eval " + c[0]);
    CHECK(r.status == 0);
    CHECK(r.out == std::string(c[1]) + "\n");
  }
  CHECK(run("@ solve sextuple --tuple 1,1,1,1,0,2 | @ eval sextuple").out ==
        "{\"x\":[\"1\",\"1\",\"1\",\"1\",\"0\",\"2\"]}\n");
}

TEST_CASE("thousand-digit values pass through unchanged") {
  std::string big(1000, '7');
  std::string params = "1,-" + big + "," + big + ",1," + big;
  auto first = run("@ eval uv2 --params " + params);
  REQUIRE(first.status == 0);
  auto j = pythag::Json::parse(first.out);
  CHECK(j["x"][0].get<std::string>().size() > 1000);
  auto path = temp_file("big_uv2", first.out);
  auto again = run("@ solve uv2 < '" + path + "' | @ eval uv2");
  CHECK(again.status == 0);
  CHECK(again.out == first.out);
}

TEST_CASE("enumerate") {
  auto r = run("@ enumerate quadruple --bound 0");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"x\":[\"0\",\"0\",\"0\",\"0\"]}\n");
  auto csv = run("@ enumerate uv2 --bound 1 --format csv");
  CHECK(csv.out.rfind("x1,x2,u,v\n", 0) == 0);
  CHECK(csv.out.find("\n1,0,1,1\n") != std::string::npos);
  CHECK(run("@ enumerate carmichael --bound 1").status == 0);
}

TEST_CASE("verify reports and exit status") {
  auto r = run("@ verify descartes --bound 5");
  CHECK(r.status == 0);
  auto j = pythag::Json::parse(r.out);
  CHECK(j["failures"].empty());
  CHECK(j["verified"] == true);
  auto w = run("PYTHAG_MAX_WORKERS=2 @ verify quadruple --bound 6 --workers 5");
  CHECK(w.status == 0);
  auto serial = pythag::Json::parse(run("@ verify quadruple --bound 6").out);
  auto parallel = pythag::Json::parse(w.out);
  serial.erase("elapsed_ms");
  parallel.erase("elapsed_ms");
  CHECK(serial == parallel);
}

TEST_CASE("usage and input errors exit with status 2") {
  CHECK(run("@").status == 2);
  CHECK(run("@ eval").status == 2);
  CHECK(run("@ eval nosuchfamily --params 1").status == 2);
  CHECK(run("@ eval uv2 --params 1,2").status == 2);
  CHECK(run("@ eval uv2 --params 1,x,2,3,4").status == 2);
  CHECK(run("@ solve uv2 --tuple 1,2,3,4").status == 2);
  CHECK(run("@ solve uv2 --tuple 0,0,1,2").status == 2);
  CHECK(run("@ solve carmichael --tuple 0,0,1,1").status == 2);
  CHECK(run("@ enumerate uv2 --bound -1").status == 2);
  CHECK(run("@ enumerate uv2 --bound 1 --format xml").status == 2);
  CHECK(run("@ verify uv2 --bound 1 --workers 0").status == 2);
  CHECK(run("PYTHAG_MAX_WORKERS=zero @ verify uv2 --bound 1").status == 2);
  CHECK(run("echo '{\"x\":[1' | @ solve quadruple").status == 2);
  CHECK(run("@ --help").status == 0);
  CHECK(run("@ families").out.find("quintuple: sign,w0") != std::string::npos);
}
