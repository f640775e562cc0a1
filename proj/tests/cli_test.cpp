#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doodlekit/cli.hpp"
#include "doodlekit/search.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Whitespace-separated words; double quotes group, "" is an empty argument.
std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == ' ') {
      ++k;
    } else if (line[k] == '"') {
      const auto end = line.find('"', k + 1);
      out.push_back(line.substr(k + 1, end - k - 1));
      k = end + 1;
    } else {
      const auto end = std::min(line.find(' ', k), line.size());
      out.push_back(line.substr(k, end - k));
      k = end;
    }
  }
  return out;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size())) s.replace(at, from.size(), to);
  return s;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = doodlekit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string transcript(const std::string& shown, const Outcome& o) {
  return "$ doodlekit " + shown + "\n" + o.out + "--- stderr\n" + o.err + "--- exit " + std::to_string(o.code) + "\n";
}

}  // namespace

TEST_CASE("commands match golden transcripts") {
  const fs::path golden = DOODLEKIT_GOLDEN;
  const bool update = std::getenv("DOODLEKIT_UPDATE_GOLDEN") != nullptr;
  std::istringstream cases(slurp(golden / "cases.txt"));
  int count = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    const auto name = line.substr(0, colon);
    auto shown = line.substr(colon + 1);
    if (!shown.empty() && shown[0] == ' ') shown.erase(0, 1);
    const auto args = split_args(replace_all(shown, "{fixtures}", DOODLEKIT_FIXTURES));
    const auto text = transcript(replace_all(shown, "{fixtures}", "fixtures"), run(args));
    const auto file = golden / (name + ".txt");
    CAPTURE(name);
    if (update) {
      std::ofstream(file, std::ios::binary) << text;
    } else {
      REQUIRE(fs::exists(file));
      CHECK(slurp(file) == text);
    }
    ++count;
  }
  CHECK(count > 20);
}

TEST_CASE("exit codes") {
  CHECK(run({"pi", "--n", "3", "s1 r2"}).code == 0);
  CHECK(run({"equiv", "--n1", "2", "", "--n2", "1", ""}).code == 1);
  CHECK(run({"gauss-iso", std::string(DOODLEKIT_FIXTURES) + "/kink.gauss", std::string(DOODLEKIT_FIXTURES) + "/twisted.gauss"}).code == 1);
  CHECK(run({"nonsense"}).code == 64);
  CHECK(run({"pi", "--n", "3", "q1"}).code == 65);
  CHECK(run({"gauss-validate", std::string(DOODLEKIT_FIXTURES) + "/bad_slot.gauss"}).code == 65);
  CHECK(run({"gauss-validate", "/nonexistent/file.gauss"}).code == 64);
  CHECK(run({"verify-relations", "--n", "4", "--backend", "openmp"}).out == "14/14 relations hold\n");
  CHECK(run({"verify-relations", "--n", "4", "--backend", "gpu"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("equiv reports Unknown with exit code 2") {
  const auto o = run({"equiv", "--n1", "3", "r1 s1", "--n2", "3", "r2 s2", "--max-len", "4", "--max-n", "3"});
  CHECK(o.code == 2);
  CHECK(o.out.rfind("Unknown: ", 0) == 0);
}

TEST_CASE("verify-cert accepts emitted certificates") {
  const auto dir = fs::temp_directory_path() / "doodlekit_cli_test";
  fs::create_directories(dir);
  const auto cert = (dir / "c.txt").string();
  const auto o = run({"equiv", "--n1", "3", "s1 s2 s1 s2", "--n2", "2", "s1", "--cert", cert});
  REQUIRE(o.code == 0);
  const auto v = run({"verify-cert", cert});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("certificate ok: ", 0) == 0);
  // A corrupted step is rejected.
  auto text = slurp(cert);
  const auto at = text.rfind("@n=2");
  text.replace(at, 4, "@n=3");
  std::ofstream(cert, std::ios::binary) << text;
  CHECK(run({"verify-cert", cert}).code == 65);
  fs::remove_all(dir);
}
