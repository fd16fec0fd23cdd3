#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <clocale>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "pointspec/cli.hpp"
#include "pointspec/config.hpp"
#include "pointspec/errors.hpp"
#include "pointspec/output.hpp"

using namespace pointspec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pointspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("config round trip") {
  RunConfig c;
  c.model = "harmonic";
  c.k = 0.25;
  c.b = -1.0 / 3.0;
  c.e_min = -4.0;
  c.param = "a";
  c.format = "json";
  const std::string text = serialize_config(c);
  const RunConfig back = parse_config(text);
  CHECK(back == c);
  CHECK(serialize_config(back) == text);
  CHECK(serialize_config(parse_config("")) == serialize_config(RunConfig{}));
}

TEST_CASE("config parsing") {
  const RunConfig c = parse_config("# comment\nmodel = well\n  c=2.5\n\nb = 1e-3 # trailing\n");
  CHECK(c.model == "well");
  CHECK(c.c == 2.5);
  CHECK(c.b == 1e-3);
  CHECK_THROWS_AS(parse_config("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("a = 1\na = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("a = one\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("just a line\n"), ConfigError);
  CHECK_THROWS_AS(make_model(parse_config("model = harmonic\nk = -1\n")), ConfigError);
  CHECK_THROWS_AS(make_model(parse_config("model = cubic\n")), ConfigError);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-0.16) == "-0.16");
  CHECK(format_number(1e-300).find(',') == std::string::npos);
  const char* previous = std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  CHECK(format_number(2.5) == "2.5");
  if (previous != nullptr) std::setlocale(LC_NUMERIC, "C");
}

TEST_CASE("solve: free particle") {
  const Run r = run({"solve", "--model", "free", "--a", "1", "--b", "1"});
  CHECK(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "index,re_energy,im_energy,residual,kind");
  CHECK(rows[1].rfind("0,-0.15999999999999", 0) == 0);
  CHECK(rows[1].find(",bound") != std::string::npos);
}

TEST_CASE("solve: json output") {
  const Run r = run({"solve", "--model", "free", "--a", "2", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("\"roots\"") != std::string::npos);
  CHECK(r.out.find("-1") != std::string::npos);
}

TEST_CASE("solve: exit codes") {
  CHECK(run({"solve", "--model", "well", "--a", "0", "--b", "1"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--model", "free", "--a", "0", "--b", "0"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--colour", "red"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
}

TEST_CASE("solve: empty spectrum is a success") {
  const Run r = run({"solve", "--model", "harmonic", "--a", "1", "--b", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(lines(r.out).size() == 1);
}

TEST_CASE("figure: bad number") {
  CHECK(run({"figure", "7"}).code == cli::kExitUsage);
  CHECK(run({"figure", "1", "--a", "2"}).code == cli::kExitUsage);
}

TEST_CASE("figure output is reproducible") {
  const Run one = run({"figure", "3", "--a", "2", "--grid-points", "21"});
  const Run two = run({"figure", "3", "--a", "2", "--grid-points", "21", "--threads", "3"});
  CHECK(one.code == cli::kExitOk);
  CHECK(one.out == two.out);
  CHECK(lines(one.out)[0] == "param,branch,re_energy,im_energy");
  CHECK(lines(one.out)[1].find(",a=2#") != std::string::npos);
}

TEST_CASE("threshold, window, ionize, resonances") {
  Run r = run({"threshold", "--a", "2", "--k", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "a,k,b_c\n2,1,1\n");

  r = run({"window", "--a", "1", "--c", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("3.8165914916793") != std::string::npos);

  r = run({"resonances", "--a", "1", "--b", "2", "--k", "1", "--pairs", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(lines(r.out).size() == 5);
  CHECK(r.out.find("resonance") != std::string::npos);
  CHECK(run({"resonances", "--a", "1", "--b", "0.1"}).code == cli::kExitUsage);
}

TEST_CASE("oracle exit codes") {
  CHECK(run({"oracle", "--model", "harmonic", "--oracle-points", "5"}).code == cli::kExitOk);
  CHECK(run({"oracle", "--model", "well", "--oracle-points", "5"}).code == cli::kExitOk);
  CHECK(run({"oracle", "--model", "harmonic", "--oracle-points", "3", "--oracle-terms", "200",
             "--oracle-tolerance", "1e-15"})
            .code == cli::kExitValidation);
  CHECK(run({"oracle", "--model", "free"}).code == cli::kExitUsage);
}

TEST_CASE("dump-config is canonical") {
  const Run r = run({"solve", "--model", "harmonic", "--b", "0.25", "--dump-config"});
  CHECK(r.code == cli::kExitOk);
  CHECK(parse_config(r.out).b == 0.25);
  CHECK(serialize_config(parse_config(r.out)) == r.out);
}
