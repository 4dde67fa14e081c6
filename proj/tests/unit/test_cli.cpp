#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "enriques");
  std::ostringstream out, err;
  const int code = enriques::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify a valid form") {
  const Result r = run({"classify", "0;4,1,0,0,0,0,0,0,0,0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["g"] == 5);
  CHECK(j["phi"] == 1);
  CHECK(j["status"] == "unirational");
  CHECK(j["signature"]["text"] == "0;4,1,0,0,0,0,0,0,0,0");
}

TEST_CASE("classify reports the class signature and all forms") {
  const Result r = run({"classify", "1;2,0,1,1,1,1,1,0,0,0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["g"] == 30);
  CHECK(j["phi"] == 7);
  CHECK(j["signature"]["text"] == "1;1,0,1,1,1,1,1,1,0,0");
  CHECK(j["canonical_forms"].size() >= 2);
  CHECK(j["status"] == "uniruled");
}

TEST_CASE("classify rejects invalid forms with exit 4") {
  const Result r = run({"classify", "1;0,0,1,0,0,0,0,0,0,0"});
  CHECK(r.code == 4);
  CHECK(r.out.empty());
  const json e = json::parse(r.err);
  CHECK(e["exit_code"] == 4);
  CHECK(e["constraint"] == "ordering");

  CHECK(json::parse(run({"classify", "0;-1,0,0,0,0,0,0,0,0,0"}).err)["constraint"] == "nonnegative");
  CHECK(json::parse(run({"classify", "0;0,0,0,0,0,0,0,0,0,0"}).err)["constraint"] == "nonzero");
  CHECK(json::parse(run({"classify", "0;1,0,0,0,0,0,0,0,0,0"}).err)["constraint"] == "genus");
  CHECK(json::parse(run({"classify", "0;3,1,0,0,0,0,0,0,0,0", "--eps", "1"}).err)["constraint"] == "eps");
  CHECK(run({"classify", "0;2,2,0,0,0,0,0,0,0,0", "--eps", "1"}).code == 0);
}

TEST_CASE("malformed input is a flag error") {
  CHECK(run({"classify", "banana"}).code == 2);
  CHECK(run({"classify", "0;1,2"}).code == 2);
  CHECK(run({"catalog"}).code == 2);
  CHECK(run({"catalog", "--g", "1..5"}).code == 2);
  CHECK(run({"catalog", "--g", "5..2"}).code == 2);
  CHECK(run({"catalog", "--g", "4", "--format", "xml"}).code == 2);
  CHECK(run({"catalog", "--g", "4", "--threads", "0"}).code == 2);
  CHECK(run({"verify", "--g", "2..31"}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({}).code == 2);
  const Result r = run({"catalog"});
  CHECK(json::parse(r.err)["exit_code"] == 2);
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("catalog") != std::string::npos);
}

TEST_CASE("catalog formats") {
  const Result j = run({"catalog", "--g", "21", "--phi", "6"});
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["records"].size() == 2);
  CHECK(doc["meta"]["phi"] == 6);
  for (const auto& rec : doc["records"]) CHECK(rec["g"] == 21);

  const Result csv = run({"catalog", "--g", "2..5", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("g,phi,a0", 0) == 0);

  const Result md = run({"catalog", "--g", "2..5", "--format", "md"});
  REQUIRE(md.code == 0);
  CHECK(md.out.find("## g = 2") != std::string::npos);

  CHECK(run({"catalog", "--g", "2..9", "--threads", "3"}).out == run({"catalog", "--g", "2..9"}).out);
}

TEST_CASE("equiv") {
  const Result same = run({"equiv", "1;2,0,1,1,1,1,1,0,0,0", "1;1,0,1,1,1,1,1,1,0,0"});
  REQUIRE(same.code == 0);
  CHECK(json::parse(same.out)["equivalent"] == true);

  const Result diff = run({"equiv", "0;2,2,2,0,0,0,0,0,0,0", "0;6,1,0,0,0,0,0,0,0,0"});
  REQUIRE(diff.code == 0);
  CHECK(json::parse(diff.out)["equivalent"] == false);
}

TEST_CASE("frame-dump") {
  const Result r = run({"frame-dump"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["determinant"] == -1);
  CHECK(j["D_square"] == 10);
  CHECK(j["E"].size() == 10);
  CHECK(j["eij"].size() == 45);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t k = 0; k < 10; ++k) CHECK(j["pairings"][i][k] == (i == k ? 0 : 1));
}

TEST_CASE("verify on a small range") {
  const Result r = run({"verify", "--g", "4..6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const Result low = run({"verify", "--g", "2..3"});
  CHECK(low.code == 5);
  CHECK(low.out.find("FAIL small_pairing_isotropic") != std::string::npos);
}
