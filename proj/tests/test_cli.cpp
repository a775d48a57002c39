#include <sstream>

#include "doctest.h"
#include "gradedlie/cli.hpp"
#include "gradedlie/report.hpp"

using namespace gradedlie;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("grade") {
  auto r = run({"grade", "A", "2", "1", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "grade");
  CHECK(j["results"]["dims"] == Json{{"-1", 2}, {"0", 4}, {"1", 2}});
  CHECK(j["results"]["depth"] == 1);
  CHECK(j["version"] == kVersion);

  r = run({"grade", "C", "3", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("depth 2") != std::string::npos);
  CHECK(r.out.find("dims -2:3 -1:4 0:7 1:4 2:3") != std::string::npos);

  r = run({"grade", "C", "3", "2", "--diagram"});
  CHECK(r.out.find("-2 -1  0") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"grade", "A", "0", "1"}).code == 2);
  CHECK(run({"grade", "Q", "2", "1"}).code == 2);
  CHECK(run({"grade", "A", "2", "1,x"}).code == 2);
  CHECK(run({"grade", "B", "3", "1", "--diagram"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify", "--max-rank", "7"}).code == 2);
  CHECK(run({"classify", "--json", "--csv"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"embed", "so", "2"}).code == 1);
  CHECK(run({"embed", "sp", "2"}).code == 0);
  CHECK(run({"lemma", "3"}).code == 0);
  CHECK(run({"lemma", "2"}).code == 2);
  CHECK(run({"ecp2"}).code == 0);
}

TEST_CASE("classify outputs") {
  auto r = run({"classify", "--max-rank", "2", "--json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const auto& recs = j["results"]["records"];
  CHECK(recs.size() == 10);
  bool seen_a2 = false, seen_c2 = false;
  for (const auto& rec : recs) {
    if (rec["type"] == "A" && rec["rank"] == 2 && rec["delta1"] == Json{1}) {
      seen_a2 = true;
      CHECK(rec["verdict"] == "Excluded");
    }
    if (rec["type"] == "C" && rec["rank"] == 2 && rec["delta1"] == Json{1}) {
      seen_c2 = true;
      CHECK(rec["verdict"] == "Excluded");
      CHECK(rec["exceptional_aut"] == Json{{"type", "A"}, {"rank", 3}, {"delta1", {1}}});
    }
  }
  CHECK(seen_a2);
  CHECK(seen_c2);

  r = run({"classify", "--max-rank", "3", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("type,rank,delta1,depth,dims,verdict,contact,exceptional_aut,vmrt_dim\n", 0) == 0);
  CHECK(r.out.find("A,3,\"1,3\",2,1 4 5 4 1,TypeIII,true,\"\",\n") != std::string::npos);

  r = run({"classify", "--max-rank", "3", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("prolongation dims match") != std::string::npos);
}

TEST_CASE("prolong") {
  auto r = run({"prolong", "A", "3", "2", "--cap", "2", "--json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["results"]["restricted_dims"] == Json{7, 4, 0});
  CHECK(j["results"]["full_dims"] == Json{16, 40, 80});
  r = run({"prolong", "A", "3", "1,2", "--g0-prime", "--json"});
  CHECK(Json::parse(r.out)["results"]["restricted_dims"] == Json{5, 3, 2, 0, 0});
  CHECK(run({"prolong", "C", "3", "2", "--g0-prime"}).code == 2);
}

TEST_CASE("reports round-trip and serialize deterministically") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"grade", "B", "3", "1,3", "--json"},
                                                                {"lemma", "4", "--json"},
                                                                {"embed", "sp", "3", "--json"},
                                                                {"ecp2", "--json"}}) {
    const auto r = run(args);
    const Json j = Json::parse(r.out);
    CHECK(Json::parse(j.dump()) == j);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j.contains("timing"));
  }
  const Json lemma = Json::parse(run({"lemma", "3", "--json"}).out);
  CHECK(lemma["results"]["bracket_scale"] == "-1");
}

TEST_CASE("csv rows") {
  const auto rec = classify(LieType::C, 2, MarkedSet({1}));
  CHECK(csv_row(rec) == "C,2,\"1\",2,1 2 4 2 1,Excluded,true,\"(A,3,{1})\",");
}
