#include <doctest.h>

#include <sstream>

#include "chern/report.hpp"

using namespace chern;

namespace {

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("index json schema and key order") {
  const Json j = to_json(chow2_index(GroupParams(5, 5), 3));
  const std::vector<std::string> want{"ell",      "k",           "n",     "degree",       "bound",
                                      "generator", "stabilized", "witnesses", "paper_target", "match",
                                      "witness_count"};
  CHECK(keys(j) == want);
  CHECK(j["generator"] == 5);
  CHECK(j["match"] == true);
  CHECK(keys(j["witnesses"][0]) == std::vector<std::string>{"rep", "rank", "c2", "c3", "valuation"});
  CHECK(j["witnesses"][0]["rep"] == "e5");

  const Json none = to_json(chow3_index(GroupParams(2, 4), 3));
  CHECK(none["paper_target"].is_null());
  CHECK(none["match"].is_null());
  CHECK(none.contains("caveat"));
}

TEST_CASE("big integers become strings") {
  CHECK(json_int(ExactInt(42)) == 42);
  ExactInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  CHECK(json_int(big) == "1000000000000000000000000000000");
  CHECK(json_int(-big) == "-1000000000000000000000000000000");
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("sweep rows") {
  const SweepRow r = sweep_cell(GroupParams(7, 7), 3);
  CHECK(r.h4_index == 1);
  CHECK(r.chow2_generator == 7);
  CHECK(*r.chow3_generator == 49);
  CHECK(r.counterexample);
  CHECK(r.stabilized);
  const SweepRow s = sweep_cell(GroupParams(2, 1), 4);
  CHECK(s.h4_index == 4);
  CHECK(s.chow2_generator == 4);
  CHECK(!s.counterexample);
  const SweepRow t = sweep_cell(GroupParams(3, 3), 2);
  CHECK(!t.chow3_generator);

  std::ostringstream csv;
  write(csv, std::vector<SweepRow>{r, s}, OutputFormat::csv);
  CHECK(csv.str() ==
        "ell,k,n,bound,h4_index,chow2_generator,chow3_generator,counterexample,stabilized\r\n"
        "7,7,49,3,1,7,49,true,true\r\n"
        "2,1,2,4,4,4,4,false,true\r\n");
}

TEST_CASE("output is deterministic") {
  for (auto fmt : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
    std::ostringstream a, b;
    write(a, ku_report(GroupParams(2, 3), 4), fmt);
    write(b, ku_report(GroupParams(2, 3), 4), fmt);
    CHECK(a.str() == b.str());
    std::ostringstream c, d;
    write(c, divisibility_audit(GroupParams(5, 5), 2, 2, 3), fmt);
    write(d, divisibility_audit(GroupParams(5, 5), 2, 2, 3), fmt);
    CHECK(c.str() == d.str());
  }
}

TEST_CASE("ku json") {
  const Json j = to_json(ku_report(GroupParams(2, 3), 3));
  CHECK(j["constrained_generator"] == 2);
  CHECK(j["generator"] == 1);
  CHECK(j["chain"] == "imCh3=2Z, imKu6=Z");
  CHECK(j["witnesses"][0]["rep"] == "p2 - e2 + 9");
  CHECK(j["witnesses"][1]["rep"] == "p2 - e4 + 9");
  CHECK(j["match"] == true);
}
