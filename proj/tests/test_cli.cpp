#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "dklein/algebra.hpp"
#include "dklein/cli.hpp"
#include "dklein/text.hpp"

using namespace dklein;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out, err;
  json j;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dklein");
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && (r.out[0] == '{' || r.out[0] == '['))
    r.j = json::parse(r.out);
  return r;
}

}  // namespace

TEST_CASE("cli: derive-p and derive-q") {
  CliResult r = run_cli({"derive-p", "--q", "t^3+2*t^2-1"});
  CHECK(r.code == 0);
  CHECK(r.j["p"] == "3*t^2+12*t+12");

  CliResult r2 = run_cli({"derive-q", "--p", "3*t^2+8*t+8"});
  CHECK(r2.code == 0);
  CHECK(r2.j["q"] == "t^3");
}

TEST_CASE("cli: reduce") {
  CliResult r = run_cli(
      {"reduce", "--algebra", "d", "--q", "t^3", "--gamma", "0", "--expr",
       "v*u"});
  CHECK(r.code == 0);
  CHECK(r.j["element"] == "u*v-2*w");

  // --p selects the H presentation by default.
  CliResult r2 = run_cli(
      {"reduce", "--p", "3*t^2+8*t+8", "--expr", "w*w"});
  CHECK(r2.code == 0);
  CHECK(r2.j["element"] == "w^2");

  // The same word collapses in the D presentation.
  CliResult r3 = run_cli({"reduce", "--q", "t^3", "--expr", "w*w"});
  CHECK(r3.code == 0);
  CHECK(r3.j["element"] == "-u^3-6*u^2-u*v^2-16*u-2*v^2+2*v*w-16");
}

TEST_CASE("cli: commutator takes --expr twice") {
  CliResult r = run_cli(
      {"commutator", "--q", "t^3", "--expr", "u", "--expr", "v"});
  CHECK(r.code == 0);
  CHECK(r.j["element"] == "2*w");

  CliResult missing = run_cli({"commutator", "--q", "t^3", "--expr", "u"});
  CHECK(missing.code == 2);
  CHECK(missing.j["error"]["type"] == "parse_error");
}

TEST_CASE("cli: center emits the central element") {
  CliResult r = run_cli({"center", "--q", "t^3", "--gamma", "0"});
  CHECK(r.code == 0);
  AlgebraSpec h = AlgebraSpec::make(AlgebraKind::H, parse_poly("3*t^2+8*t+8"),
                                    Scalar(0));
  Element omega =
      parse_element(h, r.j["element"].get<std::string>());
  CHECK(omega == center_element(h, parse_poly("t^3")));
  CHECK(is_central(h, omega));
}

TEST_CASE("cli: is-central") {
  CliResult no = run_cli({"is-central", "--q", "t^3", "--expr", "u*v"});
  CHECK(no.code == 0);
  CHECK(no.j["central"] == false);
  CliResult yes = run_cli({"is-central", "--q", "t^3", "--expr", "7"});
  CHECK(yes.code == 0);
  CHECK(yes.j["central"] == true);
}

TEST_CASE("cli: diamond") {
  CliResult r = run_cli({"diamond", "--q", "t^4+i*t", "--gamma", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.j["ok"] == true);
  CHECK(r.j["overlaps"].is_array());
  CHECK(!r.j["overlaps"].empty());
  for (const auto& e : r.j["overlaps"]) {
    CHECK(e["ok"] == true);
    CHECK(e["left"] == e["right"]);
  }
}

TEST_CASE("cli: degree") {
  CliResult r = run_cli({"degree", "--q", "t^3", "--expr", "u^3*v^2*w"});
  CHECK(r.code == 0);
  CHECK(r.j["degree"] == 26);
  CHECK(r.j["limit_degree"] == json::array({3, 7}));

  CliResult h = run_cli(
      {"degree", "--p", "3*t^2+8*t+8", "--expr", "w^2"});
  CHECK(h.code == 0);
  CHECK(h.j["degree"] == 12);
  CHECK(h.j["limit_degree"].is_null());
}

TEST_CASE("cli: iso-d finds the gamma flip") {
  CliResult r = run_cli({"iso-d", "--q", "t^4", "--gamma", "1", "--q2", "t^4",
                         "--gamma2", "-1"});
  CHECK(r.code == 0);
  CHECK(r.j["isomorphic"] == true);
  CHECK(r.j["case"].is_null());
  CHECK(r.j["witness"]["name"] == "Θ");
  CHECK(r.j["witness"]["source"]["q"] == "t^4");
  CHECK(r.j["witness"]["target"]["gamma"] == "-1");
  CHECK(r.j["witness"]["images"] == json::array({"u", "-v", "-w"}));
  CHECK(r.j["moduli"].is_array());
}

TEST_CASE("cli: iso-d normalizes non-monic input") {
  CliResult r = run_cli({"iso-d", "--q", "4*t^3", "--gamma", "2", "--q2",
                         "t^3", "--gamma2", "1"});
  CHECK(r.code == 0);
  CHECK(r.j["isomorphic"] == true);
  CHECK(r.j["witness"]["name"] == "Scale(1/2)");
  CHECK(r.j["witness"]["source"]["q"] == "4*t^3");
  CHECK(r.j["witness"]["target"]["q"] == "t^3");

  // Leading coefficients without an exact square root are unsupported.
  CliResult bad = run_cli({"iso-d", "--q", "2*t^3", "--gamma", "0", "--q2",
                           "t^3", "--gamma2", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.j["error"]["type"] == "precondition_error");
}

TEST_CASE("cli: iso-d negative verdict keeps the moduli") {
  CliResult r = run_cli({"iso-d", "--q", "t^3", "--gamma", "0", "--q2", "t^3",
                         "--gamma2", "1"});
  CHECK(r.code == 0);
  CHECK(r.j["isomorphic"] == false);
  CHECK(r.j["witness"].is_null());
  CHECK(r.j["moduli"] == json::array({"64", "16", "0", "0"}));
}

TEST_CASE("cli: iso-h") {
  CliResult r = run_cli({"iso-h", "--p", "3*t^2+8*t+8", "--gamma", "1",
                         "--p2", "3*t^2+8*t+8", "--gamma2", "-1"});
  CHECK(r.code == 0);
  CHECK(r.j["isomorphic"] == true);
  CHECK(r.j["case"] == "(iii)");
  CHECK(r.j["witness"]["name"] == "Θ");

  CliResult no = run_cli({"iso-h", "--p", "3*t^2+8*t+8", "--gamma", "0",
                          "--p2", "3*t^2+9*t+8", "--gamma2", "0"});
  CHECK(no.code == 0);
  CHECK(no.j["isomorphic"] == false);
  CHECK(no.j["case"].is_null());
  CHECK(no.j["witness"].is_null());
}

TEST_CASE("cli: aut, orbit, moduli") {
  CliResult a = run_cli({"aut", "--q", "t^3", "--gamma", "0"});
  CHECK(a.code == 0);
  CHECK(a.j["group"] == "Z2(Θ)");
  CHECK(a.j["order"] == 2);
  CHECK(a.j["generators"][0]["name"] == "Θ");

  CliResult o = run_cli({"orbit", "--q", "t^3", "--gamma", "0"});
  CHECK(o.code == 0);
  CHECK(o.j["size"] == 3);
  CHECK(o.j["members"][0]["witness"] == "Id");
  CHECK(o.j["members"][1]["q"] == "t^3-6*t");
  CHECK(o.j["members"][1]["gamma"] == "2*i");

  CliResult m = run_cli({"moduli", "--q", "t^3", "--gamma", "0"});
  CHECK(m.code == 0);
  CHECK(m.j["deg_q"] == 3);
  CHECK(m.j["type"] == "D4");
  CHECK(m.j["dimension"] == 4);
  CHECK(m.j["coords"] == json::array({"64", "16", "0", "0"}));

  CliResult m5 = run_cli({"moduli", "--q", "t^5+t", "--gamma", "3"});
  CHECK(m5.j["type"] == "D6");
  CHECK(m5.j["dimension"] == 6);
}

TEST_CASE("cli: semiclassical") {
  CliResult r = run_cli({"semiclassical", "--q", "t^3", "--expr", "u",
                         "--expr", "v"});
  CHECK(r.code == 0);
  CHECK(r.j["ok"] == true);
}

TEST_CASE("cli: errors carry the library error identity") {
  CliResult parse = run_cli({"reduce", "--q", "t^3", "--expr", "2w"});
  CHECK(parse.code == 2);
  CHECK(parse.j["error"]["type"] == "parse_error");
  CHECK(parse.j["error"]["message"].get<std::string>().find("position") !=
        std::string::npos);

  CliResult pre = run_cli({"derive-p", "--q", "2*t^3"});
  CHECK(pre.code == 2);
  CHECK(pre.j["error"]["type"] == "precondition_error");

  CliResult both = run_cli({"reduce", "--q", "t^3", "--p", "3*t^2+8*t+8",
                            "--expr", "u"});
  CHECK(both.code == 2);

  CliResult badmax = run_cli({"verify", "--max-degree", "2"});
  CHECK(badmax.code == 2);
  CHECK(badmax.j["error"]["type"] == "precondition_error");
}

TEST_CASE("cli: usage errors exit 2, help exits 0") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"derive-p"}).code == 2);  // missing required --q
  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("dklein") != std::string::npos);
}

TEST_CASE("cli: emitted text re-parses to equal values") {
  AlgebraSpec d = AlgebraSpec::make(AlgebraKind::D, parse_poly("t^3+i*t"),
                                    parse_scalar("1/2"));
  for (const char* expr : {"w*v*u^2+(1/2+i)*v", "v*u^2-w^2", "u*w*u"}) {
    CliResult r = run_cli({"reduce", "--q", "t^3+i*t", "--gamma", "1/2",
                           "--expr", expr});
    REQUIRE(r.code == 0);
    Element direct = parse_element(d, expr);
    CHECK(parse_element(d, r.j["element"].get<std::string>()) == direct);
  }
}
