#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "polygeo/cli.hpp"
#include "polygeo/exact.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = polygeo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cf") {
    const auto r = run({"cf", "--alpha", "phi", "--digits", "5"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["digits"] == nlohmann::json::parse("[1,1,1,1,1]"));
    CHECK(j["q"] == nlohmann::json::parse("[1,1,2,3,5]"));
    CHECK(j["digit_bound"] == 1);
  }

  TEST_CASE("ostrowski and rotate") {
    const auto o = nlohmann::json::parse(run({"ostrowski", "--alpha", "phi", "--n", "11"}).out);
    CHECK(o["digits"] == nlohmann::json::parse("[0,0,0,1,0,1]"));
    CHECK(o["valid"] == true);
    const auto r = nlohmann::json::parse(run({"rotate", "--alpha", "phi", "--n", "10", "--interval", "0,1/2"}).out);
    CHECK(r["visits"] == 5);
    const auto csv = lines(run({"rotate", "--alpha", "phi", "--n", "25", "--format", "csv"}).out);
    REQUIRE(csv.size() == 26);
    CHECK(csv[0] == "k,frac_decimal_40");
    // rows parse back to the exact orbit up to the 40-digit truncation
    for (std::size_t k = 1; k < csv.size(); ++k) {
      const auto comma = csv[k].find(',');
      CHECK(std::stoul(csv[k].substr(0, comma)) == k);
      const std::string dec = csv[k].substr(comma + 1);
      CHECK(dec.front() == '~');
      const polygeo::Rational back = polygeo::parse_rational(dec.substr(1));
      const polygeo::Quad exact = polygeo::frac(polygeo::Quad(static_cast<long long>(k)) * polygeo::constants::phi());
      CHECK(polygeo::Quad(back) < exact);
      CHECK(exact - polygeo::Quad(back) < polygeo::Quad(polygeo::Rational(1, 1000000000)));
    }
  }

  TEST_CASE("lemma1") {
    const auto one = nlohmann::json::parse(run({"lemma1", "--alpha", "phi", "--h", "4", "--interval", "0,1/5"}).out);
    CHECK(one["count"] == 1);
    const auto sweep = nlohmann::json::parse(run({"lemma1", "--alpha", "sqrt2", "--h", "8", "--len", "1/q"}).out);
    CHECK(sweep["at_most_3"] == true);
  }

  TEST_CASE("trace formats") {
    const auto csv = lines(run({"trace", "--surface", "L3", "--alpha", "phi", "--n", "10"}).out);
    REQUIRE(csv.size() == 11);
    CHECK(csv[0] == "k,edge,height_decimal_40");
    CHECK(csv[1].rfind("1,1,~0.1180339887", 0) == 0);
    const auto path = std::filesystem::temp_directory_path() / "polygeo_trace.svg";
    const auto r = run({"trace", "--surface", "L3", "--n", "500", "--format", "svg", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);
    CHECK(svg.find("<script") == std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("errors are JSON on stderr") {
    const auto missing = run({"trace", "--surface", "nosuch.json", "--n", "5"});
    CHECK(missing.code != 0);
    CHECK(missing.out.empty());
    const auto j = nlohmann::json::parse(missing.err);
    CHECK(j["error"] == "MalformedFile");
    CHECK(j.contains("detail"));
    const auto bad = run({"cf", "--alpha", "3/2"});
    CHECK(bad.code != 0);
    CHECK(nlohmann::json::parse(bad.err)["error"] == "BadArgs");
    const auto unknown = run({"frobnicate"});
    CHECK(unknown.code != 0);
    CHECK(nlohmann::json::parse(unknown.err)["error"] == "BadArgs");
    const auto format = run({"trace", "--format", "xml", "--n", "3"});
    CHECK(nlohmann::json::parse(format.err)["error"] == "BadArgs");
    const auto case_b = run({"lemma3", "--surface", "L3", "--n", "20000", "--C", "3"});
    CHECK(nlohmann::json::parse(case_b.err)["error"] == "PreconditionNotMet");
  }

  TEST_CASE("threshold and uniformity") {
    const auto t = nlohmann::json::parse(
        run({"threshold", "--surface", "L3", "--alpha", "phi", "--n", "20000", "--eps", "0.1"}).out);
    CHECK(t["bracket"].contains("lower"));
    CHECK(t["bracket"].contains("upper"));
    const auto u = nlohmann::json::parse(run({"uniformity", "--surface", "L3", "--n", "20000", "--C", "200"}).out);
    CHECK(u["min_visit"].get<int>() <= u["max_visit"].get<int>());
    CHECK(u["sandwich"] == true);
    const auto sweep = lines(run({"uniformity", "--surface", "L3", "--n", "20000", "--format", "csv"}).out);
    CHECK(sweep[0] == "C,min,max,ratio,case");
    CHECK(sweep.size() > 5);
    const auto ta = nlohmann::json::parse(run({"threshold-a", "--alpha", "phi", "--n", "5000"}).out);
    CHECK(ta["bracket"]["probes"].size() > 0);
  }

  TEST_CASE("determinism and threads") {
    const std::vector<std::string> args{"lemma3", "--surface", "L3", "--n", "20000", "--samples", "100", "--seed", "9"};
    const auto a = run(args);
    CHECK(a.code == 0);
    setenv("POLYGEO_THREADS", "1", 1);
    const auto b = run(args);
    unsetenv("POLYGEO_THREADS");
    auto with_flag = args;
    with_flag.insert(with_flag.begin(), {"--threads", "3"});
    const auto c = run(with_flag);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    auto trailing = args;
    trailing.insert(trailing.end(), {"--threads", "2"});
    CHECK(run(trailing).out == a.out);
    const auto sd = nlohmann::json::parse(run({"superdensity", "--surface", "torus", "--mmax", "8"}).out);
    CHECK(sd["rows"].size() == 4);
  }
}
