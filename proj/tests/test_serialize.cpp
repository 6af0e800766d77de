#include <doctest.h>

#include <json.hpp>

#include "ginprod/moments.hpp"
#include "ginprod/serialize.hpp"
#include "ginprod/wick.hpp"

using namespace ginprod;
using nlohmann::json;

TEST_SUITE("serialize") {
  TEST_CASE("trace polynomial JSON: canonical term order and exact strings") {
    const auto poly = ginibre_moment_poly(Word::parse("xdxd"));
    const json j = json::parse(trace_polynomial_json(poly));
    CHECK(j["sigma_power"] == 4);
    REQUIRE(j["terms"].size() == 2);
    // (1,1) sorts before (2)
    CHECK(j["terms"][0]["partition"] == json::array({1, 1}));
    CHECK(j["terms"][0]["n_power"] == -2);
    CHECK(j["terms"][0]["num"] == "1");
    CHECK(j["terms"][0]["den"] == "1");
    CHECK(j["terms"][1]["partition"] == json::array({2}));
    CHECK(j["terms"][1]["n_power"] == -1);
  }

  TEST_CASE("NLaurent rendering") {
    NLaurent p;
    p.add_term(2, 2);
    p.add_term(0, 4);
    CHECK(p.str() == "2*N^2 + 4");
    NLaurent q;
    q.add_term(1, 5);
    q.add_term(-1, 1);
    CHECK(q.str() == "5*N + 1/N");
    NLaurent r;
    r.add_term(0, 12);
    r.add_term(-2, 21);
    r.add_term(-4, 3);
    CHECK(r.str() == "12 + 21/N^2 + 3/N^4");
    CHECK(NLaurent().str() == "0");
    NLaurent neg;
    neg.add_term(1, -3);
    neg.add_term(0, BigRational(1, 2));
    CHECK(neg.str() == "-3*N + 1/2");
  }

  TEST_CASE("moment result JSON carries mode, value, and provenance") {
    const auto r = large_n_moment(Word::parse("xdxdxd"), EnsembleSpec::uniform(2));
    const json j = json::parse(moment_result_json(r));
    CHECK(j["word"] == "xdxdxd");
    CHECK(j["factors"] == 2);
    CHECK(j["mode"] == "large_n");
    CHECK(j["sigma_power"] == 6);
    CHECK(j["tc_provenance"] == "formula");
    CHECK(j["value"]["num"] == "12");
    CHECK(j["value"]["den"] == "1");
    CHECK(j["numeric"] == 12.0);

    const auto f = finite_n_moment_n2(Word::parse("xdxd"));
    const json jf = json::parse(moment_result_json(f));
    CHECK(jf["mode"] == "finite_n");
    CHECK(jf["value_str"] == "3 + 1/N^2");
    REQUIRE(jf["value"]["coefficients"].size() == 2);
  }

  TEST_CASE("CSV headers are fixed") {
    const auto r = large_n_moment(Word::parse("xd"), EnsembleSpec::uniform(3));
    CHECK(moment_result_csv(r).starts_with("word,factors,mode,sigma_power,tc_provenance,value\n"));

    MCConfig cfg;
    cfg.spec = EnsembleSpec::uniform(2);
    cfg.N = 16;
    cfg.samples = 4;
    cfg.seed = 9;
    const Estimate est = estimate_word_moment(Word::parse("xd"), cfg);
    CHECK(estimate_csv(Word::parse("xd"), cfg, est)
              .starts_with("word,factors,N,samples,seed,sigma,mean,stderr,imag_mean\n"));

    SpectrumReport rep;
    rep.n = 1;
    rep.sigma = 1.0;
    rep.radii = {0.5, 1.0};
    CHECK(spectrum_cdf_csv(rep).starts_with("r,empirical_cdf,theory_cdf\n"));
    CHECK(spectrum_density_csv(rep, 4).starts_with("bin_center,density,theory,count\n"));
  }
}
