#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mlfrac/catalog.hpp"
#include "mlfrac/frac_ops.hpp"
#include "mlfrac/series.hpp"
#include "test_util.hpp"

using namespace mlfrac;
using mlfrac::testing::C;
using mlfrac::testing::check_close;
using json = nlohmann::json;

namespace {

struct Run {
    std::string out;
    int status = -1;
};

Run cli(const std::string& args, const std::string& env = "") {
    Run r;
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + MLFRAC_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

Complex value_of(const json& j) { return {j["re"].get<Real>(), j["im"].get<Real>()}; }

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("eval json: exponential and a complex literal") {
    const Run r = cli("eval --fn ml2 --alpha 1 --beta 1 --z 1 --z 2i");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["job"]["command"] == "eval");
    CHECK(j["meta"]["seed"] == 7);
    REQUIRE(j["results"].size() == 2);
    check_close(value_of(j["results"][0]["value"]), C(2.718281828459045), 1e-15);
    check_close(value_of(j["results"][1]["value"]), C(std::cos(2.0), std::sin(2.0)), 1e-15);
    CHECK(j["results"][0]["status"] == "converged");
}

TEST_CASE("eval csv: header and one row per grid point") {
    const Run r = cli("eval --fn ml3 --alpha 0.5 --beta 1 --gamma 2 --grid 0:2:5:0.3 --format csv");
    REQUIRE(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "z_re,z_im,re,im,terms,status");
    CHECK(ls[1].rfind("0,0,1,0,", 0) == 0);
}

TEST_CASE("eval: library errors become error rows") {
    const Run r = cli("eval --fn mseries --a 1,2,3 --alpha 0.2 --beta 1 --z 0.5 --z 0 --format csv");
    REQUIRE(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[1].find("error") != std::string::npos);
    CHECK(ls[2].find("converged") != std::string::npos);
}

TEST_CASE("term cap from the environment") {
    const Run r = cli("eval --fn ml2 --alpha 1 --beta 1 --z 1 --format csv", "ML_FRACCALC_MAX_TERMS=3");
    REQUIRE(r.status == 0);
    CHECK(lines(r.out).at(1) == "1,0,2.5,0,3,truncated-at-cap");
    CHECK(cli("eval --fn ml2 --alpha 1 --beta 1 --z 1", "ML_FRACCALC_MAX_TERMS=abc").status == 2);
}

TEST_CASE("flag errors exit 2") {
    CHECK(cli("eval --fn ml2 --alpha 1 --beta 1 --z 1 --tol 0.5").status == 2);
    CHECK(cli("eval --fn ml2 --alpha 1 --beta 1 --z 1 --tol 0").status == 2);
    CHECK(cli("eval --fn ml2 --alpha 1 --z 1").status == 2);
    CHECK(cli("eval --fn nope --alpha 1 --z 1").status == 2);
    CHECK(cli("eval --fn ml2 --alpha 1 --beta 1 --grid 0:1:0").status == 2);
    CHECK(cli("eval --fn ml2 --alpha 1 --beta 1 --z 1x").status == 2);
    CHECK(cli("eval --fn ml2 --alpha 1 --beta 1 --z 1 --format xml").status == 2);
    CHECK(cli("eval --fn ml2 --alpha 1 --beta 1 --z 1 --bogus").status == 2);
    CHECK(cli("eval --fn ml2 --alpha 1 --beta 1").status == 2);
    CHECK(cli("verify --suite nope").status == 2);
    CHECK(cli("frac --op rl --operand mseries:xi=1").status == 2);
    CHECK(cli("").status == 2);
}

TEST_CASE("reduce: Prabhakar lists") {
    const Run r = cli("reduce --fn ml3 --alpha 0.5 --beta 1.5 --gamma 2");
    REQUIRE(r.status == 0);
    const json res = json::parse(r.out)["results"][0];
    const FoxWrightSpec want = reduce_to_fox_wright(MLParams{MLThree{0.5L, 1.5L, 2.0L}});
    REQUIRE(res["upper"].size() == want.upper.size());
    REQUIRE(res["lower"].size() == want.lower.size());
    for (std::size_t i = 0; i < want.lower.size(); ++i) {
        check_close(value_of(res["lower"][i]["value"]), want.lower[i].value, 1e-15);
        CHECK(res["lower"][i]["weight"].get<Real>() == doctest::Approx(static_cast<double>(want.lower[i].weight)));
    }
    check_close(value_of(res["prefactor"]), want.prefactor, 1e-15);
}

TEST_CASE("frac saigo-left: layout and value") {
    const Run r = cli("frac --op saigo-left --alpha 0.5 --beta 0.2 --gamma 0.3 "
                      "--operand \"mseries:a=1.1;b=2.3;xi=0.7;eta=1.2;sigma=1.3;c=0.5;mu=1\" --z 0.5 --z 2");
    REQUIRE(r.status == 0);
    const json res = json::parse(r.out)["results"][0];
    check_close(value_of(res["exponent"]), C(0.1), 1e-15);

    PowerWeightedOperand f;
    f.sigma = 1.3L;
    f.c = 0.5L;
    f.inner = MSeries{{1.1L}, {2.3L}, 0.7L, 1.2L};
    const FracResult want = saigo_apply(OperatorParams::saigo(0.5L, 0.2L, 0.3L), f);
    CHECK(res["provenance"] == want.provenance);
    check_close(value_of(res["coefficient"]), want.coefficient, 1e-15);
    REQUIRE(res["values"].size() == 2);
    check_close(value_of(res["values"][0]["value"]), want.value(0.5L).value, 1e-15);
    check_close(value_of(res["values"][1]["value"]), want.value(2.0L).value, 1e-15);
}

TEST_CASE("frac rl derivative of order one half on an M-series") {
    const Run r = cli("frac --op rl --mode derivative --nu 0.5 --operand \"mseries:xi=1;eta=1.5\" --format json");
    REQUIRE(r.status == 0);
    const json res = json::parse(r.out)["results"][0];
    const FracResult want = rl_series(OperatorParams::rl(0.5L, Mode::derivative), MSeries{{}, {}, 1.0L, 1.5L});
    check_close(value_of(res["exponent"]), want.exponent, 1e-15, 1);
    CHECK(res["psi"]["lower"].size() == want.spec.lower.size());
}

TEST_CASE("verify: operator suite passes at a loose tolerance") {
    const Run r = cli("verify --suite theorem-4x --seed 7 --tol 1e-5 --no-records");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    REQUIRE(j["results"].size() == 2);
    for (const auto& rep : j["results"]) {
        CHECK(rep["pass"] == true);
        CHECK(rep["max_error"].get<double>() <= 1e-5);
        CHECK(rep["cases"].get<long>() > 0);
    }
}

TEST_CASE("verify: an impossible tolerance fails with exit 1") {
    const Run r = cli("verify --suite negative-alpha --tol 1e-30 --no-records");
    CHECK(r.status == 1);
    CHECK(json::parse(r.out)["pass"] == false);
}

TEST_CASE("verify catalog and --out") {
    const std::string path = "test_cli_catalog.json";
    std::remove(path.c_str());
    const Run r = cli("verify --catalog --out " + path);
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    const json j = json::parse(in);
    CHECK(j["results"].size() == identity_catalog().size());
    std::remove(path.c_str());
}

TEST_CASE("table: parameter by z matrix") {
    const Run r = cli("table --fn ml2 --sweep alpha=0.5,1,1.5 --beta 1 --grid 0:1:2");
    REQUIRE(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 7);
    CHECK(ls[0] == "alpha_re,alpha_im,z_re,z_im,re,im,terms,status");
    CHECK(ls[4].rfind("1,0,1,0,2.718281828459045", 0) == 0);
}
