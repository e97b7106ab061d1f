// SPDX-License-Identifier: Apache-2.0

#include "wmono/commands.hpp"

#include "doctest.h"
#include "wmono/csv.hpp"
#include "wmono/state_spec.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace wmono;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("grid parsing") {
  const auto single = cli::parse_grid("2:2:1");
  REQUIRE(single.size() == 1);  // lo is always included, even past hi
  CHECK(single[0] == 2.0);

  const auto fig1 = cli::parse_grid("2:0.1:10");
  REQUIRE(fig1.size() == 81);
  CHECK(fig1.front() == 2.0);
  CHECK(fig1.back() == doctest::Approx(10.0).epsilon(1e-12));

  const auto quarter = cli::parse_grid("1:0.25:2");
  REQUIRE(quarter.size() == 5);
  CHECK(quarter[3] == doctest::Approx(1.75).epsilon(1e-15));

  CHECK_THROWS_AS(cli::parse_grid("2:0.1"), std::domain_error);
  CHECK_THROWS_AS(cli::parse_grid("2:0.1:10:4"), std::domain_error);
  CHECK_THROWS_AS(cli::parse_grid("a:1:2"), std::domain_error);
  CHECK_THROWS_AS(cli::parse_grid("1:0:2"), std::domain_error);
  CHECK_THROWS_AS(cli::parse_grid("1:-0.5:2"), std::domain_error);
  CHECK_THROWS_AS(cli::parse_grid(""), std::domain_error);
}

TEST_CASE("double formatting is locale-proof and round-trips") {
  CHECK(cli::format_double(0.1) == "0.1");
  CHECK(cli::format_double(2.0) == "2");
  CHECK(cli::format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(cli::format_double(0.203670030886926223) == "0.203670030887");

  std::mt19937_64 gen(55);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    const double v = std::ldexp(dist(gen), static_cast<int>(gen() % 40) - 20);
    const std::string s = cli::format_double(v);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(std::abs(back - v) <= std::abs(v) * 1e-11);
  }
}

TEST_CASE("curve CSV output is stable byte for byte") {
  std::vector<monogamy::NamedCurve> curves;
  curves.push_back({"alpha", {{1.0, 0.5}, {2.0, 0.25}}});
  curves.push_back({"ref", {{1.0, 0.125}}});

  std::ostringstream first, second;
  cli::write_curves_csv(first, curves);
  cli::write_curves_csv(second, curves);
  CHECK(first.str() == second.str());
  CHECK(first.str() ==
        "param,curve_name,value\n"
        "1,alpha,0.5\n"
        "2,alpha,0.25\n"
        "1,ref,0.125\n");
}

TEST_CASE("curve SVG output renders lines and reference rules") {
  std::vector<monogamy::NamedCurve> curves;
  curves.push_back({"curve", {{1.0, 0.5}, {2.0, 0.25}, {3.0, 0.75}}});
  curves.push_back({"ref", {{1.0, 0.125}}});

  std::ostringstream a, b;
  cli::write_curves_svg(a, curves, "demo");
  cli::write_curves_svg(b, curves, "demo");
  CHECK(a.str() == b.str());
  const std::string svg = a.str();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find(">curve<") != std::string::npos);
  CHECK(svg.find(">ref<") != std::string::npos);

  CHECK_THROWS_AS(cli::write_curves_svg(a, {}, "empty"), std::domain_error);
}

TEST_CASE("state specs load, validate and explain their failures") {
  SUBCASE("valid document round-trips") {
    TempFile spec("wmono_test_ok.json",
                  R"({"n": 3, "a": [0.5, 0.0], "b": [[0.5, 0.0], [0.0, 0.5], [0.5, 0.0]]})");
    const wclass::WClassParams p = cli::load_state_spec(spec.path);
    CHECK(p.n == 3);
    CHECK(p.a == lin::Complex(0.5, 0.0));
    CHECK(p.b[1] == lin::Complex(0.0, 0.5));
    CHECK_NOTHROW(p.validate(1e-9));
  }

  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(cli::load_state_spec("no_such_file.json"),
                         doctest::Contains("cannot open"), std::domain_error);
  }

  SUBCASE("malformed JSON names the file") {
    TempFile spec("wmono_test_bad.json", "{ not json");
    CHECK_THROWS_WITH_AS(cli::load_state_spec(spec.path),
                         doctest::Contains("wmono_test_bad.json"), std::domain_error);
  }

  SUBCASE("missing fields are named") {
    TempFile spec("wmono_test_missing.json", R"({"n": 3, "a": [0.5, 0.0]})");
    CHECK_THROWS_WITH_AS(cli::load_state_spec(spec.path), doctest::Contains("'b'"),
                         std::domain_error);
  }

  SUBCASE("bad amplitude entries carry their index") {
    TempFile spec("wmono_test_entry.json",
                  R"({"n": 3, "a": [0.5, 0.0], "b": [[0.5, 0.0], [1.0], [0.5, 0.0]]})");
    CHECK_THROWS_WITH_AS(cli::load_state_spec(spec.path), doctest::Contains("b[1]"),
                         std::domain_error);
  }

  SUBCASE("non-integer n") {
    TempFile spec("wmono_test_n.json", R"({"n": 2.5, "a": [1.0, 0.0], "b": []})");
    CHECK_THROWS_WITH_AS(cli::load_state_spec(spec.path), doctest::Contains("'n'"),
                         std::domain_error);
  }

  SUBCASE("unnormalized parameters fail validation") {
    TempFile spec("wmono_test_norm.json",
                  R"({"n": 2, "a": [0.9, 0.0], "b": [[0.9, 0.0], [0.0, 0.0]]})");
    CHECK_THROWS_AS(cli::load_state_spec(spec.path), std::domain_error);
  }

  CHECK(cli::default_state().n == 5);
}

TEST_CASE("run configuration") {
  cli::RunConfig config;
  CHECK_NOTHROW(config.validate());
  CHECK(config.tol("margin", 1e-10) == 1e-10);
  config.tolerances["margin"] = 1e-8;
  CHECK(config.tol("margin", 1e-10) == 1e-8);
  config.budget = 99;
  CHECK_THROWS_AS(config.validate(), std::domain_error);
}

TEST_CASE("bound command") {
  const cli::RunConfig config;

  SUBCASE("lower bound, two partners") {
    cli::BoundArgs args;
    args.theorem = 1;
    args.subset = {2, 3};
    args.x = 2.0;
    std::ostringstream out, err;
    CHECK(cli::cmd_bound(args, config, out, err) == 0);
    CHECK(err.str().empty());
    CHECK(out.str().find("bound       : 0.203670030887") != std::string::npos);
    CHECK(out.str().find("verdict     : HOLDS") != std::string::npos);
    CHECK(out.str().find("RESULT theorem=1 subset=2,3 x=2 ") != std::string::npos);
    CHECK(out.str().find("holds=1") != std::string::npos);
  }

  SUBCASE("strict upper bound") {
    cli::BoundArgs args;
    args.theorem = 2;
    args.subset = {2, 3};
    args.y = -1.0;
    std::ostringstream out, err;
    CHECK(cli::cmd_bound(args, config, out, err) == 0);
    CHECK(out.str().find("margin=18.845131803") != std::string::npos);
  }

  SUBCASE("entanglement sum bound takes no subset") {
    cli::BoundArgs args;
    args.theorem = 3;
    args.alpha = 1.0;
    std::ostringstream out, err;
    CHECK(cli::cmd_bound(args, config, out, err) == 0);
    CHECK(out.str().find("relation    : lhs <= rhs") != std::string::npos);

    args.subset = {2};
    std::ostringstream out2, err2;
    CHECK(cli::cmd_bound(args, config, out2, err2) == 2);
    CHECK(err2.str().find("drop --subset") != std::string::npos);
  }

  SUBCASE("squared upper bound reports the reference value") {
    cli::BoundArgs args;
    args.theorem = 4;
    args.subset = {2, 3};
    args.alpha = 0.971;
    std::ostringstream out, err;
    CHECK(cli::cmd_bound(args, config, out, err) == 0);
    CHECK(out.str().find("bound       : 0.019854260726\n") != std::string::npos);
  }

  SUBCASE("usage errors exit 2") {
    std::ostringstream out, err;

    cli::BoundArgs no_x;
    no_x.theorem = 1;
    no_x.subset = {2};
    CHECK(cli::cmd_bound(no_x, config, out, err) == 2);

    cli::BoundArgs extra;
    extra.theorem = 1;
    extra.subset = {2};
    extra.x = 2.0;
    extra.alpha = 1.0;
    CHECK(cli::cmd_bound(extra, config, out, err) == 2);

    cli::BoundArgs no_subset;
    no_subset.theorem = 2;
    no_subset.y = -1.0;
    CHECK(cli::cmd_bound(no_subset, config, out, err) == 2);

    cli::BoundArgs bad_thm;
    bad_thm.theorem = 7;
    CHECK(cli::cmd_bound(bad_thm, config, out, err) == 2);

    cli::BoundArgs bad_y;
    bad_y.theorem = 2;
    bad_y.subset = {2};
    bad_y.y = 0.5;
    CHECK(cli::cmd_bound(bad_y, config, out, err) == 2);
  }

  SUBCASE("a state spec reroutes the computation") {
    TempFile spec("wmono_test_state.json",
                  R"({"n": 3, "a": [0.5, 0.0], "b": [[0.5, 0.0], [0.5, 0.0], [0.5, 0.0]]})");
    cli::BoundArgs args;
    args.theorem = 1;
    args.spec_path = spec.path;
    args.subset = {2};
    args.x = 2.0;
    std::ostringstream out, err;
    CHECK(cli::cmd_bound(args, config, out, err) == 0);
    // pair value 2 * 0.5 * 0.5 = 0.5; bound sqrt(2/3 * 0.25)
    CHECK(out.str().find("bound       : 0.408248290464") != std::string::npos);
  }
}

TEST_CASE("verify command") {
  cli::RunConfig config;
  config.seed = 3;

  std::ostringstream out, err;
  CHECK(cli::cmd_verify("thm1", config, out, err) == 0);
  CHECK(out.str().find("suite thm1: checks=") != std::string::npos);
  CHECK(out.str().find(" failed=0") != std::string::npos);
  CHECK(out.str().find("all checks passed") != std::string::npos);
  CHECK(out.str().find("seed 3") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cli::cmd_verify("bogus", config, out2, err2) == 2);
  CHECK(err2.str().rfind("error: ", 0) == 0);

  config.budget = 10;
  std::ostringstream out3, err3;
  CHECK(cli::cmd_verify("thm1", config, out3, err3) == 2);
}

TEST_CASE("figure command") {
  const cli::RunConfig config;

  SUBCASE("single-point exponent sweep, stdout route") {
    cli::FigureArgs args;
    args.which = "fig1";
    args.grid = "2:2:1";
    std::ostringstream out, err;
    CHECK(cli::cmd_figure(args, config, out, err) == 0);
    CHECK(out.str() ==
          "param,curve_name,value\n"
          "2,crenoa_lower_A1_vs_A2A3,0.203670030887\n"
          "2,crenoa_lower_A1_vs_A2A3A4,0.38490017946\n"
          "2,coa_ref_A1_vs_A2A3,0.249\n"
          "2,coa_ref_A1_vs_A2A3A4,0.471\n");
    CHECK(err.str().empty());

    // Byte-determinism across invocations.
    std::ostringstream out2, err2;
    CHECK(cli::cmd_figure(args, config, out2, err2) == 0);
    CHECK(out.str() == out2.str());
  }

  SUBCASE("order sweep emits the comparison report on the side channel") {
    cli::FigureArgs args;
    args.which = "fig2";
    args.grid = "0.9:0.04:0.98";
    std::ostringstream out, err;
    CHECK(cli::cmd_figure(args, config, out, err) == 0);
    CHECK(out.str().rfind("param,curve_name,value\n", 0) == 0);
    CHECK(err.str().find("comparison sre_upper_A1_vs_A2A3:") != std::string::npos);
    CHECK(err.str().find("grid does not contain alpha = 0.971") != std::string::npos);
    CHECK(err.str().find("not enforced") != std::string::npos);
  }

  SUBCASE("grid points inside the excluded band are refused") {
    cli::FigureArgs args;
    args.which = "fig2";
    args.grid = "0.95:0.045:1.1";  // hits 0.995
    std::ostringstream out, err;
    CHECK(cli::cmd_figure(args, config, out, err) == 2);
    CHECK(err.str().find("excluded band") != std::string::npos);
  }

  SUBCASE("unknown figure and svg-without-out are usage errors") {
    cli::FigureArgs args;
    args.which = "fig3";
    std::ostringstream out, err;
    CHECK(cli::cmd_figure(args, config, out, err) == 2);

    cli::FigureArgs svg;
    svg.which = "fig1";
    svg.grid = "2:2:1";
    svg.svg = true;
    std::ostringstream out2, err2;
    CHECK(cli::cmd_figure(svg, config, out2, err2) == 2);
    CHECK(err2.str().find("--svg needs --out") != std::string::npos);
  }

  SUBCASE("file routes write csv and svg siblings") {
    cli::FigureArgs args;
    args.which = "fig1";
    args.grid = "2:1:4";
    args.svg = true;
    cli::RunConfig file_config;
    file_config.out_path = "wmono_test_fig1.csv";
    std::ostringstream out, err;
    CHECK(cli::cmd_figure(args, file_config, out, err) == 0);
    CHECK(out.str().find("wrote wmono_test_fig1.csv") != std::string::npos);
    CHECK(out.str().find("wrote wmono_test_fig1.svg") != std::string::npos);

    const std::string csv = slurp("wmono_test_fig1.csv");
    CHECK(csv.rfind("param,curve_name,value\n", 0) == 0);
    // 3 grid points x 2 curves + 2 reference rows + header = 9 lines
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
    const std::string svg_text = slurp("wmono_test_fig1.svg");
    CHECK(svg_text.rfind("<svg", 0) == 0);

    std::remove("wmono_test_fig1.csv");
    std::remove("wmono_test_fig1.svg");
  }
}
