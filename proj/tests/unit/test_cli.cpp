#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qstates/app/commands.hpp"
#include "qstates/app/config.hpp"
#include "qstates/app/verify.hpp"
#include "qstates/errors.hpp"

using namespace qstates;
using namespace qstates::app;
using doctest::Approx;
using wells::Family;

namespace {

struct Csv {
  std::string header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> comments;
};

// Splits CSV text into a header, data rows and '#' lines. Data rows after a
// comment line that is followed by a second header are kept as-is.
Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  std::getline(in, csv.header);
  while (std::getline(in, line)) {
    if (line.starts_with('#')) {
      csv.comments.push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    csv.rows.push_back(cells);
  }
  return csv;
}

double num(const std::string& s) { return std::stod(s); }

RunConfig config(Command cmd, Family fam) {
  RunConfig c;
  c.command = cmd;
  c.family = fam;
  return c;
}

int run_quiet(const RunConfig& c, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = run(c, o, e);
  if (out) *out = o.str();
  return code;
}

}  // namespace

TEST_CASE("grid parsing") {
  const GridArg g = parse_grid("-5:5:1001");
  CHECK(g.start == -5.0);
  CHECK(g.end == 5.0);
  CHECK(g.points == 1001);
  CHECK(parse_grid("0:1e2:11").end == 100.0);
  for (const char* bad : {"", "0:1", "0:1:2:3", "1:0:10", "0:1:1", "0:1:x", " 0:1:10", "0:1:10 ", "+0:1:10",
                          "0:inf:10", "nan:1:10", "0:1:-3", "0:1:1.5", "0x1:2:10", "0:1:10abc"})
    CHECK_THROWS_AS_MESSAGE(parse_grid(bad), UsageError, bad);
}

TEST_CASE("tolerance and units parsing") {
  const auto t = parse_tolerance("energy=1e-8");
  CHECK(t.first == "energy");
  CHECK(t.second == 1e-8);
  for (const char* bad : {"energy", "=1", "energy=0", "energy=-1", "energy=abc", "energy=inf"})
    CHECK_THROWS_AS_MESSAGE(parse_tolerance(bad), UsageError, bad);
  CHECK(parse_units("eV") == Units::ev);
  CHECK(parse_units("rydberg") == Units::rydberg);
  CHECK_THROWS_AS(parse_units("si"), UsageError);
  CHECK(effective_units(config(Command::eigenstate, Family::hydrogen)) == Units::rydberg);
  CHECK(effective_units(config(Command::eigenstate, Family::box)) == Units::natural);
  CHECK_THROWS_AS(Tolerances().set("bogus", 1.0), UsageError);
}

TEST_CASE("eigenstate: oscillator parity") {
  RunConfig c = config(Command::eigenstate, Family::ho1d);
  c.n = 3;
  c.grid = parse_grid("-5:5:1001");
  const Csv csv = parse_csv(render_eigenstate(c));
  CHECK(csv.header == "x,psi_re,psi_im,prob_density");
  REQUIRE(csv.rows.size() == 1001);
  for (std::size_t i = 0; i < 1001; ++i) {
    const double a = num(csv.rows[i][1]);
    const double b = num(csv.rows[1000 - i][1]);
    CHECK(std::abs(a + b) <= 1e-12);
    CHECK(num(csv.rows[i][2]) == 0.0);
  }
  REQUIRE(csv.comments.size() == 1);
  CHECK(csv.comments[0].find("E=3.50000000000e+00") != std::string::npos);
}

TEST_CASE("eigenstate: hydrogen vanishes only at the origin for l > 0") {
  RunConfig c = config(Command::eigenstate, Family::hydrogen);
  c.n = 2;
  c.l = 1;
  c.m = 0;
  c.grid = parse_grid("0:20:401");
  const Csv csv = parse_csv(render_eigenstate(c));
  CHECK(num(csv.rows[0][3]) == 0.0);
  CHECK(num(csv.rows[10][3]) > 0.0);
  CHECK(csv.comments[0].find("units=rydberg") != std::string::npos);
  CHECK(csv.comments[0].find("E=-2.50000000000e-01") != std::string::npos);
}

TEST_CASE("eigenstate: box density integrates to one") {
  RunConfig c = config(Command::eigenstate, Family::box);
  c.n = 2;
  c.width = 2.0;
  c.grid = parse_grid("-1:1:2001");
  const Csv csv = parse_csv(render_eigenstate(c));
  double sum = 0;
  for (const auto& row : csv.rows) sum += num(row[3]) * 1e-3;
  CHECK(sum == Approx(1.0).epsilon(1e-4));
}

TEST_CASE("eigenstate: unit conversion") {
  RunConfig c = config(Command::eigenstate, Family::iso_ho);
  c.n = 1;
  c.l = 1;
  c.m = 1;
  c.theta = 0.7;
  c.phi = 0.3;
  c.grid = parse_grid("0:6:301");
  const Csv nat = parse_csv(render_eigenstate(c));
  c.units = Units::ev;
  const Csv ev = parse_csv(render_eigenstate(c));
  const double a = wells::PhysicalConstants::bohr_radius_angstrom;
  const double ha = wells::PhysicalConstants::hartree_eV;
  REQUIRE(nat.rows.size() == ev.rows.size());
  for (std::size_t i = 0; i < nat.rows.size(); ++i) {
    CHECK(num(ev.rows[i][0]) == Approx(num(nat.rows[i][0]) * a).epsilon(1e-10));
    CHECK(num(ev.rows[i][1]) == Approx(num(nat.rows[i][1]) * std::pow(a, -1.5)).epsilon(1e-10));
    CHECK(num(ev.rows[i][3]) == Approx(num(nat.rows[i][3]) * std::pow(a, -3.0)).epsilon(1e-10));
  }
  CHECK(ev.comments[0].find("units=ev") != std::string::npos);
  const auto energy = [](const std::string& line) {
    const auto p = line.find("E=") + 2;
    return std::stod(line.substr(p, line.find(' ', p) - p));
  };
  CHECK(energy(ev.comments[0]) == Approx(energy(nat.comments[0]) * ha).epsilon(1e-10));
}

TEST_CASE("spectrum") {
  SUBCASE("box") {
    RunConfig c = config(Command::spectrum, Family::box);
    c.count = 5;
    std::ostringstream out;
    write_spectrum(c, out);
    const Csv csv = parse_csv(out.str());
    CHECK(csv.header == "n,analytic_E,numerov_E,abs_err,node_count");
    REQUIRE(csv.rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      const double e = num(csv.rows[i][1]);
      CHECK(std::stoi(csv.rows[i][0]) == static_cast<int>(i) + 1);
      CHECK(num(csv.rows[i][3]) <= 1e-6 * std::abs(e));
      CHECK(std::stoi(csv.rows[i][4]) == static_cast<int>(i));
    }
  }
  SUBCASE("hydrogen") {
    RunConfig c = config(Command::spectrum, Family::hydrogen);
    c.count = 3;
    std::ostringstream out;
    write_spectrum(c, out);
    const Csv csv = parse_csv(out.str());
    for (std::size_t i = 0; i < 3; ++i) {
      const double n = static_cast<double>(i + 1);
      CHECK(num(csv.rows[i][1]) == Approx(-1.0 / (n * n)).epsilon(1e-12));
      CHECK(num(csv.rows[i][3]) <= 1e-5 / (n * n));
    }
  }
  SUBCASE("oscillator") {
    RunConfig c = config(Command::spectrum, Family::ho1d);
    c.count = 2;
    std::ostringstream out;
    write_spectrum(c, out);
    const Csv csv = parse_csv(out.str());
    CHECK(csv.rows[0][0] == "0");
    CHECK(num(csv.rows[0][1]) == 0.5);
    CHECK(num(csv.rows[0][2]) == Approx(0.5).epsilon(1e-8));
  }
  RunConfig bad = config(Command::spectrum, Family::box);
  bad.count = 11;
  std::ostringstream sink;
  CHECK_THROWS_AS(write_spectrum(bad, sink), UsageError);
}

TEST_CASE("bic") {
  RunConfig c = config(Command::bic, Family::box);
  c.scheme = bic::Scheme::darboux;
  c.grid = parse_grid("0:50:100001");
  bool ok = false;
  const Csv csv = parse_csv(render_bic(c, &ok));
  CHECK(ok);
  CHECK(csv.header == "r,s,f,V,psi,u_residual");
  REQUIRE(csv.rows.size() == 100001);
  CHECK(csv.rows.front()[5] == "nan");
  CHECK(csv.rows.back()[5] == "nan");
  double last = -1, max_res = 0;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const double s = num(csv.rows[i][1]);
    CHECK(s >= last);
    last = s;
    if (i > 0 && i + 1 < csv.rows.size()) max_res = std::max(max_res, num(csv.rows[i][5]));
  }
  CHECK(max_res <= 1e-5);
  REQUIRE(csv.comments.size() == 2);
  CHECK(csv.comments[0].find("scheme=darboux") != std::string::npos);
  CHECK(csv.comments[1].find("E0=5.00000000000e-01") != std::string::npos);

  c.grid = parse_grid("0:50:1001");
  CHECK_THROWS_AS(render_bic(c), UsageError);
  CHECK(run_quiet(c) == kBadArguments);
}

TEST_CASE("oldquantum") {
  RunConfig c = config(Command::oldquantum, Family::box);
  c.count = 4;
  c.delta_e_eV = 4.89;
  const std::string text = render_oldquantum(c);
  const Csv csv = parse_csv(text);
  CHECK(csv.header == "n,bohr_radius_aB,bohr_energy_eV,ws_ho_E");
  CHECK(std::stoi(csv.rows[0][0]) == 1);
  CHECK(num(csv.rows[0][2]) == Approx(-13.606).epsilon(1e-4));
  for (std::size_t i = 0; i < 4; ++i) {
    const double n = static_cast<double>(i + 1);
    CHECK(num(csv.rows[i][1]) == Approx(n * n).epsilon(1e-12));
  }
  CHECK(text.find("# transitions\nn_upper,n_lower,lambda_angstrom\n") != std::string::npos);
  const auto p = text.find("lambda_angstrom=");
  REQUIRE(p != std::string::npos);
  CHECK(std::stod(text.substr(p + 16)) == Approx(2536.0).epsilon(2.0 / 2536.0));
  c.count = 21;
  CHECK_THROWS_AS(render_oldquantum(c), UsageError);
}

TEST_CASE("exit codes") {
  RunConfig c = config(Command::eigenstate, Family::hydrogen);
  c.n = 2;
  c.l = 2;
  CHECK(run_quiet(c) == kBadArguments);
  c.l = 0;
  c.out = "/nonexistent-dir/x.csv";
  CHECK(run_quiet(c) == kIoError);

  RunConfig s = config(Command::spectrum, Family::box);
  s.count = 2;
  s.out = "/nonexistent-dir/s.csv";
  CHECK(run_quiet(s) == kIoError);

  RunConfig v;
  v.command = Command::verify;
  v.only = {"nosuchgroup"};
  CHECK(run_quiet(v) == kBadArguments);
  v.only = {"ladder"};
  v.tolerances = {{"bogus", 1.0}};
  CHECK(run_quiet(v) == kBadArguments);
  v.tolerances = {};
  std::string report;
  CHECK(run_quiet(v, &report) == kOk);
  CHECK(report.find("FAIL") == std::string::npos);
  v.only = {"spectral"};
  v.tolerances = {{"energy", 1e-16}, {"energy_radial", 1e-16}};
  CHECK(run_quiet(v, &report) == kVerifyFailed);
  CHECK(report.find("FAIL spectral") != std::string::npos);
}

TEST_CASE("file output matches stdout") {
  RunConfig c = config(Command::spectrum, Family::ho1d);
  c.count = 3;
  std::string direct;
  REQUIRE(run_quiet(c, &direct) == kOk);
  const auto path = std::filesystem::temp_directory_path() / "qstates_test_spectrum.csv";
  c.out = path.string();
  REQUIRE(run_quiet(c) == kOk);
  std::ifstream f(path, std::ios::binary);
  const std::string stored((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(stored == direct);
  std::filesystem::remove(path);
}

TEST_CASE("output does not depend on thread count") {
  RunConfig e = config(Command::eigenstate, Family::hydrogen);
  e.n = 3;
  e.l = 2;
  e.m = -1;
  e.theta = 1.1;
  RunConfig b = config(Command::bic, Family::box);
  b.scheme = bic::Scheme::von_neumann_wigner;
  b.grid = parse_grid("0:20:20001");
  RunConfig s = config(Command::spectrum, Family::iso_ho);
  s.count = 4;
  s.l = 1;
  for (RunConfig* c : {&e, &b, &s}) {
    std::string one, many;
    c->threads = 1;
    run_quiet(*c, &one);
    c->threads = 5;
    run_quiet(*c, &many);
    CHECK(one == many);
    CHECK(!one.empty());
  }
}
