#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "splitlab/io.hpp"

using namespace splitlab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("format_double emits shortest round-trip forms") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(1e300) == "1e+300");
    const double v = 0.073041509715034033908;
    CHECK(std::stod(format_double(v)) == v);
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("parse_seed takes decimal and 0x hex") {
    CHECK(parse_seed("0") == 0);
    CHECK(parse_seed("12345") == 12345);
    CHECK(parse_seed("0xff") == 255);
    CHECK(parse_seed("0XDEADBEEF") == 0xDEADBEEFull);
    CHECK(parse_seed("18446744073709551615") == UINT64_MAX);
    CHECK_THROWS_AS(parse_seed(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_seed("12x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_seed("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_seed("18446744073709551616"), std::invalid_argument);  // overflow
    CHECK_THROWS_AS(parse_seed("0x"), std::invalid_argument);
}

TEST_CASE("atomic_write lands content and leaves no temp file") {
    const fs::path dir = fs::temp_directory_path() / "splitlab_io_test";
    fs::create_directories(dir);
    const fs::path target = dir / "out.csv";

    atomic_write(target, "hello\n");
    CHECK(slurp(target) == "hello\n");
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));

    atomic_write(target, "replaced\n");
    CHECK(slurp(target) == "replaced\n");

    CHECK_THROWS_AS(atomic_write(dir / "missing" / "out.csv", "x"), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("trajectory CSV carries the documented header and one row per point") {
    ModelTrajectory t;
    t.points.push_back({0, 60, 100.0, 6.6666666666666667, 1.0 / 15.0, 4.0, 0.99, 6e5, 6e5});
    t.points.push_back({1, 59, 104.4, 7.62, 0.073, 4.3, 0.98, 643000.0, 1243000.0});
    const std::string csv = trajectory_csv(t);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "j,n,m,p,x,k,r,step_cost,cum_cost");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 2);
    CHECK(csv.find("0,60,100,") == csv.find('\n') + 1);
}

TEST_CASE("split trace CSV header matches the elimination schema") {
    std::vector<TracePoint> trace(1);
    trace[0].step = 1;
    trace[0].variable = 3;
    const std::string csv = split_trace_csv(trace);
    CHECK(csv.rfind("j,var,n,m,r,s,generated,kept,k_mean,p_mean,x,step_cost\n", 0) == 0);
    CHECK(csv.find("\n1,3,") != std::string::npos);
}

TEST_CASE("scan CSV sanitizes commas in failure text") {
    ModelParams p;
    std::vector<ScanEntry> entries{{100, 3.0, 388.5, "ok"},
                                   {2, 3.0, std::numeric_limits<double>::quiet_NaN(),
                                    "k must not exceed n, really"}};
    const std::string csv = scan_csv(entries, p);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,k,alpha,lambda,m_c,status");
    std::getline(is, line);
    CHECK(line == "100,3,0,1,388.5,ok");
    std::getline(is, line);
    CHECK(line == "2,3,0,1,nan,k must not exceed n; really");
}

TEST_SUITE_END();
