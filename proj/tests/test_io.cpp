#include <doctest.h>

#include <cmath>
#include <random>

#include "llab/io.hpp"

using namespace llab;

TEST_CASE("doubles round-trip through their text form") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(i % 40) - 20);
    CHECK(io::parse_double(io::format_double(v)) == v);
  }
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(3.0) == "3");
  CHECK(io::parse_double("inf") == INFINITY);
  CHECK(io::parse_double("+2.5") == 2.5);
  CHECK(io::parse_double(" 7 ") == 7.0);
  CHECK_THROWS_AS(io::parse_double("1,5"), PreconditionError);
  CHECK_THROWS_AS(io::parse_double(""), PreconditionError);
}

TEST_CASE("csv parsing") {
  const auto t = io::parse_csv("# comment\r\na,b\r\n1,2\r\n\r\n3, 4\n");
  CHECK(t.header == std::vector<std::string>{"a", "b"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[1][1] == "4");

  const auto bare = io::parse_csv("1,2\n3,4");
  CHECK(bare.header.empty());
  CHECK(bare.rows.size() == 2);

  CHECK_THROWS_AS(io::parse_csv("a,b\n1\n"), PreconditionError);
  CHECK(io::write_csv({"x"}, {{"1"}, {"2"}}) == "x\n1\n2\n");
}

TEST_CASE("error curves round-trip through csv and json") {
  ErrorCurve c{{{0, 1.0, ErrorKind::Exact},
                {1, 0.1 + 0.2, ErrorKind::UpperBound},
                {2, 1.0 / 3.0, ErrorKind::Sampled},
                {7, 0.0, ErrorKind::Exact}}};
  const std::string csv = io::to_csv(c);
  CHECK(csv.rfind("n,value,kind\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(io::curve_from_csv(csv) == c);
  CHECK(io::curve_from_json(io::to_json(c)) == c);
  CHECK(io::curve_from_json(nlohmann::json::parse(io::to_json(c).dump())) == c);
  CHECK_THROWS_AS(io::curve_from_csv("n,value\n0,1\n"), PreconditionError);
  CHECK_THROWS_AS(io::curve_from_csv("n,value,kind\n0.5,1,EXACT\n"), PreconditionError);
  CHECK_THROWS_AS(io::curve_from_csv("n,value,kind\n0,1,GUESS\n"), PreconditionError);
}

TEST_CASE("sequence and matrix inputs") {
  CHECK(io::values_from_csv("n,value\n0,1\n1,0.5\n") == std::vector<double>{1, 0.5});
  CHECK(io::values_from_csv("1\n2\n3\n") == std::vector<double>{1, 2, 3});

  const Matrix m = io::matrix_from_csv("1,2\n3,4\n5,6\n");
  CHECK(m.rows == 3);
  CHECK(m.cols == 2);
  CHECK(m(2, 0) == 5.0);
  CHECK_THROWS_AS(io::matrix_from_csv("1,2\n3\n"), PreconditionError);
  CHECK_THROWS_AS(io::matrix_from_csv("a,b\n1,2\n"), PreconditionError);
  CHECK_THROWS_AS(io::matrix_from_csv("1,inf\n"), PreconditionError);
  CHECK_THROWS_AS(io::matrix_from_csv(""), PreconditionError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.csv"), PreconditionError);
}
