#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "fixtures.hpp"
#include "tenrange/errors.hpp"
#include "tenrange/generate.hpp"
#include "tenrange/io.hpp"
#include "tenrange/numrange.hpp"
#include "tenrange/spectral.hpp"

using namespace tenrange;

TEST_SUITE("io") {
    TEST_CASE("parse accepts the documented identity example") {
        Tensor t = io::parse_tensor(
            R"({"shape":[2,2],"row_modes":1,"data":[[1,0],[0,0],[0,0],[1,0]]})");
        CHECK(t.shape() == Shape{2, 2});
        CHECK(t.row_modes() == 1);
        CHECK(t.at({1, 1}) == scalar(1.0));
        CHECK(t.at({2, 2}) == scalar(1.0));
        CHECK(t.at({1, 2}) == scalar(0.0));
    }

    TEST_CASE("parse diagnostics") {
        CHECK_THROWS_AS(io::parse_tensor("{"), parse_error);
        CHECK_THROWS_AS(io::parse_tensor("[1,2]"), parse_error);
        CHECK_THROWS_AS(io::parse_tensor(R"({"shape":[2,2],"row_modes":1})"), parse_error);
        CHECK_THROWS_AS(
            io::parse_tensor(R"({"shape":[2,2],"row_modes":1,"data":[[1,0],[0,0],[0,0]]})"),
            parse_error);
        CHECK_THROWS_AS(
            io::parse_tensor(R"({"shape":[2,0],"row_modes":1,"data":[]})"), parse_error);
        CHECK_THROWS_AS(
            io::parse_tensor(R"({"shape":[2],"row_modes":4,"data":[[1,0],[0,0]]})"), parse_error);
        CHECK_THROWS_AS(
            io::parse_tensor(R"({"shape":[1],"row_modes":1,"data":[[1]]})"), parse_error);
        CHECK_THROWS_AS(
            io::parse_tensor(R"({"shape":[1],"row_modes":1,"data":[["x",0]]})"), parse_error);
    }

    TEST_CASE("serialize then parse is lossless, and round trips byte-identically") {
        generate::Rng rng(501);
        Tensor a = generate::random_tensor({2, 3, 2}, 1, rng);
        const std::string doc = io::serialize_tensor(a);
        Tensor back = io::parse_tensor(doc);
        CHECK(back.shape() == a.shape());
        CHECK(back.row_modes() == a.row_modes());
        CHECK(back.entries() == a.entries());
        CHECK(io::serialize_tensor(back) == doc);

        Tensor d = fixtures::diag6_complex();
        const std::string doc2 = io::serialize_tensor(d);
        CHECK(io::serialize_tensor(io::parse_tensor(doc2)) == doc2);
    }

    TEST_CASE("the documented spectrum survives a document round trip") {
        Tensor parsed = io::parse_tensor(io::serialize_tensor(fixtures::diag6_real()));
        spectral::Spectrum s = spectral::eigenvalues(parsed);
        std::vector<double> expect{-1, 1, 2, 3, 8, 9};
        REQUIRE(s.values.size() == 6);
        for (const scalar& v : s.values) {
            bool found = false;
            for (double e : expect)
                if (std::abs(v - scalar(e)) <= 1e-10) found = true;
            CHECK(found);
        }
    }

    TEST_CASE("boundary CSV has the documented schema and is deterministic") {
        numrange::Boundary b = numrange::boundary(fixtures::range_example_c(), 8);
        const std::string csv = io::boundary_csv(b);
        CHECK(csv.rfind("theta,support,re,im\n", 0) == 0);
        std::size_t lines = 0;
        for (char c : csv)
            if (c == '\n') ++lines;
        CHECK(lines == 9);  // header + 8 samples
        CHECK(io::boundary_csv(numrange::boundary(fixtures::range_example_c(), 8)) == csv);
    }

    TEST_CASE("SVG output is a self-contained document") {
        numrange::Boundary b = numrange::boundary(fixtures::range_example_c(), 16);
        std::vector<scalar> eigs = spectral::eigenvalues(fixtures::range_example_c()).values;
        const std::string svg = io::boundary_svg(b, eigs);
        CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
        CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
        CHECK(svg.find("<polygon") != std::string::npos);
        CHECK(svg.find("<path") != std::string::npos);  // eigenvalue markers
        CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

        SUBCASE("degenerate single-point ranges still render") {
            numrange::Boundary ib = numrange::boundary(identity({2, 2}), 8);
            const std::string isvg = io::boundary_svg(ib, {});
            CHECK(isvg.find("<polygon") != std::string::npos);
        }
    }

    TEST_CASE("file round trip") {
        generate::Rng rng(503);
        Tensor a = generate::random_tensor({2, 2}, 1, rng);
        const std::string path = "test_io_roundtrip.json";
        io::write_tensor_file(path, a);
        Tensor back = io::read_tensor_file(path);
        CHECK(back.entries() == a.entries());
        std::remove(path.c_str());
        CHECK_THROWS_AS(io::read_tensor_file("does_not_exist_980.json"), parse_error);
    }
}
