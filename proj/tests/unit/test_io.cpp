#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "mlcseg/error.hpp"
#include "mlcseg/io.hpp"
#include "mlcseg/pareto.hpp"

using namespace mlcseg;

namespace {

ParseError parse_failure(const std::string& text) {
    std::istringstream in(text);
    try {
        (void)parse_matrix(in);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("input parsed without error: " << text);
    return ParseError(ParseError::Kind::MalformedHeader, 0, 0, "");
}

}  // namespace

TEST_CASE("matrix parsing") {
    std::istringstream in("2 3\n3 2 3\n2 5 1\n");
    CHECK(parse_matrix(in) == fixtures::conflict_matrix());

    std::istringstream loose("\n  2 3 \n3  2 3\n\n2 5 1");
    CHECK(parse_matrix(loose) == fixtures::conflict_matrix());
}

TEST_CASE("matrix parse errors carry kind and position") {
    using K = ParseError::Kind;
    auto e = parse_failure("2 3\n3 -1 3\n2 5 1\n");
    CHECK(e.kind() == K::NegativeEntry);
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);

    e = parse_failure("2 3\n3 2\n");
    CHECK(e.kind() == K::RaggedRow);
    CHECK(e.line() == 2);

    e = parse_failure("2 3\n3 2 x\n");
    CHECK(e.kind() == K::NonInteger);
    CHECK(e.column() == 5);

    CHECK(parse_failure("2 3 4\n").kind() == K::MalformedHeader);
    CHECK(parse_failure("two 3\n").kind() == K::MalformedHeader);
    CHECK(parse_failure("").kind() == K::MalformedHeader);
    CHECK(parse_failure("2 3\n1 2 3\n").kind() == K::MissingRow);
    CHECK(parse_failure("1 1\n1\n2\n").kind() == K::TrailingData);
    CHECK(parse_failure("1 1\n1.5\n").kind() == K::NonInteger);
    CHECK(to_string(K::RaggedRow) == "RaggedRow");
}

TEST_CASE("matrix file round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "mlcseg_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "a.txt";
    write_matrix(fixtures::example_3x3(), path);
    CHECK(read_matrix(path) == fixtures::example_3x3());
    CHECK_THROWS_AS(read_matrix(dir / "missing.txt"), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("results format") {
    ParetoArchive archive;
    archive.add(fixtures::conflict_d3());
    archive.add(fixtures::conflict_d1());
    archive.add(fixtures::conflict_d2());
    const auto doc = make_results(fixtures::conflict_matrix(), archive, {3, 2, 100, std::nullopt});
    REQUIRE(doc.solutions.size() == 3);
    CHECK(doc.solutions[0].objectives == ObjectiveVector{5, 4, 4});
    CHECK(doc.solutions[2].objectives == ObjectiveVector{8, 4, 3});

    std::ostringstream out;
    write_results(out, doc);
    const std::string text = out.str();
    CHECK(text.rfind("{\"record\":\"instance\",\"rows\":2,\"cols\":3}\n", 0) == 0);
    CHECK(text.find("{\"record\":\"solution\",\"dt\":5,\"dc\":4,\"su\":4,\"k\":4,\"terms\":[{\"u\":1,\"l\":[0,1],\"r\":[4,4]}") !=
          std::string::npos);
    CHECK(text.find("{\"record\":\"stats\",\"pe\":3,\"phases\":2,\"neighbors\":100,\"wall_seconds\":null}") !=
          std::string::npos);

    std::istringstream in(text);
    CHECK(parse_results(in) == doc);
}

TEST_CASE("results parse errors") {
    std::istringstream bad("{\"record\":\"instance\",\"rows\":1,\"cols\":1}\n{\"record\":\"nope\"}\n");
    CHECK_THROWS_AS(parse_results(bad), ParseError);
    std::istringstream no_instance("{\"record\":\"stats\",\"pe\":null,\"phases\":null,\"neighbors\":null,\"wall_seconds\":null}\n");
    CHECK_THROWS_AS(parse_results(no_instance), ParseError);
    std::istringstream wrong_k(
        "{\"record\":\"instance\",\"rows\":1,\"cols\":1}\n"
        "{\"record\":\"solution\",\"dt\":1,\"dc\":1,\"su\":0,\"k\":2,\"terms\":[{\"u\":1,\"l\":[0],\"r\":[2]}]}\n");
    CHECK_THROWS_AS(parse_results(wrong_k), ParseError);
}
