#include "support/reference.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(DWORKCOUNT_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::size_t count_lines(const std::string& s, const std::string& prefix)
{
    std::istringstream in(s);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);)
        if (line.rfind(prefix, 0) == 0)
            ++n;
    return n;
}

} // namespace

TEST_CASE("count: all methods agree on the quintic")
{
    const auto r = run("count --d 5 --p 11 --lambda 2 --method all");
    CHECK(r.status == 0);
    CHECK(r.out.find("2550") != std::string::npos);
    CHECK(r.out.find("all methods agree") != std::string::npos);
}

TEST_CASE("count: json output")
{
    const auto r = run("count --d 5 --p 11 --lambda 1 --method all --format json");
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["params"]["q"] == 11);
    CHECK(doc["agree"] == true);
    for (const auto& t : doc["totals"])
        CHECK(t["count"] == 3300);
    CHECK(doc["terms"].size() == 7);
}

TEST_CASE("count: precondition failures exit 2")
{
    CHECK(run("count --d 5 --p 7 --lambda 2").status == 2);
    CHECK(run("count --d 5 --p 11 --lambda 0 --method koblitz").status == 2);
    CHECK(run("count --d 5 --p 11 --lambda 11").status == 2);
    CHECK(run("count --d 4 --p 13 --lambda 2 --method decompose").status == 2);
    CHECK(run("count --d 4 --p 13 --lambda 2 --method decompose --conjecture").status == 0);
    CHECK(run("count --d 5 --p 11 --lambda 2 --method nope").status == 2);
    CHECK(run("count --p 11 --lambda 2").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("verify suites")
{
    const auto k = run("verify --suite koike --pmax 47");
    CHECK(k.status == 0);
    CHECK(k.out.find("koike: PASS") != std::string::npos);
    const auto t = run("verify --suite thm32 --d 5 --p 11 --n 100 --seed 7");
    CHECK(t.status == 0);
    CHECK(t.out.find("checks=100") != std::string::npos);
    CHECK(run("verify --suite nope").status == 2);
    CHECK(run("verify --suite thm32 --d 5").status == 2);
    const auto v = run("verify --suite igusa --pmax 13 --verbose");
    CHECK(v.status == 0);
    CHECK(count_lines(v.out, "  pass ") == 1 + 3 + 5 + 9 + 11);
}

TEST_CASE("cosets")
{
    const auto five = run("cosets --d 5");
    CHECK(five.status == 0);
    CHECK(five.out.find("cosets=125 classes=6") != std::string::npos);
    CHECK(count_lines(five.out, "(") == 6);
    const auto four = run("cosets --d 4");
    CHECK(four.out.find("cosets=16 classes=3") != std::string::npos);
    const auto six = run("cosets --d 6 --classify");
    CHECK(six.status == 0);
    CHECK(six.out.find("1F0 multiplicity: 360") != std::string::npos);
    CHECK(run("cosets --d 2 --classify").status == 2);
    CHECK(run("cosets --d 11").status == 2);
    const auto list = run("cosets --d 4 --list --format json");
    REQUIRE(list.status == 0);
    CHECK(nlohmann::json::parse(list.out)["list"].size() == 16);
}

TEST_CASE("table matches the reference count")
{
    const auto csv = run("table --d 5 --p 11 --verify");
    REQUIRE(csv.status == 0);
    std::istringstream in(csv.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("lambda,count,delta_active,nq0,", 0) == 0);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const long lam = std::stol(line.substr(0, c1));
        const long count = std::stol(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK(count == ref::projective_count(5, 11, lam));
    }
    CHECK(rows == 10);

    const auto js = run("table --d 5 --p 11 --format json");
    REQUIRE(js.status == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["rows"].size() == 10);
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
    CHECK(doc["term_columns"].size() == 6);
}

TEST_CASE("table argument and io errors")
{
    CHECK(run("table --d 5 --p 11 --lambda-min 0").status == 2);
    CHECK(run("table --d 5 --p 11 --lambda-min 5 --lambda-max 4").status == 2);
    CHECK(run("table --d 5 --p 11 --out /nonexistent-dir/t.csv").status == 3);
    const auto path = std::filesystem::temp_directory_path() / "dworkcount-table-test.csv";
    CHECK(run("table --d 3 --p 7 --out " + path.string()).status == 0);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header.rfind("lambda,count", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("output is deterministic across thread counts")
{
    const auto a = run("--threads 1 table --d 5 --p 11 --format json");
    const auto b = run("--threads 4 table --d 5 --p 11 --format json");
    CHECK(a.out == b.out);
    CHECK(run("count --d 5 --p 11 --lambda 3 --format json").out
          == run("count --d 5 --p 11 --lambda 3 --format json").out);
}

TEST_CASE("corrupt cache exits 3")
{
    const auto dir = std::filesystem::temp_directory_path() / "dworkcount-cache-test";
    std::filesystem::remove_all(dir);
    CHECK(run("--cache-dir " + dir.string() + " count --d 3 --p 7 --lambda 3").status == 0);
    REQUIRE(std::filesystem::exists(dir / "gauss-p7-e1-g3-z1.json"));
    CHECK(run("--cache-dir " + dir.string() + " count --d 3 --p 7 --lambda 3").status == 0);
    std::ofstream(dir / "gauss-p7-e1-g3-z1.json") << "{}";
    CHECK(run("--cache-dir " + dir.string() + " count --d 3 --p 7 --lambda 3").status == 3);
    std::filesystem::remove_all(dir);
}
