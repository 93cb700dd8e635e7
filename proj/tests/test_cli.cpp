#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../tools/commands.hpp"
#include "confcoh/io.hpp"
#include "confcoh/qformula.hpp"

using confcoh::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("q-series", "[cli]") {
    auto r = call({"q-series", "--genus", "1", "--max-n", "1", "--dims"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + (1 + 2t + t²)u\n");

    r = call({"q-series", "--genus", "1", "--max-n", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = call({"q-series", "--genus", "1", "--max-n", "1"});
    CHECK(r.out == "1 + u + [V(0,1)]·t·u + t²·u\n");

    r = call({"q-series", "--genus", "0", "--max-n", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("betti --genus 0") != std::string::npos);

    r = call({"q-series", "--genus", "2", "--max-n", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(confcoh::io::series_from_json(nlohmann::json::parse(r.out), 2) == confcoh::qformula::build_Q(2, 2));

    r = call({"q-series", "-g", "1", "--max-n", "1", "--format", "csv"});
    CHECK(r.out == "t,s,u,dim\n0,0,0,1\n0,0,1,1\n1,0,1,2\n2,0,1,1\n");
}

TEST_CASE("table, betti, dim, euler", "[cli]") {
    auto r = call({"betti", "--genus", "0", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 0 0 1\n");

    r = call({"dim", "--genus", "2", "--i", "1", "--j", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "16\n");

    r = call({"euler", "--genus", "2", "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 -2 3 -4\n");

    r = call({"betti", "--genus", "1", "--max-n", "2"});
    CHECK(r.out == "0: 1\n1: 1 2 1\n2: 1 2 1\n");

    r = call({"table", "--genus", "1", "--n", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(confcoh::io::table_from_json(nlohmann::json::parse(r.out)) == confcoh::qformula::mixed_table(1, 3));

    r = call({"table", "--genus", "1", "--n", "2", "--format", "csv"});
    CHECK(r.out == "n,k,h,dim\n2,0,0,1\n2,1,1,2\n2,2,2,1\n");

    r = call({"table", "--genus", "2", "--max-n", "2", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out).size() == 3);

    r = call({"betti", "--genus", "2", "--n", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"genus":2,"n":3,"betti":[1,4,6,11,4]})"));
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(call({}).code == 2);
    CHECK(call({"betti", "--n", "3"}).code == 2);
    CHECK(call({"betti", "--genus", "1"}).code == 2);
    CHECK(call({"betti", "--genus", "1", "--n", "2", "--max-n", "3"}).code == 2);
    CHECK(call({"betti", "--genus", "-1", "--n", "2"}).code == 2);
    CHECK(call({"dim", "--genus", "2", "--i", "1", "--j", "3"}).code == 2);
    CHECK(call({"table", "--genus", "0", "--n", "3"}).code == 2);
    CHECK(call({"table", "--genus", "1", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(call({"oracle", "--genus", "3", "--n", "9"}).code == 2);
    CHECK(call({"oracle", "--genus", "0", "--n", "1"}).code == 2);
    CHECK(call({"oracle", "--genus", "1", "--n", "2", "--model", "B", "--reps"}).code == 2);
    CHECK(call({"verify", "--genus", "1", "--max-n", "11"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);

    const auto help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("oracle and verify", "[cli]") {
    auto r = call({"oracle", "--genus", "1", "--n", "3", "--threads", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "# genus 1, n 3\n# k h dim\n0 0 1\n1 1 2\n2 2 1\n2 3 2\n3 4 4\n4 5 2\n");
    CHECK(r.err.find("done") != std::string::npos);

    r = call({"oracle", "--genus", "1", "--n", "3", "--model", "B", "--format", "csv"});
    CHECK(r.out.rfind("n,k,h,dim\n3,0,0,1\n", 0) == 0);

    r = call({"oracle", "--genus", "2", "--n", "2", "--reps", "--format", "json"});
    CHECK(confcoh::io::table_from_json(nlohmann::json::parse(r.out)) == confcoh::qformula::mixed_table(2, 2));

    r = call({"verify", "--genus", "1", "--max-n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(r.out.find("n=6 ok") != std::string::npos);

    r = call({"verify", "--genus", "2", "--max-n", "4", "--reps"});
    CHECK(r.code == 0);

    r = call({"verify", "--genus", "0", "--max-n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=1 skipped") != std::string::npos);
    CHECK(r.out.find("n=8 ok") != std::string::npos);
}

TEST_CASE("output file and determinism", "[cli]") {
    const auto path = std::filesystem::temp_directory_path() / "confcoh_cli_test.json";
    std::filesystem::remove(path);
    const std::vector<std::string> args{"table", "--genus", "2", "--max-n", "4", "--format", "json"};
    auto with_file = args;
    with_file.insert(with_file.end(), {"--out", path.string()});
    const auto r = call(with_file);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == call(args).out);
    CHECK(call(args).out == call(args).out);
    std::filesystem::remove(path);
}

#ifdef CONFCOH_CLI_PATH
TEST_CASE("installed binary", "[cli]") {
    const std::string cmd = std::string(CONFCOH_CLI_PATH) + " dim --genus 2 --i 1 --j 2";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[64] = {};
    const std::size_t read = std::fread(buffer, 1, sizeof buffer - 1, pipe);
    const int status = pclose(pipe);
    CHECK(std::string(buffer, read) == "16\n");
    CHECK(status == 0);

    FILE* bad = popen((std::string(CONFCOH_CLI_PATH) + " q-series --genus 0 --max-n 2 2>/dev/null").c_str(), "r");
    REQUIRE(bad != nullptr);
    const int bad_status = pclose(bad);
    CHECK(WEXITSTATUS(bad_status) == 2);
}
#endif
