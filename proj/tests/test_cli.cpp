#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "factorwidth/cli.hpp"

using namespace fw;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("fwrank-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
};

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cmd(const cli::Command& cmd) {
    std::ostringstream out, err;
    RunResult res;
    res.code = cli::run(cmd, out, err);
    res.out = out.str();
    res.err = err.str();
    return res;
}

json last_json_object(const std::string& text) {
    // Reports end with a pretty-printed object (opening brace on its own
    // line); single-line JSONL records may precede it.
    const auto pos = text.rfind("\n{\n");
    if (pos != std::string::npos) return json::parse(text.substr(pos + 1));
    return json::parse(text);
}

/// Subset JSON-schema validator: type / required / properties / items /
/// enum / $ref into #/definitions. Enough to check the shipped schema.
class MiniValidator {
  public:
    explicit MiniValidator(json schema) : root_(std::move(schema)) {}

    bool validate(const json& value, const json& schema, std::string& why) const {
        if (schema.contains("$ref")) {
            const std::string ref = schema["$ref"].get<std::string>();
            const std::string prefix = "#/definitions/";
            REQUIRE(ref.rfind(prefix, 0) == 0);
            return validate(value, root_["definitions"][ref.substr(prefix.size())], why);
        }
        if (schema.contains("type") && !type_matches(value, schema["type"])) {
            why = "type mismatch at " + schema.dump() + " for " + value.dump();
            return false;
        }
        if (schema.contains("enum")) {
            bool found = false;
            for (const auto& option : schema["enum"])
                if (option == value) found = true;
            if (!found) {
                why = "enum mismatch for " + value.dump();
                return false;
            }
        }
        if (value.is_object()) {
            if (schema.contains("required"))
                for (const auto& key : schema["required"])
                    if (!value.contains(key.get<std::string>())) {
                        why = "missing required key " + key.get<std::string>();
                        return false;
                    }
            if (schema.contains("properties"))
                for (const auto& [key, sub] : schema["properties"].items())
                    if (value.contains(key) && !validate(value[key], sub, why)) {
                        why = key + ": " + why;
                        return false;
                    }
        }
        if (value.is_array() && schema.contains("items"))
            for (const auto& item : value)
                if (!validate(item, schema["items"], why)) return false;
        return true;
    }

    bool validate_verb(const json& value, const std::string& verb, std::string& why) const {
        return validate(value, root_["definitions"][verb], why);
    }

  private:
    json root_;

    static bool type_matches(const json& value, const json& type) {
        if (type.is_array()) {
            for (const auto& t : type)
                if (type_matches(value, t)) return true;
            return false;
        }
        const std::string t = type.get<std::string>();
        if (t == "object") return value.is_object();
        if (t == "array") return value.is_array();
        if (t == "string") return value.is_string();
        if (t == "integer") return value.is_number_integer();
        if (t == "number") return value.is_number();
        if (t == "boolean") return value.is_boolean();
        if (t == "null") return value.is_null();
        return false;
    }
};

MiniValidator load_schema() {
    const fs::path here = fs::path(__FILE__).parent_path();
    std::ifstream in(here / ".." / "schemas" / "fwrank-report.schema.json");
    REQUIRE(in.good());
    return MiniValidator(json::parse(in));
}

const char* kTridiag = "3\n2 1 0\n1 2 1\n0 1 2\n";
const char* kOnes3 = "3\n1 1 1\n1 1 1\n1 1 1\n";
const char* kDd4 = "4\n3.5 1 1 1\n1 3.5 1 1\n1 1 3.5 1\n1 1 1 3.5\n";

}  // namespace

TEST_CASE("check verb: width and membership with schema-valid JSON") {
    TempDir dir;
    const auto validator = load_schema();
    cli::Command cmd;
    cmd.verb = "check";
    cmd.inputs = {dir.file("tri.txt", kTridiag)};
    cmd.k = 2;
    cmd.format = "json";
    const auto res = run_cmd(cmd);
    REQUIRE(res.code == 0);
    const json report = json::parse(res.out);
    CHECK(report["width"]["value"] == 2);
    CHECK(report["membership"]["status"] == "member");
    std::string why;
    CHECK_MESSAGE(validator.validate_verb(report, "check", why), why);
}

TEST_CASE("decompose verb selects the banded route for tridiagonal input") {
    TempDir dir;
    const auto validator = load_schema();
    cli::Command cmd;
    cmd.verb = "decompose";
    cmd.inputs = {dir.file("tri.txt", kTridiag)};
    cmd.format = "json";
    const auto res = run_cmd(cmd);
    REQUIRE(res.code == 0);
    const json report = json::parse(res.out);
    CHECK(report["method"] == "banded");
    CHECK(report["decomposition"]["terms"].size() == 3);
    std::string why;
    CHECK_MESSAGE(validator.validate_verb(report, "decompose", why), why);
}

TEST_CASE("bounds verb reports the exact value on the all-nonzero 4x4") {
    TempDir dir;
    const auto validator = load_schema();
    cli::Command cmd;
    cmd.verb = "bounds";
    cmd.inputs = {dir.file("dd4.txt", kDd4)};
    cmd.k = 2;
    cmd.format = "json";
    const auto res = run_cmd(cmd);
    REQUIRE(res.code == 0);
    const json report = json::parse(res.out);
    CHECK(report["report"]["exact"] == 6);
    CHECK(report["small_exact"]["exact"] == true);
    CHECK(report["small_exact"]["lo"] == 6);
    std::string why;
    CHECK_MESSAGE(validator.validate_verb(report, "bounds", why), why);
}

TEST_CASE("cover and cliquecover verbs") {
    TempDir dir;
    const auto validator = load_schema();
    cli::Command cover;
    cover.verb = "cover";
    cover.n = 7;
    cover.k = 3;
    cover.format = "json";
    const auto res = run_cmd(cover);
    REQUIRE(res.code == 0);
    const json report = json::parse(res.out);
    CHECK(report["value"] == 7);
    CHECK(report["certified"] == true);
    std::string why;
    CHECK_MESSAGE(validator.validate_verb(report, "cover", why), why);

    cli::Command cc;
    cc.verb = "cliquecover";
    cc.inputs = {dir.file("q3.txt",
                          "8 12\n1 2\n1 3\n1 5\n2 4\n2 6\n3 4\n3 7\n4 8\n5 6\n5 7\n6 8\n7 8\n")};
    cc.k = 3;
    cc.format = "json";
    const auto res2 = run_cmd(cc);
    REQUIRE(res2.code == 0);
    const json report2 = json::parse(res2.out);
    CHECK(report2["value"] == 6);
    CHECK(report2["certified"] == true);
    CHECK_MESSAGE(validator.validate_verb(report2, "cliquecover", why), why);
}

TEST_CASE("hadamard verb on a product") {
    TempDir dir;
    const auto validator = load_schema();
    cli::Command cmd;
    cmd.verb = "hadamard";
    cmd.inputs = {dir.file("a.txt", kTridiag), dir.file("b.txt", kTridiag)};
    cmd.format = "json";
    const auto res = run_cmd(cmd);
    REQUIRE(res.code == 0);
    const json report = json::parse(res.out);
    CHECK(report["operation"] == "product");
    CHECK(report["result"]["psd"] == true);
    CHECK(report["result"]["width_claim"] == 2);
    std::string why;
    CHECK_MESSAGE(validator.validate_verb(report, "hadamard", why), why);
}

TEST_CASE("hadamard verb without --s searches for the minimal width-2 power") {
    TempDir dir;
    const auto validator = load_schema();
    cli::Command cmd;
    cmd.verb = "hadamard";
    cmd.inputs = {dir.file("coupled.txt",
                           "3\n1 0.9 0.9\n0.9 1 0.9\n0.9 0.9 1\n")};
    cmd.format = "json";
    const auto res = run_cmd(cmd);
    REQUIRE(res.code == 0);
    const json report = json::parse(res.out);
    CHECK(report["operation"] == "minimal_power");
    CHECK(report["minimal_power"]["first_success"].get<long>() >= 2);
    CHECK(report["minimal_power"]["verified_through"].get<long>() >=
          report["minimal_power"]["first_success"].get<long>());
    std::string why;
    CHECK_MESSAGE(validator.validate_verb(report, "hadamard", why), why);

    // The all-ones matrix violates the positive-definite 2x2 hypothesis.
    cmd.inputs = {dir.file("ones.txt", kOnes3)};
    CHECK(run_cmd(cmd).code == 3);
}

TEST_CASE("conjecture verb emits schema-valid JSONL trials") {
    const auto validator = load_schema();
    cli::Command cmd;
    cmd.verb = "conjecture";
    cmd.n = 4;
    cmd.k = 3;
    cmd.s = 2.5;
    cmd.trials = 5;
    cmd.format = "json";
    const auto res = run_cmd(cmd);
    REQUIRE(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int trial_lines = 0;
    std::string why;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] != '{' || line.back() != '}') break;
        const json rec = json::parse(line);
        if (!rec.contains("trial")) break;
        CHECK_MESSAGE(validator.validate_verb(rec, "trial_record", why), why);
        ++trial_lines;
    }
    CHECK(trial_lines == 5);
    const json summary = last_json_object(res.out);
    CHECK(summary["tested"] == 5);
    CHECK_MESSAGE(validator.validate_verb(summary, "conjecture", why), why);
}

TEST_CASE("output is byte-identical across runs") {
    TempDir dir;
    cli::Command cmd;
    cmd.verb = "bounds";
    cmd.inputs = {dir.file("dd4.txt", kDd4)};
    cmd.k = 2;
    cmd.format = "json";
    const auto first = run_cmd(cmd);
    const auto second = run_cmd(cmd);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);

    cli::Command conj;
    conj.verb = "conjecture";
    conj.n = 4;
    conj.k = 3;
    conj.s = 2.5;
    conj.trials = 6;
    conj.seed = 42;
    conj.format = "json";
    CHECK(run_cmd(conj).out == run_cmd(conj).out);
}

TEST_CASE("exit codes: parse 2, precondition 3, undetermined 4") {
    TempDir dir;
    cli::Command bad;
    bad.verb = "check";
    bad.inputs = {dir.file("bad.txt", "2\n1 0.5\n0.7 1\n")};
    bad.format = "json";
    const auto parse_res = run_cmd(bad);
    CHECK(parse_res.code == 2);
    CHECK(json::parse(parse_res.err)["error"] == "ParseError");

    cli::Command notpsd;
    notpsd.verb = "bounds";
    notpsd.inputs = {dir.file("indef.txt", "2\n1 2\n2 1\n")};
    notpsd.k = 2;
    notpsd.format = "json";
    const auto psd_res = run_cmd(notpsd);
    CHECK(psd_res.code == 3);
    CHECK(json::parse(psd_res.err)["error"] == "NotPsd");

    cli::Command starved;
    starved.verb = "check";
    starved.inputs = {dir.file("j3.txt", kOnes3)};
    starved.k = 2;
    starved.tol.max_iter = 1;  // too few sweeps to reach any verdict
    starved.format = "json";
    const auto undet = run_cmd(starved);
    CHECK(undet.code == 4);
    CHECK(json::parse(undet.out)["membership"]["status"] == "undetermined");
}

TEST_CASE("multiple inputs preserve order and parallel runs match sequential") {
    TempDir dir;
    cli::Command cmd;
    cmd.verb = "check";
    cmd.inputs = {dir.file("a.txt", kTridiag), dir.file("b.txt", kDd4),
                  dir.file("c.txt", kOnes3)};
    cmd.format = "json";
    const auto seq = run_cmd(cmd);
    cmd.jobs = 3;
    const auto par = run_cmd(cmd);
    CHECK(seq.out == par.out);
    CHECK(seq.code == par.code);
}

TEST_CASE("text mode renders without JSON noise") {
    TempDir dir;
    cli::Command cmd;
    cmd.verb = "check";
    cmd.inputs = {dir.file("tri.txt", kTridiag)};
    const auto res = run_cmd(cmd);
    REQUIRE(res.code == 0);
    CHECK(res.out.find("width") != std::string::npos);
    CHECK(res.out.find('{') == std::string::npos);
}
