#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "ringext/cli.hpp"
#include "ringext/io.hpp"

using ringext::cli::run_cli;

namespace {

const std::string data = RINGEXT_DATA_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string path(const std::string& f) { return data + "/" + f; }

std::string shell(const std::string& cmd, int& code) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    code = WEXITSTATUS(pclose(p));
    return out;
}

}  // namespace

TEST_CASE("every operation is reached by exactly one verb") {
    const std::vector<std::string> operations = {
        "validate_ring", "additive_endos", "left_mults", "right_mults", "bicenter", "coset_space",
        "validate_bimodule", "smith_form", "kernel_basis", "solve", "subgroup_equal", "check_factor_set",
        "coboundary1", "shift", "are_equivalent", "h2_classes", "build_singular_extension", "extract_factor_set",
        "induced_pre_extension", "validate_pre_extension", "ka_bimodule", "choose_fg", "compute_obstruction",
        "compute_gamma", "is_three_cocycle", "delta2", "are_cohomologous", "build_extension", "vanish_and_build",
        "classify_extensions", "build_resolution", "check_exactness", "product_u0", "chain_times_u0",
        "product_u1_u1", "product_general", "cocycle3_check", "h3_small", "compose", "oplus", "otimes",
        "check_ann_structure", "is_regular", "structure_from_obstruction", "structure_to_shukla_cocycle",
        "check_ann_functor", "cohomologous_structures"};
    std::map<std::string, int> seen;
    for (const auto& v : ringext::cli::verb_table())
        for (const auto& op : v.operations) ++seen[op];
    for (const auto& op : operations) {
        CAPTURE(op);
        CHECK(seen[op] == 1);
    }
    CHECK(seen.size() == operations.size());
    CHECK(ringext::cli::verb_table().size() == 17);
}

TEST_CASE("exit codes") {
    auto r = run({"ring-check", path("z4.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("ok: true") != std::string::npos);

    r = run({"cocycle-check", path("family_eta11_z2.json")});
    CHECK(r.code == 1);
    CHECK(r.out.find("relation 5: η(x,x)=0") != std::string::npos);

    r = run({"h2", path("bimodule_z2_z2.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("classes: 2") != std::string::npos);

    r = run({"vanish-build", path("pre_obstructed_f2eps.json")});
    CHECK(r.code == 1);
    CHECK(r.out.find("obstruction_vanishes: false") != std::string::npos);

    CHECK(run({"classify", path("pre_obstructed_f2eps.json")}).code == 2);
    CHECK(run({"classify", path("ext_z4_over_z2.json")}).code == 0);
    CHECK(run({"ring-check", path("missing.json")}).code == 2);
    CHECK(run({"no-such-verb"}).code == 2);
    CHECK(run({}).code == 2);

    const auto bad = std::filesystem::temp_directory_path() / "ringext_bad_ring.json";
    std::ofstream(bad) << R"({"name":"x","order":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0]],"one":1})";
    r = run({"ring-check", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed input") != std::string::npos);

    const auto wrong = std::filesystem::temp_directory_path() / "ringext_not_a_ring.json";
    std::ofstream(wrong) << R"({"name":"x","order":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,0]],"one":1})";
    CHECK(run({"ring-check", wrong.string()}).code == 1);
}

TEST_CASE("every verb runs on the bundled data") {
    const std::vector<std::vector<std::string>> commands = {
        {"ring-check", path("z4.json")},
        {"bimodule-check", path("bimodule_z2_z2.json")},
        {"factorset-check", path("cochain_z4.json"), "--shift", "0,0"},
        {"ext-build", path("cochain_z4.json")},
        {"ext-extract", path("ext_z4_over_z2.json")},
        {"h2", path("bimodule_z2_z2.json")},
        {"pre-check", path("ext_z4_over_z2.json")},
        {"obstruction", path("ext_z4_over_z2.json")},
        {"cocycle-check", path("family_zero_z2.json"), "--sweep", "5"},
        {"cohomologous", path("family_zero_z2.json"), path("family_zero_z2.json")},
        {"vanish-build", path("ext_z4_over_z2.json")},
        {"classify", path("ext_z4_over_z2.json")},
        {"resolution-verify", path("z3.json")},
        {"product-report", path("z3.json")},
        {"h3", path("bimodule_f2eps_f2.json")},
        {"ann-check", path("family_zero_z2.json")},
        {"ann-functor", path("family_zero_z2.json"), path("family_zero_z2.json"), "--functor",
         path("functor_zero_z2.json"), "--morphisms", "1,1,1,1"},
    };
    std::set<std::string> verbs;
    for (auto args : commands) {
        CAPTURE(args[0]);
        verbs.insert(args[0]);
        args.insert(args.begin(), "--json");
        const auto first = run(args);
        CHECK(first.code == 0);
        const auto doc = ringext::io::Json::parse(first.out);
        CHECK(doc.at("schema") == "v1");
        CHECK(doc.at("verb") == args[1]);
        CHECK(run(args).out == first.out);
    }
    CHECK(verbs.size() == ringext::cli::verb_table().size());
}

TEST_CASE("the binary is deterministic") {
    const std::string bin = RINGEXT_CLI;
    for (const std::string cmd : {" --json h3 " + path("bimodule_f2eps_f2.json"),
                                  " --json --seed 7 cocycle-check " + path("family_zero_z2.json") + " --sweep 20",
                                  " --json product-report " + path("z3.json") + " --per-tuple"}) {
        int c1 = -1, c2 = -1;
        const auto a = shell(bin + cmd, c1);
        const auto b = shell(bin + cmd, c2);
        CHECK(c1 == 0);
        CHECK(c2 == 0);
        CHECK(!a.empty());
        CHECK(a == b);
    }
}
