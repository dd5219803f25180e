#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ormod/io.hpp"

using namespace ormod;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "ormod_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

RunResult run_cli(const std::string& args) {
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string cmd = std::string(ORMOD_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                      err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

const std::string kSwap01_3 = "0 1 0\n1 0 0\n0 0 1\n";
const std::string kSwap12_3 = "1 0 0\n0 0 1\n0 1 0\n";

}  // namespace

TEST_CASE("examples subcommand") {
    SUBCASE("sigma_n emits the symmetric family") {
        fs::path fam = scratch_dir() / "sigma3.family";
        RunResult r = run_cli("examples sigma_n --n 3 --out " + fam.string());
        CHECK(r.exit_code == 0);
        CHECK(r.err.find("s = 8") != std::string::npos);
        RealizableFamily parsed = parse_family(slurp(fam));
        CHECK(parsed.forms == symmetric_family(3).forms);
    }

    SUBCASE("g2 notes the homogeneity of the quadratic head") {
        RunResult r = run_cli("examples g2");
        CHECK(r.exit_code == 0);
        CHECK(r.err.find("-2*v1^2") != std::string::npos);
        CHECK(r.out.find("vars: v1 v2 v3 v4 v5 v6 v7") != std::string::npos);
        CHECK(r.out.find("s: 7  d: 2") != std::string::npos);
    }

    SUBCASE("bad inputs exit 2") {
        CHECK(run_cli("examples sigma_n --n 1").exit_code == 2);
        CHECK(run_cli("examples nope").exit_code == 2);
        CHECK(run_cli("examples sigma_n --n 3 --s 3").exit_code == 2);
    }
}

TEST_CASE("family subcommand") {
    SUBCASE("the sign group gives an even family fixed by -I") {
        fs::path group = scratch_dir() / "c2.group";
        spit(group, "-1 0\n0 -1\n");
        fs::path fam = scratch_dir() / "c2.family";
        RunResult r = run_cli("family " + group.string() + " --out " + fam.string());
        CHECK(r.exit_code == 0);
        CHECK(r.err.find("group order: 2") != std::string::npos);
        CHECK(r.err.find("invariants: 3") != std::string::npos);
        CHECK(r.err.find("basis change:") != std::string::npos);

        RealizableFamily parsed = parse_family(slurp(fam));
        QMatrix minus(2);
        minus.at(0, 0) = Rat(-1);
        minus.at(1, 1) = Rat(-1);
        CHECK(is_orthogonal(minus, parsed.forms));
        CHECK(check_realizable(parsed.forms).ok);
    }

    SUBCASE("the full symmetric group on three points") {
        fs::path group = scratch_dir() / "s3.group";
        spit(group, kSwap01_3 + "\n" + kSwap12_3);
        fs::path fam = scratch_dir() / "s3.family";
        RunResult r = run_cli("family " + group.string() + " --out " + fam.string());
        CHECK(r.exit_code == 0);
        CHECK(r.err.find("group order: 6") != std::string::npos);
        RealizableFamily parsed = parse_family(slurp(fam));
        CHECK(check_realizable(parsed.forms).ok);
    }

    SUBCASE("an infinite group exits 3") {
        fs::path group = scratch_dir() / "shear.group";
        spit(group, "1 1\n0 1\n");
        RunResult r = run_cli("family " + group.string() + " --max-order 50");
        CHECK(r.exit_code == 3);
        CHECK(r.err.find("OrderBoundExceeded") != std::string::npos);
    }

    SUBCASE("unreadable and malformed input exits 2") {
        CHECK(run_cli("family /nonexistent/path.group").exit_code == 2);
        fs::path group = scratch_dir() / "bad.group";
        spit(group, "1 2\n3\n");
        CHECK(run_cli("family " + group.string()).exit_code == 2);
    }
}

TEST_CASE("model subcommand") {
    fs::path fam = scratch_dir() / "sigma3.family";
    REQUIRE(run_cli("examples sigma_n --n 3 --out " + fam.string()).exit_code == 0);

    SUBCASE("emits a self-contained model file") {
        fs::path model = scratch_dir() / "sigma3.model";
        RunResult r = run_cli("model " + fam.string() + " --k 8 --out " + model.string());
        CHECK(r.exit_code == 0);
        CHECK(r.err.find("z degree: 679") != std::string::npos);
        ParsedModel parsed = parse_model(slurp(model));
        CHECK(parsed.spec.k == 8);
        CHECK(check_d_squared(*parsed.model).ok);
    }

    SUBCASE("k below the bound exits 4") {
        RunResult r = run_cli("model " + fam.string() + " --k 7");
        CHECK(r.exit_code == 4);
        CHECK(r.err.find("DegreeBoundViolated") != std::string::npos);
    }

    SUBCASE("the seven-variable family builds at k = 8") {
        fs::path g2 = scratch_dir() / "g2.family";
        REQUIRE(run_cli("examples g2 --out " + g2.string()).exit_code == 0);
        RunResult r = run_cli("model " + g2.string() + " --k 8");
        CHECK(r.exit_code == 0);
    }
}

TEST_CASE("verify subcommand") {
    fs::path fam = scratch_dir() / "sigma3.family";
    fs::path model = scratch_dir() / "sigma3.model";
    REQUIRE(run_cli("examples sigma_n --n 3 --out " + fam.string()).exit_code == 0);
    REQUIRE(run_cli("model " + fam.string() + " --k 8 --out " + model.string()).exit_code == 0);

    SUBCASE("an emitted model passes all checks") {
        RunResult r = run_cli("verify " + model.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("check d^2 = 0: pass") != std::string::npos);
        CHECK(r.out.find("check minimal: pass") != std::string::npos);
        CHECK(r.out.find("check degree audit: pass") != std::string::npos);
    }

    SUBCASE("a corrupted differential exits 5") {
        std::string text = slurp(model);
        std::size_t pos = text.find("d(y1) = x1^3*x2");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, std::string("d(y1) = x1^3*x2").size(), "d(y1) = x1^4*x2");
        fs::path broken = scratch_dir() / "broken.model";
        spit(broken, text);
        RunResult r = run_cli("verify " + broken.string());
        CHECK(r.exit_code == 5);
        CHECK(r.out.find("fail") != std::string::npos);
    }
}

TEST_CASE("classify subcommand") {
    fs::path fam = scratch_dir() / "sigma3.family";
    fs::path model = scratch_dir() / "sigma3.model";
    REQUIRE(run_cli("examples sigma_n --n 3 --out " + fam.string()).exit_code == 0);
    REQUIRE(run_cli("model " + fam.string() + " --k 8 --out " + model.string()).exit_code == 0);

    SUBCASE("the lift of a transposition classifies back to it") {
        fs::path mor = scratch_dir() / "swap.morphism";
        spit(mor, "f(v1) = v2\nf(v2) = v1\n");
        RunResult r = run_cli("classify " + model.string() + " " + mor.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("group element:\n0 1 0\n1 0 0\n0 0 1\n") != std::string::npos);
        CHECK(r.out.find("witness: 0") != std::string::npos);
    }

    SUBCASE("a corrupted morphism names the violated step") {
        fs::path mor = scratch_dir() / "bad.morphism";
        spit(mor, "f(v1) = v1 + x1^5\n");
        RunResult r = run_cli("classify " + model.string() + " " + mor.string());
        CHECK(r.exit_code == 5);
        CHECK(r.out.find("rejected at step: x1-correction") != std::string::npos);
    }
}

TEST_CASE("full pipeline from a group file to a classified automorphism") {
    fs::path group = scratch_dir() / "pipe.group";
    spit(group, "-1 0\n0 -1\n");
    fs::path fam = scratch_dir() / "pipe.family";
    fs::path model = scratch_dir() / "pipe.model";

    REQUIRE(run_cli("family " + group.string() + " --out " + fam.string()).exit_code == 0);
    REQUIRE(run_cli("model " + fam.string() + " --k 8 --out " + model.string()).exit_code == 0);
    REQUIRE(run_cli("verify " + model.string()).exit_code == 0);

    // -I fixes the (all even) family, so its lift classifies back to -I.
    fs::path mor = scratch_dir() / "pipe.morphism";
    spit(mor, "f(v1) = -v1\nf(v2) = -v2\n");
    RunResult r = run_cli("classify " + model.string() + " " + mor.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("group element:\n-1 0\n0 -1\n") != std::string::npos);
}
