// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: cohann_acceptance <path-to-cohann-cli>

#include "suites.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

namespace {

using cohann::Json;
using cohann::suites::CheckResult;

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& cli, const std::string& args) {
    Run r;
    FILE* pipe = popen(("'" + cli + "' " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Criterion 1 goes through the command line as well as the library.
CheckResult an_via_cli(const std::string& cli) {
    CheckResult r = cohann::suites::check_an_cohomology_annihilator();
    for (unsigned n : {2u, 4u, 6u}) {
        Run run = run_cli(cli, "ca --an " + std::to_string(n));
        std::string tag = "cli A_" + std::to_string(n);
        if (run.code != 0) {
            r.passed = false;
            r.detail += "; " + tag + " exited " + std::to_string(run.code);
            continue;
        }
        Json j = Json::parse(run.out);
        std::string y = n / 2 == 1 ? "y" : "y^" + std::to_string(n / 2);
        if (j["generators"] != Json({"x", y}) || j["stabilized"] != true) {
            r.passed = false;
            r.detail += "; " + tag + " printed " + j["generators"].dump();
        }
    }
    return r;
}

CheckResult determinism_via_cli(const std::string& cli) {
    CheckResult r;
    r.criterion = 12;
    r.name = "determinism";
    Run a = run_cli(cli, "verify --suite golden --format json");
    Run b = run_cli(cli, "verify --suite golden --format json");
    r.passed = a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out;
    if (r.passed)
        r.detail = "two golden runs (each with an internal repeat) printed identical " +
                   std::to_string(a.out.size()) + "-byte JSON";
    else
        r.detail = "exit codes " + std::to_string(a.code) + "/" + std::to_string(b.code) +
                   (a.out == b.out ? ", identical output" : ", outputs differ");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cohann_acceptance <cohann-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    namespace s = cohann::suites;
    const std::function<CheckResult()> criteria[] = {
        [&] { return an_via_cli(cli); },
        s::check_oracle_equivalence,
        s::check_jacobian_containment,
        s::check_syzygy_dual_invariance,
        s::check_determinantal,
        s::check_semigroup_battery,
        s::check_milnor_battery,
        s::check_cross_route,
        s::check_knorrer_lifting,
        s::check_suspension_formula,
        s::check_torus_ideal_identity,
        [&] { return determinism_via_cli(cli); },
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = criterion();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !r.passed;
        std::printf("criterion %2d: %s  %-26s %6.2fs  %s\n", r.criterion, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    secs, r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
