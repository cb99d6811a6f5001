#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "iwcert/certifier.hpp"
#include "iwcert/cli.hpp"
#include "iwcert/serialize.hpp"

using namespace iwcert;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path temp_file(const char* name) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(path);
    return path;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("classnumber: both routes, one answer") {
    CliResult r = run({"classnumber", "--disc", "-47"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    CHECK(r.err.empty());

    CHECK(run({"classnumber", "--radicand", "-6"}).out == "2\n");
    CHECK(run({"classnumber", "--disc", "-239"}).out == "15\n");

    CHECK(run({"classnumber", "--disc", "-10"}).code == 1);   // not a discriminant
    CHECK(run({"classnumber", "--disc", "5"}).code == 1);     // not imaginary
    CHECK(run({"classnumber"}).code == 1);                    // no field given
    CHECK(run({"classnumber", "--disc", "-47", "--radicand", "-47"}).code == 1);
    CHECK(run({"classnumber", "--disc", "-47", "--radicand", "-47"}).err.find("iwcert:") !=
          std::string::npos);
}

TEST_CASE("check-ell reports all three conditions") {
    const CliResult good = run({"check-ell", "--p", "3", "--ell", "67", "--f-disc", "-47"});
    CHECK(good.code == 0);
    CHECK(good.out.find("condition (1)") != std::string::npos);
    CHECK(good.out.find("kronecker(-47, 67) = -1") != std::string::npos);
    CHECK(good.out.find("condition (2)") != std::string::npos);
    CHECK(good.out.find("condition (3)") != std::string::npos);
    CHECK(good.out.find("fail") == std::string::npos);
    CHECK(count_lines(good.out) == 3);

    const CliResult bad = run({"check-ell", "--p", "3", "--ell", "61", "--f-disc", "-47"});
    CHECK(bad.code == 3);
    CHECK(bad.out.find("kronecker(-47, 61) = 1") != std::string::npos);
    CHECK(bad.out.find("fail") != std::string::npos);

    CHECK(run({"check-ell", "--p", "3", "--ell", "15", "--f-disc", "-47"}).code == 1);
    CHECK(run({"check-ell", "--p", "2", "--ell", "7", "--f-disc", "-47"}).code == 1);
    CHECK(run({"check-ell", "--p", "3", "--ell", "67"}).code == 1);  // --f-disc required
}

TEST_CASE("certify: argument validation") {
    CHECK(run({"certify"}).code == 1);
    CHECK(run({"certify", "--p", "4", "--limit", "100"}).code == 1);
    CHECK(run({"certify", "--p", "4", "--limit", "100"}).err.find("must be prime") !=
          std::string::npos);
    CHECK(run({"certify", "--p", "2", "--limit", "1"}).code == 1);
    CHECK(run({"certify", "--p", "2", "--count", "-1"}).code == 1);
    CHECK(run({"certify", "--p", "2", "--kind", "bogus"}).code == 1);
    CHECK(run({"certify", "--p", "2", "--format", "yaml"}).code == 1);
}

TEST_CASE("certify: budget exhaustion is exit 2 with the scan report") {
    const CliResult r = run({"certify", "--p", "3", "--limit", "60"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("no certificate within limit 60 (6 candidates examined)") !=
          std::string::npos);
}

TEST_CASE("certify: json array output round-trips and verifies") {
    const CliResult r = run({"certify", "--p", "3", "--limit", "100"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.substr(0, 2) == "[\n");
    CHECK(r.out.substr(r.out.size() - 3) == "\n]\n");
    const std::vector<Certificate> certs = read_certificates(r.out);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].field.ell == 67);
    CHECK(verify(certs[0]).ok);
}

TEST_CASE("certify: jsonl output, counts and determinism") {
    const std::vector<std::string> args = {"certify", "--p",      "2",
                                           "--limit", "250",      "--format", "jsonl"};
    const CliResult a = run(args);
    REQUIRE(a.code == 0);
    CHECK(count_lines(a.out) == 7);
    CHECK(read_certificates(a.out).size() == 7);
    const CliResult b = run(args);
    CHECK(a.out == b.out);  // byte-identical across runs

    const CliResult capped =
        run({"certify", "--p", "2", "--limit", "250", "--count", "2", "--format", "jsonl"});
    CHECK(count_lines(capped.out) == 2);
}

TEST_CASE("certify: classifier kinds drive the sweeps") {
    const CliResult trivial =
        run({"certify", "--p", "2", "--limit", "50", "--kind", "trivial", "--format", "jsonl"});
    REQUIRE(trivial.code == 0);
    const std::vector<Certificate> certs = read_certificates(trivial.out);
    REQUIRE(certs.size() == 8);
    CHECK(certs.front().field.base.disc == -3);
    CHECK(certs.back().field.base.disc == -43);

    const CliResult pseudo =
        run({"certify", "--p", "3", "--limit", "30", "--kind", "pseudonull", "--format",
             "jsonl"});
    CHECK(read_certificates(pseudo.out).size() == 9);

    const CliResult nonfree =
        run({"certify", "--p", "2", "--limit", "300", "--kind", "nonfree", "--format",
             "jsonl"});
    CHECK(read_certificates(nonfree.out).size() == 4);
}

TEST_CASE("certify: text format is the human rendering") {
    const CliResult r = run({"certify", "--p", "5", "--limit", "40", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("k = Q(sqrt(-1)) * (degree-5 subfield of Q(mu_31))") !=
          std::string::npos);
    CHECK(r.out.find("claim x_pseudo_null") != std::string::npos);
    CHECK(r.out.find("claim x_nonzero") != std::string::npos);
}

TEST_CASE("certify: --out writes the file, jsonl appends, json rewrites") {
    const std::filesystem::path path = temp_file("iwcert_test_out.jsonl");

    const std::vector<std::string> args = {"certify", "--p", "3",     "--limit", "100",
                                           "--format", "jsonl", "--out", path.string()};
    CliResult r = run(args);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK(count_lines(slurp(path)) == 1);

    r = run(args);  // append mode: a second run extends the log
    REQUIRE(r.code == 0);
    CHECK(count_lines(slurp(path)) == 2);
    const std::vector<Certificate> certs = read_certificates(slurp(path));
    REQUIRE(certs.size() == 2);
    CHECK(certs[0] == certs[1]);

    const std::filesystem::path jpath = temp_file("iwcert_test_out.json");
    const std::vector<std::string> jargs = {"certify", "--p", "3",    "--limit", "100",
                                            "--out",   jpath.string()};
    REQUIRE(run(jargs).code == 0);
    REQUIRE(run(jargs).code == 0);  // trunc mode: same content, not doubled
    const std::string body = slurp(jpath);
    CHECK(read_certificates(body).size() == 1);
    CHECK(body == run({"certify", "--p", "3", "--limit", "100"}).out);

    std::filesystem::remove(path);
    std::filesystem::remove(jpath);

    CHECK(run({"certify", "--p", "3", "--limit", "100", "--out",
               "/nonexistent_dir_iwcert/x.json"})
              .code == 1);
}

TEST_CASE("verify: accepts good files, names bad certificates, exit codes") {
    const std::filesystem::path good = temp_file("iwcert_test_good.jsonl");
    const std::filesystem::path bad = temp_file("iwcert_test_bad.jsonl");
    const std::filesystem::path junk = temp_file("iwcert_test_junk.jsonl");
    const std::filesystem::path empty = temp_file("iwcert_test_empty.jsonl");

    const CliResult emitted =
        run({"certify", "--p", "2", "--limit", "250", "--format", "jsonl"});
    REQUIRE(emitted.code == 0);
    std::ofstream(good) << emitted.out;

    CliResult r = run({"verify", "--in", good.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "verified 7 certificates\n");

    // flip one stored class number: the verifier must name the witness
    std::string tampered = emitted.out;
    const std::size_t at = tampered.find("\"h_f\":\"3\"");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 9, "\"h_f\":\"4\"");
    std::ofstream(bad) << tampered;
    r = run({"verify", "--in", bad.string()});
    CHECK(r.code == 3);
    CHECK(r.err.find("certificate[0]") != std::string::npos);
    CHECK(r.err.find("witness 'h_f'") != std::string::npos);
    CHECK(r.err.find("stored 4") != std::string::npos);

    std::ofstream(junk) << "{ not json\n";
    r = run({"verify", "--in", junk.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("verify:") != std::string::npos);

    std::ofstream(empty) << "";
    r = run({"verify", "--in", empty.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "verified 0 certificates\n");

    CHECK(run({"verify", "--in", "/nonexistent_dir_iwcert/none.jsonl"}).code == 1);
    CHECK(run({"verify"}).code == 1);

    for (const auto& p : {good, bad, junk, empty}) std::filesystem::remove(p);
}

TEST_CASE("help and bad invocations") {
    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("iwcert") != std::string::npos);
    CHECK(help.out.find("certify") != std::string::npos);
    CHECK(help.err.empty());

    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"frobnicate"}).err.find("iwcert:") != std::string::npos);
}
