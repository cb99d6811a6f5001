#include "iwcert/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "iwcert/arith.hpp"
#include "iwcert/certifier.hpp"
#include "iwcert/errors.hpp"
#include "iwcert/quad.hpp"
#include "iwcert/serialize.hpp"
#include "iwcert/tower.hpp"

namespace iwcert {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_budget = 2;
constexpr int exit_verify = 3;

struct RunConfig {
    std::int64_t p = 0;
    std::int64_t limit = 1'000'000;
    std::int64_t count = 0;  // 0 = emit everything within the limit
    std::string kind = "nonzero-pseudonull";
    std::string format = "json";
    std::string out_path;
    std::int64_t disc = 0;
    std::int64_t radicand = 0;
    std::int64_t ell = 0;
    std::string in_path;
};

bool prime64(std::int64_t n) { return n >= 2 && is_prime(static_cast<std::uint64_t>(n)); }

// Serializes and writes the emitted certificates. stdout carries data
// only; all diagnostics go to err. JSONL to a file appends, so repeated
// runs extend a log instead of rewriting history; JSON and text rewrite.
int write_certificates(const std::vector<Certificate>& certs, const RunConfig& cfg,
                       std::ostream& out, std::ostream& err) {
    std::string payload;
    if (cfg.format == "json") {
        payload = "[";
        for (std::size_t i = 0; i < certs.size(); ++i) {
            payload += (i == 0 ? "\n " : ",\n ");
            payload += certificate_to_json(certs[i]);
        }
        payload += "\n]\n";
    } else if (cfg.format == "jsonl") {
        for (const Certificate& cert : certs) {
            payload += certificate_to_json(cert);
            payload += '\n';
        }
    } else {
        for (const Certificate& cert : certs) payload += certificate_to_text(cert);
    }
    if (cfg.out_path.empty()) {
        out << payload;
        return exit_ok;
    }
    const auto mode = cfg.format == "jsonl" ? std::ios::app : std::ios::trunc;
    std::ofstream file(cfg.out_path, std::ios::out | mode);
    if (!file) {
        err << "certify: cannot open '" << cfg.out_path << "' for writing\n";
        return exit_usage;
    }
    file << payload;
    file.flush();
    if (!file) {
        err << "certify: write to '" << cfg.out_path << "' failed\n";
        return exit_usage;
    }
    return exit_ok;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!prime64(cfg.p)) {
        err << "certify: --p must be prime (got " << cfg.p << ")\n";
        return exit_usage;
    }
    if (cfg.limit < 2) {
        err << "certify: --limit must be >= 2\n";
        return exit_usage;
    }
    if (cfg.count < 0) {
        err << "certify: --count must be >= 0\n";
        return exit_usage;
    }
    try {
        CertificateStream stream;
        if (cfg.kind == "nonzero-pseudonull")
            stream = certify_nonzero_pseudonull(cfg.p, cfg.limit, cfg.count);
        else if (cfg.kind == "nonfree")
            stream = certify_nonfree(cfg.p, cfg.limit, cfg.count);
        else if (cfg.kind == "trivial")
            stream = classify_sweep(cfg.p, cfg.limit, ClassifyKind::Trivial, cfg.count);
        else
            stream = classify_sweep(cfg.p, cfg.limit, ClassifyKind::PseudoNull, cfg.count);
        if (stream.items.empty()) {
            err << "certify: no certificate within limit " << stream.limit << " ("
                << stream.candidates_scanned << " candidates examined)\n";
            return exit_budget;
        }
        return write_certificates(stream.items, cfg, out, err);
    } catch (const std::domain_error& e) {
        err << "certify: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "certify: " << e.what() << "\n";
        return exit_verify;
    }
}

int cmd_classnumber(const RunConfig& cfg, bool use_disc, std::ostream& out,
                    std::ostream& err) {
    try {
        const QuadField k =
            use_disc ? quad_field_from_disc(cfg.disc) : quad_field_from_radicand(cfg.radicand);
        const std::int64_t by_forms = class_number_forms(k);
        const std::int64_t by_sum = class_number_dirichlet(k);
        if (by_forms != by_sum) {
            err << "classnumber: methods disagree for disc " << k.disc << ": form count "
                << by_forms << ", character sum " << by_sum << "\n";
            return exit_verify;
        }
        out << by_forms << "\n";
        return exit_ok;
    } catch (const std::domain_error& e) {
        err << "classnumber: " << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_check_ell(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const QuadField f = quad_field_from_disc(cfg.disc);
        const EllWitness w = make_ell_witness(cfg.p, f, cfg.ell);
        const bool c1 = w.cond1_symbol == -1;
        const bool c2 = w.cond2_residue != 1;
        const bool c3 = w.cond3_congruence == 1 && w.cond3_residue == 1;
        out << "condition (1) ell inert in F:           kronecker(" << f.disc << ", "
            << cfg.ell << ") = " << w.cond1_symbol << "  ->  " << (c1 ? "pass" : "fail")
            << "\n";
        out << "condition (2) ell inert in first layer: ell^(p-1) mod p^2 = "
            << w.cond2_residue << "  ->  " << (c2 ? "pass" : "fail") << "\n";
        out << "condition (3) p splits completely:      ell mod p = " << w.cond3_congruence
            << ", p^((ell-1)/p) mod ell = " << w.cond3_residue << "  ->  "
            << (c3 ? "pass" : "fail") << "\n";
        return (c1 && c2 && c3) ? exit_ok : exit_verify;
    } catch (const std::domain_error& e) {
        err << "check-ell: " << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream file(cfg.in_path);
    if (!file) {
        err << "verify: cannot read '" << cfg.in_path << "'\n";
        return exit_usage;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    std::vector<Certificate> certs;
    try {
        certs = read_certificates(buffer.str());
    } catch (const ParseError& e) {
        err << "verify: " << e.what() << "\n";
        return exit_usage;
    }
    std::size_t failures = 0;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        const VerifyResult result = verify(certs[i]);
        if (!result.ok) {
            ++failures;
            err << "verify: certificate[" << i << "]: " << result.failure << "\n";
        }
    }
    if (failures != 0) return exit_verify;
    out << "verified " << certs.size() << " certificate" << (certs.size() == 1 ? "" : "s")
        << "\n";
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "searches imaginary abelian fields whose unramified Iwasawa module over the "
        "composite of all Z_p-extensions is trivial, pseudo-null, or provably nonzero, "
        "and emits offline-checkable integer certificates"};
    app.name("iwcert");
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* certify = app.add_subcommand("certify", "scan a family and emit certificates");
    certify->add_option("--p", cfg.p, "the prime p")->required();
    certify->add_option("--limit", cfg.limit,
                        "search budget: largest auxiliary prime / |disc| examined");
    certify->add_option("--count", cfg.count, "stop after this many certificates (0 = all)");
    certify->add_option("--kind", cfg.kind, "what to certify")
        ->check(CLI::IsMember({"nonzero-pseudonull", "nonfree", "trivial", "pseudonull"}));
    certify->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "jsonl", "text"}));
    certify->add_option("--out", cfg.out_path, "write to this file (jsonl appends)");

    CLI::App* classnumber =
        app.add_subcommand("classnumber", "class number of an imaginary quadratic field, "
                                          "computed two independent ways");
    CLI::Option* disc_opt =
        classnumber->add_option("--disc", cfg.disc, "fundamental discriminant (< 0)");
    CLI::Option* radicand_opt =
        classnumber->add_option("--radicand", cfg.radicand, "squarefree radicand (< 0)");
    disc_opt->excludes(radicand_opt);
    radicand_opt->excludes(disc_opt);

    CLI::App* check_ell =
        app.add_subcommand("check-ell", "report conditions (1)-(3) for one auxiliary prime");
    check_ell->add_option("--p", cfg.p, "odd prime p")->required();
    check_ell->add_option("--ell", cfg.ell, "candidate auxiliary prime")->required();
    check_ell->add_option("--f-disc", cfg.disc, "discriminant of the quadratic base field")
        ->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "re-check a certificate file by exact recomputation");
    verify_cmd->add_option("--in", cfg.in_path, "JSON array or JSONL certificate file")
        ->required();

    try {
        // CLI11's vector overload consumes tokens from the back.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "iwcert: " << e.what() << "\n";
        return exit_usage;
    }

    if (certify->parsed()) return cmd_certify(cfg, out, err);
    if (classnumber->parsed()) {
        if (disc_opt->count() + radicand_opt->count() != 1) {
            err << "classnumber: exactly one of --disc / --radicand is required\n";
            return exit_usage;
        }
        return cmd_classnumber(cfg, disc_opt->count() == 1, out, err);
    }
    if (check_ell->parsed()) return cmd_check_ell(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    err << "iwcert: no subcommand\n";
    return exit_usage;
}

}  // namespace iwcert
