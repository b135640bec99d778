// Command-line front end: compute q-Fibonacci family members and q-objects,
// run claim verifications and conjecture scans, emit text or JSON.
//
// Exit codes: 0 success / all claims pass, 1 counterexample found,
// 2 usage or domain error, 3 internal error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "qfib/errors.hpp"
#include "qfib/fibonacci.hpp"
#include "qfib/intpoly.hpp"
#include "qfib/qcore.hpp"
#include "qfib/rr.hpp"
#include "qfib/verify.hpp"

namespace {

using namespace qfib;

FamilyId make_family(const std::string& name, long r) {
    if (name == "F") return FamilyId::schur_f();
    if (name == "G") return FamilyId::schur_g();
    if (name == "fr") return FamilyId::cigler(r);
    throw DomainError("unknown family '" + name + "' (expected F, G or fr)");
}

void print_poly(const IntPoly& p, const std::string& format) {
    if (format == "pretty")
        std::cout << p.pretty() << "\n";
    else if (format == "coeffs")
        std::cout << p.serialize() << "\n";
    else
        std::cout << "{\"coeffs\":" << p.serialize() << ",\"pretty\":\"" << p.pretty() << "\"}\n";
}

void print_report(const VerificationReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << rep.to_json() << "\n";
        return;
    }
    std::cout << to_string(rep.claim) << ": " << to_string(rep.status) << " ("
              << rep.instances_checked << " instances, " << rep.range << ", "
              << rep.elapsed.count() << " ms)\n";
    for (const auto& f : rep.failures)
        std::cout << "  FAIL " << f.parameters << ": expected " << f.expected << ", got "
                  << f.actual << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Fibonacci divisibility toolkit"};
    app.require_subcommand(1);

    std::string format = "pretty";
    unsigned jobs = 1;

    // compute
    auto* compute = app.add_subcommand("compute", "Compute polynomials and q-objects");
    compute->require_subcommand(1);

    std::string family_name = "F";
    long r = 0;
    unsigned long n = 0;
    auto* c_fib = compute->add_subcommand("fib", "Family member F_n, G_n or f_r(n)");
    c_fib->add_option("--family", family_name, "F, G or fr")->required();
    c_fib->add_option("--r", r, "parameter r for the fr family");
    c_fib->add_option("--n", n, "index n")->required();
    c_fib->add_option("--format", format, "pretty|coeffs|json");

    unsigned long qb_n = 0;
    long qb_k = 0;
    auto* c_qbinom = compute->add_subcommand("qbinom", "Gaussian binomial [N;K]");
    c_qbinom->add_option("N", qb_n)->required();
    c_qbinom->add_option("K", qb_k)->required();
    c_qbinom->add_option("--format", format, "pretty|coeffs|json");

    unsigned long cyc_n = 0;
    auto* c_cyclo = compute->add_subcommand("cyclotomic", "Cyclotomic polynomial Phi_N");
    c_cyclo->add_option("N", cyc_n)->required();
    c_cyclo->add_option("--format", format, "pretty|coeffs|json");

    unsigned long max_d = 0;
    auto* c_spec = compute->add_subcommand(
        "spectrum", "All d <= D with Phi_d dividing the chosen family member");
    c_spec->add_option("--family", family_name, "F, G or fr")->required();
    c_spec->add_option("--r", r, "parameter r for the fr family");
    c_spec->add_option("--n", n, "index n")->required();
    c_spec->add_option("--max-d", max_d, "largest cyclotomic index to test")->required();
    c_spec->add_option("--format", format, "pretty|coeffs|json");

    // verify
    std::string claim_name;
    unsigned long bound = 0;
    bool override_limit = false;
    std::string profile = "quick";
    auto* verify = app.add_subcommand("verify", "Verify a claim (or 'all') over a range");
    verify->add_option("CLAIM", claim_name, "claim id, or 'all'")->required();
    verify->add_option("--bound", bound, "sweep bound (per-claim meaning)");
    verify->add_flag("--override", override_limit, "allow bounds past the soft limit");
    verify->add_option("--bound-profile", profile, "quick|full (for 'all')");
    verify->add_option("--format", format, "pretty|coeffs|json");
    verify->add_option("--jobs", jobs, "worker threads for sweeps");

    // scan
    unsigned long max_6n = 0;
    unsigned long max_r = 3;
    auto* scan = app.add_subcommand("scan", "Scan an open conjecture");
    scan->require_subcommand(1);
    auto* s31 = scan->add_subcommand("conj31", "f(6n) divisible by 2 [2^{k+2}]_{q^{2m+1}}");
    s31->add_option("--max-6n", max_6n, "largest 6n to test")->required();
    s31->add_option("--format", format, "pretty|coeffs|json");
    s31->add_option("--jobs", jobs, "worker threads");
    auto* s32 = scan->add_subcommand("conj32", "f_r(6n) divisible by [2^{k+2}]_{q^{2m+1}}");
    s32->add_option("--max-6n", max_6n, "largest 6n to test")->required();
    s32->add_option("--max-r", max_r, "largest r to test");
    s32->add_option("--format", format, "pretty|coeffs|json");
    s32->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (c_fib->parsed()) {
            print_poly(fib(make_family(family_name, r), n), format);
            return 0;
        }
        if (c_qbinom->parsed()) {
            print_poly(q_binom(qb_n, qb_k), format);
            return 0;
        }
        if (c_cyclo->parsed()) {
            if (cyc_n == 0) throw DomainError("cyclotomic index must be >= 1");
            print_poly(cyclotomic(cyc_n), format);
            return 0;
        }
        if (c_spec->parsed()) {
            const auto spec = cyclo_spectrum(fib(make_family(family_name, r), n), max_d);
            std::string sep;
            if (format == "pretty") {
                std::cout << "{";
                for (auto d : spec) std::cout << sep << d, sep = ", ";
                std::cout << "}\n";
            } else {
                std::cout << "[";
                for (auto d : spec) std::cout << sep << d, sep = ",";
                std::cout << "]\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            if (claim_name == "all") {
                const auto reports = verify_all(profile, jobs);
                bool failed = false;
                std::string sep;
                if (format == "json") std::cout << "[";
                for (const auto& rep : reports) {
                    if (format == "json")
                        std::cout << sep << rep.to_json(), sep = ",";
                    else
                        print_report(rep, format);
                    failed |= !rep.passed();
                }
                if (format == "json") std::cout << "]\n";
                return failed ? 1 : 0;
            }
            const ClaimId claim = claim_from_string(claim_name);
            if (bound == 0) {
                std::cerr << "error: --bound is required for a single claim\n";
                return 2;
            }
            const auto rep = is_conjecture(claim)
                                 ? scan_conjecture(claim, bound, max_r, jobs, override_limit)
                                 : verify_claim(claim, bound, jobs, override_limit);
            print_report(rep, format);
            return rep.passed() ? 0 : 1;
        }
        if (s31->parsed() || s32->parsed()) {
            const auto rep = scan_conjecture(s31->parsed() ? ClaimId::CONJ_3_1 : ClaimId::CONJ_3_2,
                                             max_6n, max_r, jobs);
            print_report(rep, format);
            return rep.passed() ? 0 : 1;
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownClaim& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
