// Acceptance suite: one line per criterion, all checks exact, each with its
// runtime ceiling. Exits nonzero if any criterion fails. The CLI binary path
// is taken as argv[1] (used by the end-to-end criterion).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "qfib/fibonacci.hpp"
#include "qfib/intpoly.hpp"
#include "qfib/qcore.hpp"
#include "qfib/rr.hpp"
#include "qfib/verify.hpp"

using namespace qfib;

namespace {

int failures = 0;
unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  criterion %02d  %-58s  %7.2fs / %gs%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), secs, budget_seconds, detail.empty() ? "" : "  -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool report_ok(const VerificationReport& rep, std::string& detail) {
    if (rep.passed()) return true;
    detail = to_string(rep.claim) + ": " + std::to_string(rep.failures.size()) +
             " failure(s), first at " + rep.failures.front().parameters + " expected " +
             rep.failures.front().expected + " got " + rep.failures.front().actual;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "fib = fib_sum, F/G and f_r (r<=3), n <= 300", 60, [](std::string& d) {
        return report_ok(verify_claim(ClaimId::SUM_EQ_REC, 300, jobs), d);
    });

    criterion(2, "Rogers-Ramanujan sums equal F_{n+1} and G_n, n <= 120", 120,
              [](std::string& d) {
                  return report_ok(verify_claim(ClaimId::RR_F_1_2, 120, jobs), d) &&
                         report_ok(verify_claim(ClaimId::RR_G_1_5, 120, jobs), d);
              });

    criterion(3, "Lemma 1.1 both directions, n <= 150", 60, [](std::string& d) {
        return report_ok(verify_claim(ClaimId::LEMMA_1_1, 150, jobs), d);
    });

    criterion(4, "[p]_q | F_{p+1} (p=+-2 mod 5) and [p]_q | G_{p-1} (p=+-1 mod 5), p < 100", 30,
              [](std::string& d) {
                  return report_ok(verify_claim(ClaimId::THM_1_1, 100, jobs), d) &&
                         report_ok(verify_claim(ClaimId::THM_1_2, 100, jobs), d);
              });

    criterion(5, "Phi_{5n} divides G_{5n} and F_{5n}, 5n <= 150", 30, [](std::string& d) {
        return report_ok(verify_claim(ClaimId::EQ_1_6, 150, jobs), d) &&
               report_ok(verify_claim(ClaimId::EQ_1_7, 150, jobs), d);
    });

    criterion(6, "Pan residue table matches residue(G_n, n), 2 <= n <= 150", 60,
              [](std::string& d) {
                  return report_ok(verify_claim(ClaimId::PAN_TABLE, 150, jobs), d);
              });

    criterion(7, "residue(F_n G_n, n) = [5 | n ? 0 : 1], 2 <= n <= 150", 90, [](std::string& d) {
        return report_ok(verify_claim(ClaimId::COR_1_1, 150, jobs), d);
    });

    criterion(8, "F_{kn}, G_{kn} at zeta_k scale by F_n; product F_n^2 or 0, k*n <= 200", 120,
              [](std::string& d) {
                  return report_ok(verify_claim(ClaimId::COR_1_2, 200, jobs), d);
              });

    criterion(9, "[5^k]_{q^m} divides F and G at 5^k m <= 250; worked factorizations", 60,
              [](std::string& d) {
                  return report_ok(verify_claim(ClaimId::THM_2_1, 250, jobs), d);
              });

    criterion(10, "Cassini monomial n <= 100; residue -1 mod Phi_n, 2 <= n <= 150", 60,
              [](std::string& d) {
                  return report_ok(verify_claim(ClaimId::CASSINI_1_9, 100, jobs), d) &&
                         report_ok(verify_claim(ClaimId::EQ_1_10, 150, jobs), d);
              });

    criterion(11, "matrix product entries match fib outputs, n <= 150", 30, [](std::string& d) {
        fib(FamilyId::schur_f(), 151);
        fib(FamilyId::schur_g(), 150);
        for (unsigned long n = 1; n <= 150; ++n) {
            const FibMatrix m = matrix_product(n);
            if (!(m.a11 == fib(FamilyId::schur_f(), n + 1) &&
                  m.a12 == fib(FamilyId::schur_g(), n) &&
                  m.a21 == fib(FamilyId::schur_f(), n) &&
                  m.a22 == fib(FamilyId::schur_g(), n - 1))) {
                d = "entry mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(12, "v5/v2 valuation laws (n <= 2000 / 500) and F mod 8 period 12", 10,
              [](std::string& d) {
                  return report_ok(verify_claim(ClaimId::VAL_5, 2000, jobs), d) &&
                         report_ok(verify_claim(ClaimId::VAL_2, 500, jobs), d);
              });

    criterion(13, "f mod 2 formulas (n <= 150); f mod [4]_q period 24 (n <= 300)", 60,
              [](std::string& d) {
                  return report_ok(verify_claim(ClaimId::F_MOD2, 150, jobs), d) &&
                         report_ok(verify_claim(ClaimId::F_PERIOD_24, 300, jobs), d);
              });

    criterion(14, "conjecture scans Supported (6n <= 240 / 120, r <= 3); f(12) reproduced", 120,
              [](std::string& d) {
                  const auto r31 = scan_conjecture(ClaimId::CONJ_3_1, 240, 3, jobs);
                  const auto r32 = scan_conjecture(ClaimId::CONJ_3_2, 120, 3, jobs);
                  if (r31.status == ClaimStatus::ProvedInRange ||
                      r32.status == ClaimStatus::ProvedInRange) {
                      d = "conjecture reported as proved";
                      return false;
                  }
                  const IntPoly f12_quotient{1, 0, 0, 1, 0, 1, 1, 1, 2, 1, 0, 1};
                  if (!(fib(FamilyId::cigler(0), 12) == BigInt(2) * q_int(8) * f12_quotient)) {
                      d = "f(12, q) factorization mismatch";
                      return false;
                  }
                  return report_ok(r31, d) && report_ok(r32, d);
              });

    criterion(15, "q-core identities: cyclotomic product, symmetry, q=1, Pascal=product", 60,
              [](std::string& d) {
                  for (unsigned long n = 1; n <= 200; ++n) {
                      IntPoly prod{1};
                      for (unsigned long dd = 2; dd <= n; ++dd)
                          if (n % dd == 0) prod = prod * cyclotomic(dd);
                      if (n > 1 && !(prod == q_int(n))) {
                          d = "[n]_q != product of Phi_d at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  for (unsigned long n = 0; n <= 100; ++n) {
                      const auto row = q_binom_row(n);
                      BigInt binom = 1;
                      IntPoly incremental{1};  // product-formula route, built across k
                      for (unsigned long k = 0; k <= n; ++k) {
                          if (!(row[k] == row[n - k])) {
                              d = "symmetry fails at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")";
                              return false;
                          }
                          if (row[k].evaluate_int(1) != binom) {
                              d = "q=1 specialization fails at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")";
                              return false;
                          }
                          if (!(row[k] == incremental)) {
                              d = "Pascal vs product mismatch at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")";
                              return false;
                          }
                          if (k < n) {
                              binom = binom * (n - k) / (k + 1);
                              auto [quo, rem] =
                                  (incremental * q_int(n - k)).divrem(q_int(k + 1));
                              if (!rem.is_zero()) {
                                  d = "product formula division not exact";
                                  return false;
                              }
                              incremental = std::move(quo);
                          }
                      }
                  }
                  return true;
              });

    criterion(16, "CLI `verify all --bound-profile quick` exits 0", 300, [&](std::string& d) {
        if (cli.empty()) {
            d = "CLI path not supplied (argv[1])";
            return false;
        }
        const std::string cmd = cli + " verify all --bound-profile quick --jobs " +
                                std::to_string(jobs) + " > /dev/null";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) {
            d = "exit status " + std::to_string(rc);
            return false;
        }
        return true;
    });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
