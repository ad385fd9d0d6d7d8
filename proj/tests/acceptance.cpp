// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are wall-clock upper bounds enforced per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qfib/exponent.hpp"
#include "qfib/grid.hpp"
#include "qfib/parallel.hpp"
#include "test_util.hpp"

using namespace qfib;

namespace {

int g_failures = 0;

struct Criterion {
    int number;
    const char* description;
    double budget_seconds;
};

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over budget");
    }
    if (!ok) ++g_failures;
    std::printf("%s  criterion %2d: %s (%.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.description, secs, c.budget_seconds, note.empty() ? "" : " -- ",
                note.c_str());
    std::fflush(stdout);
}

std::vector<long> range(long lo, long hi) {
    std::vector<long> v;
    for (long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

bool grid_all_zero(Sequences& seq, IdentityId id, const ParamBlock& block,
                   std::string& note) {
    GridSpec spec;
    spec.identity = id;
    spec.blocks = {block};
    const RunReport r = run_grid(seq, spec, max_workers());
    if (r.all_zero()) return true;
    for (const auto& rep : r.results) {
        if (rep.status != VerifyStatus::zero) {
            note = std::string(to_string(id)) + " first non-zero:";
            for (const auto& [nm, v] : rep.params) note += " " + nm + "=" + std::to_string(v);
            note += std::string(" ") + to_string(rep.status) + " " + rep.residual;
            break;
        }
    }
    return false;
}

// classical coefficient (-1)^{C(j+1,2)} s^{C(j,2)} <k+1 over j>(x, s)
MPoly classical_coefficient(Sequences& seq, int k, int j) {
    const SignedMonomial pref{binom_long(j + 1, 2) % 2 != 0 ? -1 : 1,
                              {0, static_cast<std::int32_t>(binom_long(j, 2)), 0}};
    return pref.to_poly() * seq.fibonomial(k + 1, j);
}

} // namespace

int main() {
    set_max_workers(workers_from_env());
    Sequences seq;

    run({1, "golden first terms of both polynomial families", 1.0}, [&](std::string& note) {
        const std::vector<std::string> classical = {"0", "1", "x", "x^2 + s", "x^3 + 2*s*x",
                                                    "x^4 + 3*s*x^2 + s^2"};
        const std::vector<std::string> carlitz = {
            "0", "1", "x", "x^2 + q*s", "x^3 + q*s*x + q^2*s*x",
            "x^4 + q*s*x^2 + q^2*s*x^2 + q^3*s*x^2 + q^4*s^2"};
        for (long n = 0; n <= 5; ++n) {
            if (to_canonical_text(seq.classical_fib(n)) != classical[n]) {
                note = "classical mismatch at n=" + std::to_string(n);
                return false;
            }
            if (to_canonical_text(seq.qfib(n)) != carlitz[n]) {
                note = "q-family mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    run({2, "explicit sum equals recurrence for 0 <= n <= 25", 5.0}, [&](std::string& note) {
        for (long n = 0; n <= 25; ++n) {
            if (seq.qfib_explicit(n) != seq.qfib(n, 0)) {
                note = "mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    run({3, "negative-index closed form equals backward recurrence, n <= 10", 1.0},
        [&](std::string& note) {
            for (long n = 1; n <= 10; ++n) {
                if (seq.qfib_negative_closed(n) != seq.qfib(-n, 0)) {
                    note = "mismatch at n=" + std::to_string(n);
                    return false;
                }
            }
            return true;
        });

    run({4, "classical power recurrence, k in [1,4], n in [-3,10]", 30.0},
        [&](std::string& note) {
            if (!grid_all_zero(seq, IdentityId::classical_1_4,
                               {{"n", range(-3, 10)}, {"k", range(1, 4)}}, note)) {
                return false;
            }
            const std::vector<std::string> row_k2 = {"1", "-x^2 - s", "-s*x^2 - s^2", "s^3"};
            for (int j = 0; j <= 3; ++j) {
                if (to_canonical_text(classical_coefficient(seq, 2, j)) != row_k2[j]) {
                    note = "k=2 coefficient mismatch at j=" + std::to_string(j);
                    return false;
                }
            }
            return true;
        });

    run({5, "q power recurrence, k in [1,4], n in [-3,10]; q=1 coefficient collapse", 120.0},
        [&](std::string& note) {
            if (!grid_all_zero(seq, IdentityId::theorem1,
                               {{"n", range(-3, 10)}, {"k", range(1, 4)}}, note)) {
                return false;
            }
            for (int k = 1; k <= 3; ++k) {
                for (int j = 0; j <= k + 1; ++j) {
                    const PolyFraction parts = theorem1_coefficient_parts(seq, k, j);
                    const MPoly lhs = subst_q_value(parts.num, QSubst::one);
                    const MPoly rhs = subst_q_value(parts.den, QSubst::one) *
                                      classical_coefficient(seq, k, j);
                    if (lhs != rhs) {
                        note = "collapse failed at k=" + std::to_string(k) +
                               " j=" + std::to_string(j);
                        return false;
                    }
                }
            }
            return true;
        });

    run({6, "transformed recurrence, k in [1,3], n in [1,8]", 60.0}, [&](std::string& note) {
        return grid_all_zero(seq, IdentityId::corollary1,
                             {{"n", range(1, 8)}, {"k", range(1, 3)}}, note);
    });

    run({7, "two-by-two determinant evaluation over its grid", 30.0}, [&](std::string& note) {
        return grid_all_zero(
            seq, IdentityId::lemma1,
            {{"n", range(-3, 6)}, {"m", range(1, 4)}, {"ell", range(1, 4)}}, note);
    });

    run({8, "two-term decomposition, k in [1,5], n in [0,10]", 30.0}, [&](std::string& note) {
        return grid_all_zero(seq, IdentityId::corollary2,
                             {{"n", range(0, 10)}, {"k", range(1, 5)}}, note);
    });

    run({9, "vanishing determinant, k in [1,3], n in [-3,10]", 120.0},
        [&](std::string& note) {
            return grid_all_zero(seq, IdentityId::eq_2_26,
                                 {{"n", range(-3, 10)}, {"k", range(1, 3)}}, note);
        });

    run({10, "minor ratios re-derive every coefficient, k in [1,3]", 120.0},
        [&](std::string& note) {
            return grid_all_zero(seq, IdentityId::minor_ratio,
                                 {{"n", {4, 5}}, {"k", range(1, 3)}, {"j", range(1, 4)}},
                                 note);
        });

    run({11, "det closed forms: exact at k=1; monomial-uniform at k=2,3", 300.0},
        [&](std::string& note) {
            // k = 1 blocks hold verbatim
            if (!grid_all_zero(seq, IdentityId::theorem2,
                               {{"n", range(-2, 4)},
                                {"m", range(1, 3)},
                                {"ell", range(1, 3)},
                                {"k", {1}}},
                               note) ||
                !grid_all_zero(seq, IdentityId::lemma2,
                               {{"n", range(-2, 4)}, {"m", range(1, 3)}, {"k", {1}}}, note) ||
                !grid_all_zero(seq, IdentityId::lemma3,
                               {{"ell", range(1, 3)}, {"k", {1}}}, note)) {
                return false;
            }
            // k in {2,3}: zero, or one signed monomial constant per (id,k,ell)
            std::map<std::string, std::string> observed;
            auto scan = [&](IdentityId id, const ParamBlock& block) {
                GridSpec spec;
                spec.identity = id;
                spec.blocks = {block};
                const RunReport r = run_grid(seq, spec, max_workers());
                for (const auto& rep : r.results) {
                    if (rep.status == VerifyStatus::error) {
                        note = std::string(to_string(id)) + " error: " + rep.residual;
                        return false;
                    }
                    long k = 0, ell = 0;
                    for (const auto& [nm, v] : rep.params) {
                        if (nm == "k") k = v;
                        if (nm == "ell") ell = v;
                    }
                    const std::string key = std::string(to_string(id)) +
                                            " k=" + std::to_string(k) +
                                            " ell=" + std::to_string(ell);
                    if (rep.status == VerifyStatus::residual) {
                        if (!parse_canonical_text(rep.residual).is_monomial()) {
                            note = key + ": residual not a monomial: " + rep.residual;
                            return false;
                        }
                        auto [it, fresh] = observed.emplace(key, rep.residual);
                        if (!fresh && it->second != rep.residual) {
                            note = key + ": residual varies across grid (" + it->second +
                                   " vs " + rep.residual + ")";
                            return false;
                        }
                    } else {
                        auto [it, fresh] = observed.emplace(key, "0");
                        if (!fresh && it->second != "0") {
                            note = key + ": mixes zero and " + it->second;
                            return false;
                        }
                    }
                }
                return true;
            };
            if (!scan(IdentityId::theorem2, {{"n", range(-1, 3)},
                                             {"m", range(1, 2)},
                                             {"ell", range(1, 2)},
                                             {"k", {2, 3}}}) ||
                !scan(IdentityId::lemma2,
                      {{"n", range(-1, 3)}, {"m", range(1, 2)}, {"k", {2, 3}}}) ||
                !scan(IdentityId::lemma3, {{"ell", range(1, 2)}, {"k", {2, 3}}})) {
                return false;
            }
            note = "residual factors:";
            for (const auto& [key, value] : observed) {
                if (value != "0") note += " [" + key + ": " + value + "]";
            }
            return true;
        });

    run({12, "step-ell recurrence: reduction, three-term case, winning reading", 180.0},
        [&](std::string& note) {
            for (int k = 1; k <= 3; ++k) {
                for (int j = 0; j <= k + 1; ++j) {
                    const PolyFraction a = theorem3_coefficient_parts(seq, k, j, 1);
                    const PolyFraction b = theorem1_coefficient_parts(seq, k, j);
                    if (a.num * b.den != b.num * a.den) {
                        note = "ell=1 coefficient mismatch at k=" + std::to_string(k) +
                               " j=" + std::to_string(j);
                        return false;
                    }
                }
            }
            for (int ell = 1; ell <= 3; ++ell) {
                ParamBlock block{{"n", range(2 * ell, 2 * ell + 6)}, {"ell", {ell}}};
                if (!grid_all_zero(seq, IdentityId::eq_2_33, block, note)) return false;
            }
            if (!grid_all_zero(seq, IdentityId::theorem3,
                               {{"n", range(4, 8)}, {"k", {2}}, {"ell", {2}}}, note)) {
                return false;
            }
            note = "flat (fixed q^{j*ell}) reading verified for k=2, ell=2";
            return true;
        });

    run({13, "product-vs-sum expansion, n in [0,12]", 5.0}, [&](std::string& note) {
        return grid_all_zero(seq, IdentityId::qbinomial_1_9, {{"n", range(0, 12)}}, note);
    });

    run({14, "ring property suite, 1000 randomized cases", 30.0}, [&](std::string& note) {
        auto rng = testutil::make_rng(777);
        std::uniform_int_distribution<long> sh(-4, 4);
        for (int i = 0; i < 1000; ++i) {
            const MPoly a = testutil::random_poly(rng);
            const MPoly b = testutil::random_poly(rng);
            const MPoly c = testutil::random_poly(rng);
            if (a + b != b + a || (a + b) + c != a + (b + c) || a * b != b * a ||
                (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c ||
                a + MPoly::zero() != a || a * MPoly::one() != a || !(a - a).is_zero()) {
                note = "ring axiom failed at case " + std::to_string(i);
                return false;
            }
            const MPoly nz = testutil::random_nonzero_poly(rng);
            if (exact_div(a * nz, nz) != a) {
                note = "exact_div round-trip failed at case " + std::to_string(i);
                return false;
            }
            const long u = sh(rng), v = sh(rng);
            if (subst_s_scale(subst_s_scale(a, u), v) != subst_s_scale(a, u + v)) {
                note = "substitution composition failed at case " + std::to_string(i);
                return false;
            }
            if (subst_q_value(subst_q_value(a, QSubst::inverse), QSubst::inverse) != a) {
                note = "q-inversion involution failed at case " + std::to_string(i);
                return false;
            }
            const mpq_class x0 = testutil::random_rational(rng);
            const mpq_class s0 = testutil::random_nonzero_rational(rng);
            const mpq_class q0 = testutil::random_nonzero_rational(rng);
            if (eval_rational(a * b, x0, s0, q0) !=
                eval_rational(a, x0, s0, q0) * eval_rational(b, x0, s0, q0)) {
                note = "evaluation homomorphism failed at case " + std::to_string(i);
                return false;
            }
            if (parse_canonical_text(to_canonical_text(a)) != a) {
                note = "text round-trip failed at case " + std::to_string(i);
                return false;
            }
        }
        return true;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}
