/** @file suites.hpp
 *  Named verification suites behind the CLI `verify` command, plus the
 *  report-producing library checks the acceptance harness calls directly
 *  (Hopf-ideal membership, restricted dimension bookkeeping, and the
 *  skew-primitive classification).
 *
 *  A report is a flat list of items; each item carries an identifier, a
 *  status of "pass", "fail" or "skip", and a human-readable detail string.
 *  Reports are deterministic: randomized items draw from fixed seeds, so two
 *  runs with identical options produce byte-identical reports.
 */
#pragma once

#include <string>
#include <vector>

namespace ursg2 {

struct SuiteItem {
    std::string id;
    std::string status;  // "pass", "fail" or "skip"
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteItem> items;

    int failed() const {
        int n = 0;
        for (const auto& it : items) n += it.status == "fail";
        return n;
    }
    bool all_passed() const { return failed() == 0; }
};

struct SuiteOptions {
    bool root_mode = false;  // false: generic coefficients Q(r,s)
    long ell = 5;
    long y = 1;
    long z = 2;
    int degree_bound = 8;        // free-algebra oracle completion bound
    bool enable_rmatrix = false;  // opt-in, see the double suite
    std::string filter;           // regex over item ids; empty selects all
};

/// Suite names accepted by run_suite, in documentation order.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws Error(Error::Mode) when the suite requires
/// the other coefficient mode, Error(Error::Parse) for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

/// Hopf-ideal membership at a root of unity: the coproduct of every ideal
/// generator dies under the two-sided restricted reduction, and the antipode
/// maps every generator back into the ideal.
SuiteReport hopf_ideal_report(long ell, long y, long z);

/// Restricted dimension bookkeeping: the basis count ell^16 and closure of
/// multiplication on seeded random basis-monomial pairs.
SuiteReport dimension_report(long ell, long y, long z, int pairs);

/// Skew-primitive classification: the listed basis elements of each
/// P_{g,h} space verify, and seeded non-examples fail.
SuiteReport skew_primitive_report(long ell, long y, long z);

}  // namespace ursg2
