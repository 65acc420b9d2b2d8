#pragma once

// Batch front-end shared by the `cdc` executable and the tests.

#include "cdc/oracle.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cdc {

enum ExitCode { kOk = 0, kInfeasible = 2, kInvalidInput = 3, kGuardExceeded = 4 };

struct Table1Row {
    std::string label;
    int files;
    std::vector<int> budgets;
    int total_lower;   // converse on the total load
    int total_oracle;  // best total in the batch scheme class
    int worst_lower;   // max of the cut-set terms and the contradiction bound
    int worst_oracle;  // best worst-case load in the sixteen-group class
    bool agree() const { return total_lower == total_oracle && worst_lower == worst_oracle; }
};

std::vector<Table1Row> compute_table1();
std::string table1_csv(const std::vector<Table1Row>& rows);

struct Fig3Point {
    int l1;
    std::vector<int> budgets;
    int cut;          // largest cut-set style term
    int beta;         // contradiction bound
    int lower;
    int upper;        // best achievable worst-case load found
    std::string source;
    bool met() const { return lower == upper; }
};

// N = 14, budgets (L1, L1, 2 L1) for L1 = 2, 4, ..., 22.
std::vector<Fig3Point> compute_fig3();
std::string fig3_csv(const std::vector<Fig3Point>& points);

// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cdc
