#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "pjsat/measures.hpp"

namespace pjsat::cli {

enum class Command { Sat, Valid, Jsat, Atoms, Check };

enum ExitCode : int {
    kYes = 0,       // SAT / VALID / true / check PASS
    kNo = 1,        // UNSAT / NOT-VALID / false / check FAIL
    kUsage = 2,     // usage, I/O or parse error
    kResource = 3,  // enumeration cap exceeded
};

struct RunConfig {
    Command command = Command::Sat;
    std::string formula_path;                // "-" reads stdin
    std::optional<std::string> formula_text; // takes precedence over formula_path
    std::optional<std::string> cs_path;      // default: one constant per built-in scheme
    std::optional<std::string> model_path;   // input for `check`
    std::optional<std::string> model_out;    // `sat` also writes the model here
    std::size_t atom_cap = kDefaultAtomCap;
    bool dump_lp = false;
    bool require_injective = false;
    bool require_appropriate = false;
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pjsat::cli
