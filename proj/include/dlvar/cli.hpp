#pragma once

// Command-line front end: every table and report of the library, rendered as
// aligned markdown (default), CSV, or canonical JSON.

#include <ostream>
#include <string>
#include <vector>

namespace dlv::cli {

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// format in {"md", "csv", "json"}; JSON output re-parses and re-emits
// byte-identically (alphabetical key order, fixed indentation).
std::string render(const Report &rep, const std::string &format);

// Exit code 0 on success, 2 on usage errors, 1 on computation errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace dlv::cli
