#pragma once

#include <optional>
#include <string>

#include "scffd/caps.hpp"

namespace scffd {

/** One CLI-level query, decoded from flags. */
struct QueryRequest {
    std::string command;  // divisors | units | irreducible | prime | associates
                          // | factor | reduce | member | stage-trace | parse
    std::string ring;     // descriptor text
    std::optional<std::string> elem;
    std::optional<std::string> elem2;
    std::optional<std::string> mode;  // "limit" (default) or "at-stage:<k>"
    SearchCaps caps;
};

struct QueryResult {
    int exit_code = 0;  // 0 ok, 1 not-in-ring/validation, 2 syntax, 3 cap exhaustion
    std::string json;   // pretty-printed document, newline-terminated
};

/** Run a query and render the deterministic JSON document.  All library
 * errors are captured into the structured "error" field plus the exit
 * code; nothing throws. */
QueryResult run_query(const QueryRequest& q);

}  // namespace scffd
