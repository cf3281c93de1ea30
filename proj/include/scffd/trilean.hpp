#pragma once

#include <string>

namespace scffd {

/** Three-valued answer for the primality / irreducibility predicates.
 *
 * Some constructions deliberately come without a uniform decision
 * procedure for one of the predicates; those queries answer
 * `unsupported` instead of failing.
 */
enum class Trilean { no, yes, unsupported };

inline Trilean to_trilean(bool b) { return b ? Trilean::yes : Trilean::no; }

inline bool is_decided(Trilean t) { return t != Trilean::unsupported; }

inline std::string to_string(Trilean t) {
    switch (t) {
        case Trilean::no: return "false";
        case Trilean::yes: return "true";
        case Trilean::unsupported: return "unsupported";
    }
    return "unsupported";
}

}  // namespace scffd
