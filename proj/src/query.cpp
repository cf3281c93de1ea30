#include "scffd/query.hpp"

#include <json.hpp>

#include "scffd/dest_ring.hpp"
#include "scffd/fraction.hpp"
#include "scffd/parse.hpp"
#include "scffd/primes.hpp"
#include "scffd/ring.hpp"
#include "scffd/trilean.hpp"

namespace scffd {

namespace {

using json = nlohmann::ordered_json;

StageMode parse_mode(const std::optional<std::string>& text) {
    if (!text || *text == "limit") return StageMode::at_limit();
    const std::string prefix = "at-stage:";
    if (text->rfind(prefix, 0) == 0) {
        const std::string digits = text->substr(prefix.size());
        if (!digits.empty() &&
            digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 6)
            return StageMode::at_stage(static_cast<std::size_t>(std::stoul(digits)));
    }
    throw Error(ErrorKind::validation,
                "mode must be 'limit' or 'at-stage:<k>', got '" + *text + "'");
}

const std::string& require(const std::optional<std::string>& arg, const char* flag) {
    if (!arg) throw Error(ErrorKind::validation, std::string("missing required flag ") + flag);
    return *arg;
}

void forbid(const std::optional<std::string>& arg, const char* flag, const std::string& command) {
    if (arg)
        throw Error(ErrorKind::validation,
                    std::string(flag) + " does not apply to the '" + command + "' command");
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::syntax: return 2;
        case ErrorKind::cap_exceeded: return 3;
        default: return 1;  // not-in-ring, validation, and operation misuse
    }
}

json trace_stages(const ParsedRing& pr, const SearchCaps& caps) {
    json stages = json::array();
    const auto& entries = pr.schedule.entries();
    for (std::size_t k = 0; k <= entries.size(); ++k) {
        RingPtr rk = pr.at_stage(k);
        json row;
        row["stage"] = k;
        row["ring"] = rk->signature();
        json ps = json::array();
        for (std::size_t idx : entries) {
            Integer p = nth_prime(idx);
            Elem e = rk->from_int(p);
            json cell;
            cell["index"] = idx;
            cell["p"] = p.str();
            cell["destroyed"] = pr.schedule.destroys(idx, k);
            cell["prime"] = to_string(rk->is_prime(e, caps));
            cell["irreducible"] = to_string(rk->is_irreducible(e, caps));
            ps.push_back(std::move(cell));
        }
        row["primes"] = std::move(ps);
        stages.push_back(std::move(row));
    }
    return stages;
}

json run_checked(const QueryRequest& q) {
    json doc;
    doc["command"] = q.command;
    doc["ring"] = q.ring;

    ParsedRing pr = parse_ring(q.ring);

    // mode selects the ring instance every command operates on
    StageMode mode = parse_mode(q.mode);
    RingPtr ring = pr.ring;
    if (!mode.limit) ring = pr.at_stage(mode.stage);  // validates staged-ness
    if (q.mode && pr.staging == ParsedRing::Staging::none)
        throw Error(ErrorKind::validation,
                    "--mode applies only to staged descriptors, not '" + ring->signature() + "'");
    doc["signature"] = ring->signature();
    if (q.mode) doc["mode"] = *q.mode;

    const SearchCaps& caps = q.caps;

    if (q.command == "parse") {
        forbid(q.elem2, "--elem2", q.command);
        if (q.elem) {
            Elem e = parse_element(ring, *q.elem);
            doc["element"] = ring->print(e);
        }
        return doc;
    }
    if (q.command == "divisors") {
        forbid(q.elem2, "--elem2", q.command);
        Elem e = parse_element(ring, require(q.elem, "--elem"));
        doc["elem"] = ring->print(e);
        DivisorSet d = ring->divisors(e, caps);
        json members = json::array();
        for (const Elem& m : d.members) members.push_back(ring->print(m));
        doc["count"] = d.members.size();
        doc["divisors"] = std::move(members);
        return doc;
    }
    if (q.command == "units") {
        forbid(q.elem, "--elem", q.command);
        forbid(q.elem2, "--elem2", q.command);
        json members = json::array();
        for (const Elem& u : ring->units(caps)) members.push_back(ring->print(u));
        doc["units"] = std::move(members);
        return doc;
    }
    if (q.command == "irreducible" || q.command == "prime") {
        forbid(q.elem2, "--elem2", q.command);
        Elem e = parse_element(ring, require(q.elem, "--elem"));
        doc["elem"] = ring->print(e);
        Trilean t = q.command == "prime" ? ring->is_prime(e, caps) : ring->is_irreducible(e, caps);
        doc["value"] = to_string(t);
        return doc;
    }
    if (q.command == "associates") {
        Elem a = parse_element(ring, require(q.elem, "--elem"));
        Elem b = parse_element(ring, require(q.elem2, "--elem2"));
        doc["elem"] = ring->print(a);
        doc["elem2"] = ring->print(b);
        doc["value"] = ring->are_associates(a, b, caps);
        return doc;
    }
    if (q.command == "factor") {
        forbid(q.elem2, "--elem2", q.command);
        Elem e = parse_element(ring, require(q.elem, "--elem"));
        doc["elem"] = ring->print(e);
        Factorization f = ring->factor_irreducibles(e, caps);
        doc["unit"] = ring->print(f.unit);
        json parts = json::array();
        for (const Elem& p : f.factors) parts.push_back(ring->print(p));
        doc["factors"] = std::move(parts);
        return doc;
    }
    if (q.command == "reduce") {
        Elem a = parse_element(ring, require(q.elem, "--elem"));
        Elem b = parse_element(ring, require(q.elem2, "--elem2"));
        doc["elem"] = ring->print(a);
        doc["elem2"] = ring->print(b);
        auto [n, d] = reduce_pair(*ring, a, b, caps);
        doc["num"] = ring->print(n);
        doc["den"] = ring->print(d);
        return doc;
    }
    if (q.command == "member") {
        forbid(q.elem2, "--elem2", q.command);
        const std::string& text = require(q.elem, "--elem");
        try {
            Elem e = parse_element(ring, text);
            doc["member"] = true;
            doc["element"] = ring->print(e);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::not_in_ring) throw;
            doc["member"] = false;
            doc["element"] = nullptr;
            doc["reason"] = err.what();
        }
        return doc;
    }
    if (q.command == "stage-trace") {
        forbid(q.elem, "--elem", q.command);
        forbid(q.elem2, "--elem2", q.command);
        if (!pr.staged())
            throw Error(ErrorKind::validation,
                        "stage-trace applies only to staged descriptors, not '" +
                            pr.ring->signature() + "'");
        json sched = json::array();
        for (std::size_t idx : pr.schedule.entries()) sched.push_back(idx);
        doc["schedule"] = std::move(sched);
        doc["destroys"] = pr.staging == ParsedRing::Staging::primes ? "primality" : "irreducibility";
        doc["stages"] = trace_stages(pr, caps);
        return doc;
    }
    throw Error(ErrorKind::validation, "unknown command '" + q.command + "'");
}

}  // namespace

QueryResult run_query(const QueryRequest& q) {
    json doc;
    int code = 0;
    try {
        doc = run_checked(q);
    } catch (const Error& err) {
        doc = json();
        doc["command"] = q.command;
        doc["ring"] = q.ring;
        json e;
        e["kind"] = error_kind_name(err.kind());
        e["message"] = err.what();
        doc["error"] = std::move(e);
        code = exit_code_for(err.kind());
    } catch (const std::exception& ex) {
        doc = json();
        doc["command"] = q.command;
        doc["ring"] = q.ring;
        json e;
        e["kind"] = "InternalError";
        e["message"] = ex.what();
        doc["error"] = std::move(e);
        code = 1;
    }
    return QueryResult{code, doc.dump(2) + "\n"};
}

}  // namespace scffd
