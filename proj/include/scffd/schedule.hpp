#pragma once

#include <cstddef>
#include <vector>

#include "scffd/errors.hpp"

namespace scffd {

/** Query mode against a staged construction. */
struct StageMode {
    bool limit = true;
    std::size_t stage = 0;

    static StageMode at_limit() { return StageMode{true, 0}; }
    static StageMode at_stage(std::size_t k) { return StageMode{false, k}; }
};

/** Injective finite sequence of indices into the increasing list of
 * rational primes p_0 = 2, p_1 = 3, p_2 = 5, ...
 *
 * A schedule drives the staged constructions: entry j names the prime
 * whose property is destroyed at stage j+1.  Queries against a staged
 * ring are answered either at a finite stage or against the whole
 * (finite) schedule ("limit").
 */
class EnumerationSchedule {
public:
    EnumerationSchedule() = default;
    explicit EnumerationSchedule(std::vector<std::size_t> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            for (std::size_t j = i + 1; j < entries_.size(); ++j)
                if (entries_[i] == entries_[j])
                    throw Error(ErrorKind::repeated_index,
                                "schedule repeats prime index " + std::to_string(entries_[i]));
    }

    const std::vector<std::size_t>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /** Indices destroyed after `stage` many steps. */
    std::vector<std::size_t> destroyed_at(std::size_t stage) const {
        if (stage > entries_.size())
            throw Error(ErrorKind::stage_mismatch,
                        "stage " + std::to_string(stage) + " exceeds schedule length " +
                            std::to_string(entries_.size()));
        return {entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(stage)};
    }

    bool destroys(std::size_t index, std::size_t stage) const {
        auto pre = destroyed_at(stage);
        for (auto e : pre)
            if (e == index) return true;
        return false;
    }

    bool destroys(std::size_t index, const StageMode& mode) const {
        return destroys(index, mode.limit ? entries_.size() : mode.stage);
    }

private:
    std::vector<std::size_t> entries_;
};

}  // namespace scffd
