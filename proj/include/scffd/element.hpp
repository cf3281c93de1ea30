#pragma once

#include <cassert>
#include <memory>

namespace scffd {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/** Construction-specific immutable payload; each ring defines its own. */
struct Payload {
    virtual ~Payload() = default;
};

using PayloadPtr = std::shared_ptr<const Payload>;

/** A ring element: a payload together with the ring it belongs to.
 *
 * Elements are immutable value handles; all arithmetic goes through the
 * owning ring, which checks that operand tags agree (structurally, via
 * the canonical descriptor text).
 */
class Elem {
public:
    Elem() = default;
    Elem(RingPtr ring, PayloadPtr payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}

    bool valid() const { return ring_ != nullptr && payload_ != nullptr; }
    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }

    template <class T>
    const T& payload() const {
        const T* p = dynamic_cast<const T*>(payload_.get());
        assert(p != nullptr && "element payload type mismatch");
        return *p;
    }

private:
    RingPtr ring_;
    PayloadPtr payload_;
};

}  // namespace scffd
