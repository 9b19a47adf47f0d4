#pragma once

namespace radloc::testhooks {

// Flips the sign of the radii term in the radical-foot offset. Used by the
// verify command's fault-injection mode to prove its checks catch real bugs.
// Must stay false in normal operation.
extern bool flip_radical_foot_sign;

} // namespace radloc::testhooks
