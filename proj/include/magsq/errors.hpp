#pragma once

#include <stdexcept>
#include <string>

namespace magsq {

// Operands live in different algebras or different tensor pairs.
struct mismatch_error : std::invalid_argument {
    explicit mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

// Element has vanishing quadratic norm (possible in the split algebras).
struct not_invertible_error : std::domain_error {
    explicit not_invertible_error(const std::string& what) : std::domain_error(what) {}
};

// Coordinate plane (p, q) is out of range or degenerate (p == q).
struct invalid_plane_error : std::invalid_argument {
    explicit invalid_plane_error(const std::string& what) : std::invalid_argument(what) {}
};

// A generator algorithm was invoked on a plane it does not handle.
struct method_dispatch_error : std::logic_error {
    explicit method_dispatch_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace magsq
