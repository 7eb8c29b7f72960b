#pragma once

#include <stdexcept>
#include <string>

namespace hartogs {

enum class Errc {
    ok = 0,
    parse_error,
    no_proper_map,
    dimension_mismatch,
    not_in_domain,
    branch_pole,
    not_on_k,
    center_too_close,
    invalid_descriptor,
    empty_region,
    verify_failed,
    internal,
};

// Single exception type for the library; the C layer flattens it to a status
// code plus message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace hartogs
