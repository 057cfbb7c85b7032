// Error codes and the exception type shared by all trimulti modules.
#ifndef TRIMULTI_ERRORS_HPP
#define TRIMULTI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trimulti {

enum class errc {
    empty_input,
    negative_entry,
    overflow,
    zero_degree_present,
    vertex_out_of_range,
    shared_vertex_count_not_one,
    precondition_violated,
    not_realizable,
    internal_verifier,
    limit_exceeded,
    retry_budget_exceeded,
    empty_benchmark,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message, std::int64_t detail = -1)
        : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

    errc code() const noexcept { return code_; }

    // Context-dependent payload: offending index for negative_entry,
    // violating k for Erdos-Gallai style failures, -1 when unused.
    std::int64_t detail() const noexcept { return detail_; }

private:
    errc code_;
    std::int64_t detail_;
};

}  // namespace trimulti

#endif
