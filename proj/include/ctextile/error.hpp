#ifndef CTEXTILE_ERROR_HPP
#define CTEXTILE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ctextile {

// Error categories surfaced by the library. The CLI maps any Error to a
// single "error: ..." line and exit code 1.
enum class errc {
    zero_row_or_column,
    size_mismatch,
    domain_gap,
    not_edge_distinct,
    invalid_matrix,
    unknown_symbol,
    domain_mismatch,
    commutation_failure,
    not_commuting,
    no_specification,
    not_paved,
    incompatible,
    inadmissible_diagonal,
    internal_invariant,
    not_square,
    parse_error,
    invalid_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace ctextile

#endif
