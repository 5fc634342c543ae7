// Error taxonomy shared across the toolkit. Argument misuse is reported via
// std::invalid_argument; the classes below cover the remaining categories
// the CLI maps to distinct exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace qsec {

// A configured capacity was exceeded (statevector cap, unwritable output).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant no longer holds (e.g. probabilities stopped summing
// to one). Indicates a bug or numeric blow-up, not caller misuse.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A randomized procedure exhausted its retry budget. Carries the success
// probability the caller was entitled to expect per attempt.
class ProbabilisticFailure : public std::runtime_error {
public:
    ProbabilisticFailure(const std::string& what, double predicted_success)
        : std::runtime_error(what), predicted_success_(predicted_success) {}

    double predicted_success() const { return predicted_success_; }

private:
    double predicted_success_;
};

}  // namespace qsec
