#ifndef EDGEEST_ERRORS_HPP
#define EDGEEST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgeest {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidVertex : Error {
    using Error::Error;
};

struct SelfLoop : Error {
    using Error::Error;
};

struct SetsNotDisjoint : Error {
    using Error::Error;
};

struct InvalidPartCount : Error {
    using Error::Error;
};

struct InvalidGeneratorParams : Error {
    using Error::Error;
};

struct VertexInQuerySet : Error {
    using Error::Error;
};

struct NotIndependent : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

// Raised by an OracleSession before answering a query that would pass the
// configured cap. Exactly `budget` queries are answered before this fires.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct IngestError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace edgeest

#endif
