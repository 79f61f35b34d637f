#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmfp {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point lies outside the domain of a space or set.
class DomainError : public Error {
public:
    DomainError(const std::string& what, double point)
        : Error(what), point(point) {}
    double point;
};

/// A precondition on an argument was violated (empty sample, bad
/// tolerance, alpha outside (0,1), unknown name, parse failure, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A piecewise map has no piece whose guard matches the queried point.
class MapTotalityError : public Error {
public:
    MapTotalityError(const std::string& what, double point)
        : Error(what), point(point) {}
    double point;
};

/// The two halves of a glued map disagree on the sampled overlap.
class GluingError : public Error {
public:
    GluingError(const std::string& what, double witness, double f_value, double g_value)
        : Error(what), witness(witness), f_value(f_value), g_value(g_value) {}
    double witness;
    double f_value;
    double g_value;
};

/// Too few qualifying data points for a fit.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// A Picard orbit produced a point outside the space domain.
class DomainEscapeError : public Error {
public:
    DomainEscapeError(const std::string& what, std::size_t iterate_index, double point)
        : Error(what), iterate_index(iterate_index), point(point) {}
    std::size_t iterate_index;
    double point;
};

}  // namespace pmfp
