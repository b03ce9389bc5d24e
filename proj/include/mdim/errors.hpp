#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdim {

/// Invalid construction parameters (G(n,p) settings, sweep config, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation requires a connected graph.
class ConnectivityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The rows of a symbol matrix are not pairwise distinct, so the entropic
/// width bound does not apply.
class CertificateInapplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every randomized landmark draw failed verification.
class ConstructionFailure : public std::runtime_error {
public:
    ConstructionFailure(const std::string& what, std::size_t landmark_count, double sigma,
                        bool sigma_exact)
        : std::runtime_error(what), landmark_count(landmark_count), sigma(sigma),
          sigma_exact(sigma_exact) {}

    std::size_t landmark_count;
    double sigma;
    bool sigma_exact;
};

/// Exact search ran out of node budget. Carries the bracket known so far.
class Inconclusive : public std::runtime_error {
public:
    Inconclusive(const std::string& what, std::size_t lower, std::size_t upper)
        : std::runtime_error(what), lower(lower), upper(upper) {}

    std::size_t lower;
    std::size_t upper;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mdim
