#ifndef DPM_ERRORS_HPP
#define DPM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear algebra
struct SingularMatrix : Error { using Error::Error; };
struct NotUnimodular : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };

// Ribbon graphs
struct InvariantViolation : Error { using Error::Error; };
struct LoopContraction : Error { using Error::Error; };

// Homology
struct SideMismatch : Error { using Error::Error; };
struct NotACycle : Error { using Error::Error; };
struct EdgeInTree : Error { using Error::Error; };
struct SeedNotATree : Error { using Error::Error; };
struct SeedNotExtendable : Error { using Error::Error; };

// Period / bundle
struct NotHarmonic : Error { using Error::Error; };
struct ZeroConnection : Error { using Error::Error; };

// Quasi-trees
struct NotSphereEmbedded : Error { using Error::Error; };
struct NotRankG : Error { using Error::Error; };

// I/O
struct ParseError : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };

}  // namespace dpm

#endif
