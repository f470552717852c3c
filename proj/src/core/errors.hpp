#pragma once

#include <stdexcept>
#include <string>

namespace rangewalk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SupportError : Error { using Error::Error; };
struct MassError : Error { using Error::Error; };
struct DegenerateWindow : Error { using Error::Error; };
struct InconsistentMeasure : Error { using Error::Error; };
struct LeakageError : Error { using Error::Error; };
struct NonTermination : Error { using Error::Error; };
struct UnboundedError : Error { using Error::Error; };
struct BoxTooSmall : Error { using Error::Error; };
struct InfeasibleMarket : Error { using Error::Error; };
struct UnboundedLp : Error { using Error::Error; };
struct CertificationFailure : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };

}  // namespace rangewalk
