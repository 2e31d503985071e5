#pragma once

#include <stdexcept>
#include <string>

namespace weylab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotEndomorphism : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct NoAlgebraicRelation : Error { using Error::Error; };
struct DegeneratePartner : Error { using Error::Error; };
struct EmptyBound : Error { using Error::Error; };
struct DegenerateW : Error { using Error::Error; };
struct NonPolynomialV : Error { using Error::Error; };
struct NoQ : Error { using Error::Error; };
struct NotXFree : Error { using Error::Error; };
struct ZeroLeading : Error { using Error::Error; };
struct ZeroA : Error { using Error::Error; };
struct RecurrenceDegenerate : Error { using Error::Error; };
struct PreconditionUnmet : Error { using Error::Error; };
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace weylab
