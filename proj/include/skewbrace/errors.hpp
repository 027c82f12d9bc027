#pragma once

// Exception hierarchy shared by every skewbrace component. Mathematical
// failures that callers are expected to inspect carry the witness indices.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewbrace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(std::uint64_t q)
      : Error("modulus " + std::to_string(q) + " is not a prime below 2^31"),
        modulus(q) {}
  std::uint64_t modulus;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t rank, std::size_t n)
      : Error("matrix is singular (rank " + std::to_string(rank) + " < " +
              std::to_string(n) + ")"),
        rank(rank) {}
  std::size_t rank;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::size_t needed, std::size_t allowed)
      : Error("budget exceeded: " + what + " needs " + std::to_string(needed) +
              ", budget is " + std::to_string(allowed)),
        needed(needed),
        allowed(allowed) {}
  std::size_t needed;
  std::size_t allowed;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class InternalInvariantViolation : public Error {
 public:
  explicit InternalInvariantViolation(const std::string& what)
      : Error("internal invariant violated: " + what) {}
};

// ---- brace-core ------------------------------------------------------------

enum class Operation { dot, circ };

inline const char* to_string(Operation op) {
  return op == Operation::dot ? "dot" : "circ";
}

class NotAGroup : public Error {
 public:
  NotAGroup(Operation which, std::string reason)
      : Error(std::string("(A,") + (which == Operation::dot ? "." : "o") +
              ") is not a group: " + reason),
        which(which),
        reason(std::move(reason)) {}
  Operation which;
  std::string reason;
};

class IdentityMismatch : public Error {
 public:
  IdentityMismatch(std::size_t dot_identity, std::size_t circ_identity)
      : Error("identities differ: dot has " + std::to_string(dot_identity) +
              ", circ has " + std::to_string(circ_identity)),
        dot_identity(dot_identity),
        circ_identity(circ_identity) {}
  std::size_t dot_identity;
  std::size_t circ_identity;
};

class BraceRelationViolation : public Error {
 public:
  BraceRelationViolation(std::size_t a, std::size_t b, std::size_t c)
      : Error("brace relation fails at (a,b,c) = (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")"),
        a(a),
        b(b),
        c(c) {}
  std::size_t a, b, c;
};

class CosetMismatch : public Error {
 public:
  explicit CosetMismatch(std::size_t a)
      : Error("a.I != a o I for a = " + std::to_string(a)), a(a) {}
  std::size_t a;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

// ---- brace-rep -------------------------------------------------------------

class NotAHomomorphism : public Error {
 public:
  NotAHomomorphism(Operation side, std::size_t a, std::size_t b)
      : Error(std::string(side == Operation::dot ? "beta" : "rho") +
              " is not a homomorphism at (" + std::to_string(a) + "," +
              std::to_string(b) + ")"),
        side(side),
        a(a),
        b(b) {}
  Operation side;
  std::size_t a, b;
};

class RelationViolation : public Error {
 public:
  RelationViolation(std::size_t a, std::size_t b)
      : Error("beta(lambda_op_a(b)) != rho(a) beta(b) rho(a)^-1 at (a,b) = (" +
              std::to_string(a) + "," + std::to_string(b) + ")"),
        a(a),
        b(b) {}
  std::size_t a, b;
};

class ObstructionFailed : public Error {
 public:
  ObstructionFailed(std::size_t a, std::size_t b)
      : Error("beta(lambda_op_a(b)) != beta(b) at (a,b) = (" +
              std::to_string(a) + "," + std::to_string(b) + ")"),
        a(a),
        b(b) {}
  std::size_t a, b;
};

class NotAbelianImage : public Error {
 public:
  NotAbelianImage(std::size_t a, std::size_t b)
      : Error("image is not abelian: alpha(" + std::to_string(a) +
              ") and alpha(" + std::to_string(b) + ") do not commute"),
        a(a),
        b(b) {}
  std::size_t a, b;
};

class QuotientMismatch : public Error {
 public:
  using Error::Error;
};

// ---- module-analysis -------------------------------------------------------

class NotSimple : public Error {
 public:
  using Error::Error;
};

class ConditionOneFailed : public Error {
 public:
  ConditionOneFailed(std::size_t a, std::size_t b)
      : Error("f alpha(a) f^-1 alpha(a)^-1 does not commute with alpha(b) at "
              "(a,b) = (" +
              std::to_string(a) + "," + std::to_string(b) + ")"),
        a(a),
        b(b) {}
  std::size_t a, b;
};

class ConditionTwoFailed : public Error {
 public:
  ConditionTwoFailed() : Error("f centralizes the image of alpha") {}
};

// ---- io --------------------------------------------------------------------

class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what),
        where(std::move(where)) {}
  std::string where;
};

}  // namespace skewbrace
