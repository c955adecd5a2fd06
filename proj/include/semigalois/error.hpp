#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semigalois {

  // Base class of every error raised by the library.
  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class associativity_violation : public error {
   public:
    associativity_violation(std::size_t x, std::size_t y, std::size_t z)
        : error("associativity fails at (" + std::to_string(x) + ", "
                + std::to_string(y) + ", " + std::to_string(z) + ")"),
          x(x),
          y(y),
          z(z) {}
    std::size_t x, y, z;
  };

  class identity_violation : public error {
   public:
    explicit identity_violation(std::size_t x)
        : error("identity law fails at element " + std::to_string(x)), x(x) {}
    std::size_t x;
  };

  class size_cap_exceeded : public error {
   public:
    size_cap_exceeded(std::string const& what, std::size_t cap)
        : error(what + " exceeds the cap of " + std::to_string(cap)),
          cap(cap) {}
    std::size_t cap;
  };

  class side_mismatch : public error {
   public:
    side_mismatch()
        : error("operation needs a two-sided congruence, got a right one") {}
  };

  class action_law_violation : public error {
   public:
    action_law_violation(std::size_t s, std::size_t m, std::size_t n)
        : error("action law fails at state " + std::to_string(s)
                + " with elements (" + std::to_string(m) + ", "
                + std::to_string(n) + ")"),
          s(s),
          m(m),
          n(n) {}
    std::size_t s, m, n;
  };

  class arity_mismatch : public error {
   public:
    using error::error;
  };

  class signature_mismatch : public error {
   public:
    signature_mismatch() : error("actions have different signatures") {}
    using error::error;
  };

  class not_equivariant : public error {
   public:
    not_equivariant(std::size_t state, std::size_t generator)
        : error("map does not commute with generator "
                + std::to_string(generator) + " at state "
                + std::to_string(state)),
          state(state),
          generator(generator) {}
    std::size_t state, generator;
  };

  class not_endomorphism : public error {
   public:
    explicit not_endomorphism(std::size_t index)
        : error("relation entry " + std::to_string(index)
                + " is not an endomorphism of the object"),
          index(index) {}
    std::size_t index;
  };

  class empty_action : public error {
   public:
    empty_action() : error("operation needs a non-empty action") {}
  };

  class not_mono : public error {
   public:
    explicit not_mono(std::size_t index)
        : error("covering component " + std::to_string(index)
                + " is not a monomorphism"),
          index(index) {}
    std::size_t index;
  };

  class not_surjective : public error {
   public:
    not_surjective() : error("homomorphism is not surjective") {}
  };

  class not_homomorphism : public error {
   public:
    using error::error;
  };

  // Raised when a construction guaranteed by the theory fails to verify.
  // Always indicates a defect in this library, never bad input.
  class reconstruction_failure : public error {
   public:
    using error::error;
  };

  class ill_defined : public error {
   public:
    ill_defined(std::size_t element, std::size_t state)
        : error("element " + std::to_string(element)
                + " acts ambiguously on state " + std::to_string(state)),
          element(element),
          state(state) {}
    std::size_t element, state;
  };

  class parse_error : public error {
   public:
    parse_error(std::string const& msg, std::size_t line, std::size_t column)
        : error("parse error at " + std::to_string(line) + ":"
                + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    std::size_t line, column;
  };

  class unknown_letter : public error {
   public:
    explicit unknown_letter(char c)
        : error(std::string("letter '") + c + "' is not in the alphabet"),
          letter(c) {}
    char letter;
  };

  class alphabet_mismatch : public error {
   public:
    alphabet_mismatch() : error("alphabets differ") {}
  };

}  // namespace semigalois
