#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccs {

enum class Errc {
  axiom_violation,
  kernel_not_central,
  not_surjective,
  size_limit,
  invalid_complex,
  not_internal,
  not_mergeable,
  same_position,
  not_separating,
  boundary_mismatch,
  missing_colour,
  unknown_kind,
  arity_mismatch,
  module_mismatch,
  identity_violation,
  oracle_mismatch,
  parse_error,
  unknown_fixture,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::axiom_violation: return "AxiomViolation";
    case Errc::kernel_not_central: return "KernelNotCentral";
    case Errc::not_surjective: return "NotSurjective";
    case Errc::size_limit: return "SizeLimit";
    case Errc::invalid_complex: return "InvalidComplex";
    case Errc::not_internal: return "NotInternal";
    case Errc::not_mergeable: return "NotMergeable";
    case Errc::same_position: return "SamePosition";
    case Errc::not_separating: return "NotSeparating";
    case Errc::boundary_mismatch: return "BoundaryMismatch";
    case Errc::missing_colour: return "MissingColour";
    case Errc::unknown_kind: return "UnknownKind";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::module_mismatch: return "ModuleMismatch";
    case Errc::identity_violation: return "IdentityViolation";
    case Errc::oracle_mismatch: return "OracleMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_fixture: return "UnknownFixture";
  }
  return "Unknown";
}

/// Base exception for everything the library throws.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class Axiom {
  identity,
  inverse,
  associativity,
  homomorphism,
  action_identity,
  action_law,
  action_automorphism,
  equivariance,  // d(g |> h) = g d(h) g^-1
  peiffer,       // d(h1) |> h2 = h1 h2 h1^-1
};

constexpr std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::identity: return "identity";
    case Axiom::inverse: return "inverse";
    case Axiom::associativity: return "associativity";
    case Axiom::homomorphism: return "homomorphism";
    case Axiom::action_identity: return "action_identity";
    case Axiom::action_law: return "action_law";
    case Axiom::action_automorphism: return "action_automorphism";
    case Axiom::equivariance: return "eq1";
    case Axiom::peiffer: return "eq2";
  }
  return "unknown";
}

/// An algebraic law failed; `witness()` holds the offending elements
/// (unused trailing slots are zero).
class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::array<std::size_t, 3> witness)
      : Error(Errc::axiom_violation, describe(axiom, witness)),
        axiom_(axiom),
        witness_(witness) {}

  Axiom axiom() const noexcept { return axiom_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(Axiom axiom, const std::array<std::size_t, 3>& w) {
    return std::string(to_string(axiom)) + " fails at (" + std::to_string(w[0]) + ", " +
           std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")";
  }

  Axiom axiom_;
  std::array<std::size_t, 3> witness_;
};

}  // namespace ccs
