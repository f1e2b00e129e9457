#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fbl {

using cd = std::complex<double>;

// Error codes reported by validators and constructors. The CLI maps
// parse_error to exit code 2 and everything else to exit code 1.
enum class errc {
  parse_error,
  not_associative,
  not_inverse,
  not_a_group,
  not_a_grading,
  not_cstar,
  no_unit,
  bad_involution,
  degenerate_gram,
  bundle_mismatch,
  not_partial_homomorphism,
  images_dont_span,
  ideal_mismatch,
  hypothesis_violated,
  oracle_not_applicable,
  not_an_ideal,
  validation_failed,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// Numerical tolerances used throughout. `rank` is the relative singular
// value cutoff for rank/membership decisions, `identity` the absolute bound
// for algebraic identity checks on O(1)-sized data.
struct Tolerances {
  double rank = 1e-9;
  double identity = 1e-10;
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::not_associative: return "NotAssociative";
    case errc::not_inverse: return "NotInverse";
    case errc::not_a_group: return "GNotAGroup";
    case errc::not_a_grading: return "NotAGrading";
    case errc::not_cstar: return "NotCStar";
    case errc::no_unit: return "NoUnit";
    case errc::bad_involution: return "BadInvolution";
    case errc::degenerate_gram: return "DegenerateGram";
    case errc::bundle_mismatch: return "BundleMismatch";
    case errc::not_partial_homomorphism: return "NotPartialHomomorphism";
    case errc::images_dont_span: return "ImagesDontSpan";
    case errc::ideal_mismatch: return "IdealMismatch";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::oracle_not_applicable: return "OracleNotApplicable";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::validation_failed: return "ValidationFailed";
  }
  return "UnknownError";
}

}  // namespace fbl
