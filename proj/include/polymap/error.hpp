// Error types shared across the library. Every failure carries a stable
// machine-readable name plus a human message; the CLI maps names to exit codes.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polymap {

class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

private:
  std::string name_;
};

// Map construction / validation
struct NotInvolutionError : Error {
  explicit NotInvolutionError(const std::string& m) : Error("NotInvolution", m) {}
};
struct NotPermutationError : Error {
  explicit NotPermutationError(const std::string& m) : Error("NotPermutation", m) {}
};
struct DisconnectedError : Error {
  explicit DisconnectedError(const std::string& m) : Error("Disconnected", m) {}
};
struct SameFaceError : Error {
  explicit SameFaceError(const std::string& m) : Error("SameFace", m) {}
};
struct BadIndexError : Error {
  explicit BadIndexError(const std::string& m) : Error("BadIndex", m) {}
};
struct ComplexError : Error {
  explicit ComplexError(const std::string& m) : Error("ComplexError", m) {}
};

// Patch operations
struct LengthMismatchError : Error {
  explicit LengthMismatchError(const std::string& m) : Error("LengthMismatch", m) {}
};
struct FitViolationError : Error {
  FitViolationError(int index, const std::string& m)
      : Error("FitViolation", m + " (index " + std::to_string(index) + ")"), index(index) {}
  int index;
};
struct ResultNotRPatchError : Error {
  explicit ResultNotRPatchError(const std::string& m) : Error("ResultNotRPatch", m) {}
};
struct NotPatchError : Error {
  explicit NotPatchError(const std::string& m) : Error("NotPatch", m) {}
};

// Expansion patches
struct I0ConditionError : Error {
  explicit I0ConditionError(const std::string& m) : Error("I0Condition", m) {}
};
struct SelfFitAlongIError : Error {
  SelfFitAlongIError(int index, const std::string& m)
      : Error("SelfFitAlongI", m + " (index " + std::to_string(index) + ")"), index(index) {}
  int index;
};
struct OsNotOneError : Error {
  explicit OsNotOneError(const std::string& m) : Error("OsNotOne", m) {}
};
struct OuterTupleNotSelfFittingError : Error {
  OuterTupleNotSelfFittingError(int index, const std::string& m)
      : Error("OuterTupleNotSelfFitting", m + " (index " + std::to_string(index) + ")"),
        index(index) {}
  int index;
};
struct KTooSmallError : Error {
  explicit KTooSmallError(const std::string& m) : Error("KTooSmall", m) {}
};

// Growth rewrites
struct MarkerInvalidError : Error {
  explicit MarkerInvalidError(const std::string& m) : Error("MarkerInvalid", m) {}
};
struct NotFourPatchError : Error {
  explicit NotFourPatchError(const std::string& m) : Error("NotFourPatch", m) {}
};

// Catalog
struct UnknownNameError : Error {
  explicit UnknownNameError(const std::string& m) : Error("UnknownName", m) {}
};
struct BadParamsError : Error {
  explicit BadParamsError(const std::string& m) : Error("BadParams", m) {}
};

// Pipeline
struct BadChiError : Error {
  explicit BadChiError(const std::string& m) : Error("BadChi", m) {}
};
struct NotSelfFittingError : Error {
  explicit NotSelfFittingError(const std::string& m) : Error("NotSelfFitting", m) {}
};
struct PatchShapeMismatchError : Error {
  explicit PatchShapeMismatchError(const std::string& m) : Error("PatchShapeMismatch", m) {}
};
struct GlueConflictError : Error {
  explicit GlueConflictError(const std::string& m) : Error("GlueConflict", m) {}
};
struct PolyhedralityFailedError : Error {
  explicit PolyhedralityFailedError(const std::string& m) : Error("PolyhedralityFailed", m) {}
};
struct MissingPF37Error : Error {
  explicit MissingPF37Error(const std::string& m) : Error("MissingPF37", m) {}
};

// I/O
struct SyntaxError : Error {
  SyntaxError(int line, const std::string& m)
      : Error("SyntaxError", "line " + std::to_string(line) + ": " + m), line(line) {}
  int line;
};
struct ValidationError : Error {
  ValidationError(const std::string& inner, const std::string& m)
      : Error("ValidationError", inner + ": " + m), inner_name(inner) {}
  std::string inner_name;
};

}  // namespace polymap
