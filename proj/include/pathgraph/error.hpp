#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pathgraph {

enum class ErrorCode {
  // bad input
  UnsupportedN,
  OutOfRange,
  NotPermutation,
  CrossingEdges,
  MalformedGraph,
  MalformedLabels,
  NotAnEdge,
  DiameterTooExpensive,
  TooLarge,
  Io,
  // not a path graph
  NotAPathGraphOrder,
  BoundaryCountMismatch,
  NotACycle,
  Disconnected,
  LevelOutOfRange,
  BoundarySetMismatch,
  EmptyLowerNeighborhood,
  ArcStructureInvalid,
  NoLeafFound,
  AmbiguousCompletion,
  NoCompletion,
  InconsistentOutput,
  // verification
  NoDihedralMatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the reconstruction pipeline; carries the name of the stage that
/// rejected the input.
class ReconstructError : public Error {
 public:
  ReconstructError(ErrorCode code, std::string stage, const std::string& what)
      : Error(code, stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Raised when recovered labels cannot be matched to ground truth. The
/// witness is the abstract vertex where the best candidate symmetry failed.
class VerificationError : public Error {
 public:
  VerificationError(ErrorCode code, std::uint32_t witness, const std::string& what)
      : Error(code, what), witness_(witness) {}

  std::uint32_t witness() const noexcept { return witness_; }

 private:
  std::uint32_t witness_;
};

}  // namespace pathgraph
