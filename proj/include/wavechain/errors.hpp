#pragma once

#include <stdexcept>
#include <string>

namespace wavechain {

// Base class for all library errors. CLI maps subtrees to exit codes:
// ConfigError -> 2, IoError -> 3, DivergedError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

// corpus
struct InvalidFormants : ConfigError {
  using ConfigError::ConfigError;
};
struct InvalidCutoff : ConfigError {
  using ConfigError::ConfigError;
};
struct EmptyCorpus : ConfigError {
  using ConfigError::ConfigError;
};
struct SampleRateMismatch : IoError {
  using IoError::IoError;
};
struct ChannelMismatch : IoError {
  using IoError::IoError;
};

// tensor
struct ShapeError : Error {
  using Error::Error;
};
struct NotScalar : Error {
  using Error::Error;
};
struct GraphConsumed : Error {
  using Error::Error;
};

// gan / lineage
struct DivergedError : Error {
  using Error::Error;
};
struct ResumeError : IoError {
  using IoError::IoError;
};

// acoustics
struct TooShort : Error {
  using Error::Error;
};
struct NoBurstDetected : Error {
  using Error::Error;
};
struct NoVoicingDetected : Error {
  using Error::Error;
};
struct MomentsUndefined : Error {
  using Error::Error;
};

// stats
struct LevelError : Error {
  using Error::Error;
};
struct SingularDesign : Error {
  using Error::Error;
};
struct NotConverged : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct EmptyData : Error {
  using Error::Error;
};
struct TooFewPoints : Error {
  using Error::Error;
};
struct DegenerateBandwidth : Error {
  using Error::Error;
};

}  // namespace wavechain
