#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The lnprob Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace lnprob {

/// Root of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Conditioning on an event the current distribution assigns probability 0.
class ImpossibleEvent : public Error
{
public:
  using Error::Error;
};

/// Arguments outside an operation's domain.
class InvalidArgs : public Error
{
public:
  using Error::Error;
};

/// KL divergence requested for a posterior that is not absolutely continuous
/// with respect to the prior.
class SupportViolation : public Error
{
public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error
{
public:
  using Error::Error;
};

/// Well-formed input that violates a data invariant.
class ValidationError : public Error
{
public:
  using Error::Error;
};

/// Source and destination are disconnected at the requested amount.
class NoPath : public Error
{
public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error
{
public:
  using Error::Error;
};

/// Every candidate path has been excluded.
class Exhausted : public Error
{
public:
  using Error::Error;
};

/// A payment session could not start: no usable candidate path exists.
class NoCandidatePaths : public Error
{
public:
  using Error::Error;
};

/// Bad experiment configuration. `field` names the offending config path.
class ConfigError : public Error
{
public:
  ConfigError(std::string field, std::string const &message)
    : Error(field + ": " + message)
    , field_(std::move(field))
  {}

  std::string const &field() const noexcept
  {
    return field_;
  }

private:
  std::string field_;
};

/// Internal consistency check failed.
class InvariantViolation : public Error
{
public:
  using Error::Error;
};

}  // namespace lnprob
