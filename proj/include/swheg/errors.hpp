#pragma once

#include <stdexcept>
#include <string>

namespace swheg {

/// Process exit codes used by the CLI. Library errors map onto these so that
/// scripted callers can distinguish failure classes.
enum class ExitCode : int {
    ok = 0,
    config = 2,
    geometry = 3,
    rollout = 4,
    parse = 5,
};

class Error : public std::runtime_error {
  public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] ExitCode code() const noexcept { return code_; }

  private:
    ExitCode code_;
};

// ---- configuration / argument errors (exit 2) ------------------------------

class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& what) : Error(ExitCode::config, what) {}
};

class BadParams : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

class UnknownGait : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

class EmptyWindow : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

class BadInput : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

// ---- geometry errors (exit 3) ----------------------------------------------

class GeometryError : public Error {
  public:
    explicit GeometryError(const std::string& what) : Error(ExitCode::geometry, what) {}
};

/// Circle pair of the hinge constraint has no intersection in y < 0.
class NoSolution : public GeometryError {
  public:
    using GeometryError::GeometryError;
};

/// Rod length outside the configured stroke envelope.
class OutOfStroke : public GeometryError {
  public:
    using GeometryError::GeometryError;
};

/// Requested angle not reachable by any rod length in the stroke.
class OutOfRange : public GeometryError {
  public:
    using GeometryError::GeometryError;
};

/// Which arccos step of the spoke-chain evaluation failed.
enum class ChainStep { alpha1, alpha3, alpha5 };

[[nodiscard]] constexpr const char* to_string(ChainStep s) noexcept {
    switch (s) {
        case ChainStep::alpha1: return "alpha1";
        case ChainStep::alpha3: return "alpha3";
        case ChainStep::alpha5: return "alpha5";
    }
    return "?";
}

/// An arccos argument left [-1, 1]; `step()` names the first offending one.
class DomainError : public GeometryError {
  public:
    DomainError(ChainStep step, double argument, const std::string& what)
        : GeometryError(what), step_(step), argument_(argument) {}
    [[nodiscard]] ChainStep step() const noexcept { return step_; }
    [[nodiscard]] double argument() const noexcept { return argument_; }

  private:
    ChainStep step_;
    double argument_;
};

/// Target span lies outside what the stroke can produce; carries the
/// achievable range for reporting.
class Unreachable : public GeometryError {
  public:
    Unreachable(double span_min, double span_max, const std::string& what)
        : GeometryError(what), span_min_(span_min), span_max_(span_max) {}
    [[nodiscard]] double span_min() const noexcept { return span_min_; }
    [[nodiscard]] double span_max() const noexcept { return span_max_; }

  private:
    double span_min_;
    double span_max_;
};

// ---- rollout errors (exit 4) ------------------------------------------------

class RolloutError : public Error {
  public:
    explicit RolloutError(const std::string& what) : Error(ExitCode::rollout, what) {}
};

/// No contact-preserving advance within one wheel revolution. Reports the
/// last reached progress and wheel-center position.
class Stuck : public RolloutError {
  public:
    Stuck(double progress_mm, double center_x_mm, double center_y_mm, const std::string& what)
        : RolloutError(what), progress_mm_(progress_mm), cx_(center_x_mm), cy_(center_y_mm) {}
    [[nodiscard]] double progress_mm() const noexcept { return progress_mm_; }
    [[nodiscard]] double center_x_mm() const noexcept { return cx_; }
    [[nodiscard]] double center_y_mm() const noexcept { return cy_; }

  private:
    double progress_mm_;
    double cx_;
    double cy_;
};

class TooShort : public RolloutError {
  public:
    using RolloutError::RolloutError;
};

class AllStuck : public RolloutError {
  public:
    using RolloutError::RolloutError;
};

// ---- telemetry parse errors (exit 5) ----------------------------------------

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ExitCode::parse, what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class NonMonotonicTime : public ParseError {
  public:
    using ParseError::ParseError;
};

}  // namespace swheg
