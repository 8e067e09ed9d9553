#pragma once

#include <stdexcept>
#include <string>

namespace strkit {

// Error classes map onto process exit codes: usage/schema problems exit 2,
// everything else exits 1.
enum class ErrorCode {
  usage,           // bad flags, bad subcommand
  malformed_json,  // input is not valid JSON at all
  schema,          // valid JSON, wrong structure (path-qualified message)
  invariant,       // structurally fine, violates a domain invariant
  runtime,         // anything else (IO failures, bad state)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_schema_class() const noexcept {
    return code_ == ErrorCode::usage || code_ == ErrorCode::malformed_json ||
           code_ == ErrorCode::schema || code_ == ErrorCode::invariant;
  }

 private:
  ErrorCode code_;
};

inline Error usage_error(std::string msg) { return Error(ErrorCode::usage, std::move(msg)); }
inline Error schema_error(std::string msg) { return Error(ErrorCode::schema, std::move(msg)); }
inline Error invariant_error(std::string msg) { return Error(ErrorCode::invariant, std::move(msg)); }
inline Error runtime_error(std::string msg) { return Error(ErrorCode::runtime, std::move(msg)); }

}  // namespace strkit
