#ifndef HADKIT_ERRORS_HPP
#define HADKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace had {

// Error categories. Values double as CLI exit codes where applicable
// (0 success, 2 config, 3 data, 4 metric-undefined).
enum class ErrorKind {
    config = 2,
    data = 3,
    metric_undefined = 4,
    numeric = 5,
    io = 6,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // Exit code the CLI maps this error to.
    int exit_code() const {
        switch (kind_) {
            case ErrorKind::config: return 2;
            case ErrorKind::metric_undefined: return 4;
            default: return 3;
        }
    }

  private:
    ErrorKind kind_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(ErrorKind::config, msg) {}
};

struct DataError : Error {
    explicit DataError(const std::string& msg) : Error(ErrorKind::data, msg) {}
};

struct MetricUndefinedError : Error {
    explicit MetricUndefinedError(const std::string& msg) : Error(ErrorKind::metric_undefined, msg) {}
};

// Cholesky hit a non-positive pivot; `pivot` is the failing diagonal index.
struct FactorizationError : Error {
    FactorizationError(int pivot_index, const std::string& msg)
        : Error(ErrorKind::numeric, msg), pivot(pivot_index) {}
    int pivot;
};

struct SingularSolveError : Error {
    explicit SingularSolveError(const std::string& msg) : Error(ErrorKind::numeric, msg) {}
};

// A Woodbury update whose denominator/inner system is too close to singular.
struct UpdateInstabilityError : Error {
    explicit UpdateInstabilityError(const std::string& msg) : Error(ErrorKind::numeric, msg) {}
};

// Malformed or truncated file. `offset` is the byte position of the problem.
struct FormatError : Error {
    FormatError(std::string file_path, std::size_t byte_offset, const std::string& msg)
        : Error(ErrorKind::data, msg + " (file '" + file_path + "', offset " + std::to_string(byte_offset) + ")"),
          path(std::move(file_path)),
          offset(byte_offset) {}
    std::string path;
    std::size_t offset;
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(ErrorKind::io, msg) {}
};

}  // namespace had

#endif
