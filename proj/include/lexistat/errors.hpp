#ifndef LEXISTAT_ERRORS_HPP
#define LEXISTAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexistat {

/// Malformed input text (invalid UTF-8) at a known byte offset.
class TokenizeError : public std::runtime_error {
  public:
    TokenizeError(const std::string& message, std::size_t byte_offset)
        : std::runtime_error(message + " at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

  private:
    std::size_t byte_offset_;
};

/// Malformed serialized file; line is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& path, std::size_t line, const std::string& message)
        : std::runtime_error(path + (line > 0 ? ":" + std::to_string(line) : "") + ": " + message),
          path_(path),
          line_(line) {}

    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }

  private:
    std::string path_;
    std::size_t line_;
};

/// Filesystem-level failure with the offending path in the message.
class IoError : public std::runtime_error {
  public:
    IoError(const std::string& path, const std::string& message)
        : std::runtime_error(path + ": " + message) {}
};

}  // namespace lexistat

#endif
