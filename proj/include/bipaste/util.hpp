#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bipaste {

// Outcome of an operation whose failure is data, not a bug: either a value or
// a human-readable reason.
template <typename T>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}

  static Result fail(std::string why) {
    Result r;
    r.error_ = std::move(why);
    return r;
  }

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& operator*() const& { return value(); }
  T& operator*() & { return value(); }
  const T* operator->() const { return &value(); }

  const T& value() const& {
    if (!value_) throw std::logic_error("Result::value on failed result: " + error_);
    return *value_;
  }
  T& value() & {
    if (!value_) throw std::logic_error("Result::value on failed result: " + error_);
    return *value_;
  }
  T take() && {
    if (!value_) throw std::logic_error("Result::take on failed result: " + error_);
    return std::move(*value_);
  }

  const std::string& error() const { return error_; }

 private:
  Result() = default;
  std::optional<T> value_;
  std::string error_;
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace bipaste
