#pragma once

#include <stdexcept>
#include <string>

namespace shedlab {

// Every failure raised by the library derives from Error, so callers that
// only care about "did it work" can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };
class BadParameter : public Error { public: using Error::Error; };
class InvalidPartition : public Error { public: using Error::Error; };
class NotVertexDecomposable : public Error { public: using Error::Error; };
class NotVeryWellCovered : public Error { public: using Error::Error; };
class IOError : public Error { public: using Error::Error; };

class BadGraph6 : public Error {
public:
    explicit BadGraph6(const std::string& what, long line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

} // namespace shedlab
