#ifndef KFRAC_ERROR_HPP
#define KFRAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kfrac {

enum class ErrorCode {
    InvalidArgument,
    Domain,
    Parse,
    PrecisionExhausted,
    Limit,
    Io,
};

// Every failure raised by the library carries a code so the C layer can map
// it onto a status value without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace kfrac

#endif  // KFRAC_ERROR_HPP
