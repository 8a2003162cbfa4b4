#ifndef BH_ERRORS_HPP_
#define BH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bh {

  // Every error raised by the library carries a stable machine-readable kind
  // ("NotDehnPresentation", "BudgetExceeded", ...) alongside the message.
  class Error : public std::runtime_error {
   public:
    Error(std::string kind, std::string const& message)
        : std::runtime_error(message), _kind(std::move(kind)) {}

    [[nodiscard]] std::string const& kind() const noexcept {
      return _kind;
    }

    // Parse and I/O failures are reported differently by the CLI than
    // failures of the mathematics.
    [[nodiscard]] virtual bool is_input_error() const noexcept {
      return false;
    }

   private:
    std::string _kind;
  };

  class InputError : public Error {
   public:
    using Error::Error;
    [[nodiscard]] bool is_input_error() const noexcept override {
      return true;
    }
  };

#define BH_DEFINE_ERROR(Name, Base)                         \
  class Name : public Base {                                \
   public:                                                  \
    explicit Name(std::string const& message)               \
        : Base(#Name, message) {}                           \
  };

  BH_DEFINE_ERROR(ParseError, InputError)
  BH_DEFINE_ERROR(IoError, InputError)
  BH_DEFINE_ERROR(InvalidParameters, Error)
  BH_DEFINE_ERROR(EmptyAfterReduction, Error)
  BH_DEFINE_ERROR(NotDehnPresentation, Error)
  BH_DEFINE_ERROR(HorizonTooSmall, Error)
  BH_DEFINE_ERROR(UnknownFormat, Error)
  BH_DEFINE_ERROR(AlphabetMismatch, Error)
  BH_DEFINE_ERROR(StateExplosion, Error)
  BH_DEFINE_ERROR(NotSynchronous, Error)
  BH_DEFINE_ERROR(NotInvertible, Error)
  BH_DEFINE_ERROR(BudgetExceeded, Error)
  BH_DEFINE_ERROR(DepthInsufficient, Error)
  BH_DEFINE_ERROR(NotInjective, Error)

#undef BH_DEFINE_ERROR

}  // namespace bh

#endif  // BH_ERRORS_HPP_
