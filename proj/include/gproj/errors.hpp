#ifndef GPROJ_ERRORS_HPP_
#define GPROJ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gproj {

  //! Raised for malformed or inadmissible user input. The message names the
  //! offending relation, arrow, or path.
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Raised when a computed structure violates a property that holds for
  //! every monomial algebra (Hasse quivers of type A, unique co-elementary
  //! factorizations, ...). Seeing one means the implementation is wrong.
  class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace gproj

#endif  // GPROJ_ERRORS_HPP_
