#ifndef THC_ERRORS_HPP
#define THC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IncompatibleTiles : Error { using Error::Error; };
struct ParallelEdge : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct TooFewTiles : Error { using Error::Error; };
struct NotCyclicallyCompatible : Error { using Error::Error; };
struct InvalidTile : Error { using Error::Error; };
struct InvalidK : Error { using Error::Error; };
struct InvalidQuery : Error { using Error::Error; };
struct NotInFamily : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct GraphTooLarge : Error { using Error::Error; };
struct NotAHamiltonianCycle : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

}  // namespace thc

#endif
