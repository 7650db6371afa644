#ifndef INTERDICT_ERRORS_HPP
#define INTERDICT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace interdict {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedRotation : Error {
    using Error::Error;
};
struct NotPlanarEmbedding : Error {
    using Error::Error;
};
struct UndirectedInput : Error {
    using Error::Error;
};
struct DirectedInput : Error {
    using Error::Error;
};
struct TerminalMissing : Error {
    using Error::Error;
};
struct TooLargeForOracle : Error {
    using Error::Error;
};
struct NoPerfectMatching : Error {
    using Error::Error;
};
struct InvalidDecomposition : Error {
    using Error::Error;
};
struct StateExplosion : Error {
    using Error::Error;
};
struct DegenerateLayout : Error {
    using Error::Error;
};
struct WalkNotFound : Error {
    using Error::Error;
};
struct EmbeddingMissing : Error {
    using Error::Error;
};
struct OddVertexCount : Error {
    using Error::Error;
};

}  // namespace interdict

#endif
