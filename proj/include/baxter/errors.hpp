#pragma once

#include <stdexcept>
#include <string>

namespace baxter {

// Every contract violation in the library throws BaxterError with one of
// these codes. Codes mirror the error names used throughout the docs.
enum class Err {
    // tableaux
    RootMissing,
    ParentAmbiguous,
    ParentMissing,
    EmptyRowOrColumn,
    CellOutsideShape,
    SizeOne,
    NotBaxter,
    // patterns / permutations
    SyntaxError,
    NotAPermutation,
    // floorplans
    Overlap,
    Gap,
    WrongTileCount,
    ForbiddenPattern,
    CrossJunction,
    FlushJunction,
    NotAFloorplan,
    NonRectangularTile,
    // lattice paths
    NotAPair,
    NotAlmostComplete,
    NotDyck,
    PointsOutsideShape,
    BijectionViolation,
    // census / cli
    PreconditionViolated,
    UnsupportedRoute,
    InvalidObject,
    NotInDomain,
};

const char* err_name(Err e);

class BaxterError : public std::runtime_error {
public:
    BaxterError(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
    throw BaxterError(code, what);
}

inline void require(bool ok, Err code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace baxter
