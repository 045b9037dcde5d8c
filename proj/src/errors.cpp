#include "baxter/errors.hpp"

namespace baxter {

const char* err_name(Err e) {
    switch (e) {
        case Err::RootMissing: return "RootMissing";
        case Err::ParentAmbiguous: return "ParentAmbiguous";
        case Err::ParentMissing: return "ParentMissing";
        case Err::EmptyRowOrColumn: return "EmptyRowOrColumn";
        case Err::CellOutsideShape: return "CellOutsideShape";
        case Err::SizeOne: return "SizeOne";
        case Err::NotBaxter: return "NotBaxter";
        case Err::SyntaxError: return "SyntaxError";
        case Err::NotAPermutation: return "NotAPermutation";
        case Err::Overlap: return "Overlap";
        case Err::Gap: return "Gap";
        case Err::WrongTileCount: return "WrongTileCount";
        case Err::ForbiddenPattern: return "ForbiddenPattern";
        case Err::CrossJunction: return "CrossJunction";
        case Err::FlushJunction: return "FlushJunction";
        case Err::NotAFloorplan: return "NotAFloorplan";
        case Err::NonRectangularTile: return "NonRectangularTile";
        case Err::NotAPair: return "NotAPair";
        case Err::NotAlmostComplete: return "NotAlmostComplete";
        case Err::NotDyck: return "NotDyck";
        case Err::PointsOutsideShape: return "PointsOutsideShape";
        case Err::BijectionViolation: return "BijectionViolation";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::UnsupportedRoute: return "UnsupportedRoute";
        case Err::InvalidObject: return "InvalidObject";
        case Err::NotInDomain: return "NotInDomain";
    }
    return "Unknown";
}

} // namespace baxter
