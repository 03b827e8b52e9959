#pragma once
#include <stdexcept>
#include <string>

namespace smooth {

// Base for all domain errors raised by the library. CLI maps these to exit 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct NotDifferentiable : Error { using Error::Error; };
struct OriginRunIncomplete : Error { using Error::Error; };
struct InconsistentTags : Error { using Error::Error; };
struct InsufficientWindow : Error { using Error::Error; };
struct InsufficientDepth : Error { using Error::Error; };
struct NotAlternating : Error { using Error::Error; };
struct OriginBlockIncomplete : Error { using Error::Error; };
struct TypeConflict : Error { using Error::Error; };

struct IndeterminateType : Error {
    int level;
    explicit IndeterminateType(int lvl)
        : Error("type indeterminate at level " + std::to_string(lvl)), level(lvl) {}
};

struct SpecTooShort : Error { using Error::Error; };
struct NoMatch : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct Undecidable : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

} // namespace smooth
