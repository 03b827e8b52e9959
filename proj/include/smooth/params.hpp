#pragma once
#include "smooth/errors.hpp"

namespace smooth {

// Odd two-letter run alphabet {alpha, beta}, alpha < beta. The classical
// case is {1,3}; p and q drive the generalized substitution tables.
struct AlphabetParams {
    int alpha = 1;
    int beta = 3;

    void validate() const {
        if (alpha <= 0 || beta <= 0 || alpha % 2 == 0 || beta % 2 == 0 || alpha >= beta)
            throw ParseError("alphabet must be two odd integers alpha < beta");
    }
    int p() const { return (alpha - 1) / 2; }
    int q() const { return (beta - 1) / 2; }
    bool classic() const { return alpha == 1 && beta == 3; }
};

} // namespace smooth
