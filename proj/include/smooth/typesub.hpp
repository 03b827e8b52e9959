#pragma once
#include <string>

#include "smooth/recode.hpp"

namespace smooth {

// Eventually periodic (or merely finite) bit sequence tau. Grammar:
// "BITS", "BITS(BITS)" or "(BITS)", e.g. "0001(1)", "(01)", "0001".
struct TypeSpec {
    std::string pre;
    std::string period;

    static TypeSpec parse(const std::string& text);
    std::string str() const;

    // Number of bits actually determined (LLONG_MAX when periodic).
    long long known_bits() const;
    int bit(long long i) const; // throws SpecTooShort past a finite spec
    TypeSpec shifted() const;   // drops bit 0
    TypeSpec shifted(int k) const;
};

enum class TypeGuess { zero, one, indeterminate };

// Type of a recoded window: decided by its multi-letter elementary blocks
// (blocks starting with A or D belong to the type-0 family, B or C to
// type 1). Single-letter blocks are uninformative.
TypeGuess type_of(const RecWord& y, const AlphabetParams& params = {});

// Bits (type(d^k y))_{k<depth}; throws IndeterminateType with the level.
std::string types_prefix(RecWord y, int depth, const AlphabetParams& params = {});

// Image of one letter under phi_t, from the (p,q) tables.
std::string phi_image(int t, char letter, const AlphabetParams& params = {});

// Pointed substitution: the image block of y_0 starts at index 0.
RecWord phi_apply(int t, const RecWord& y, const AlphabetParams& params = {});

// phi_{bits[0]} o ... o phi_{bits[L-1]} (seed).
RecWord compose_phi(const std::string& bits, const RecWord& seed, const AlphabetParams& params = {});

// The unique i in [0, beta^L) with y = S^i compose_phi(types_prefix(y,L), d^L y)
// on the common trusted region.
long long reconstruct_shift(const RecWord& y, int L, const AlphabetParams& params = {});

// The level-0 word w_n^0 of the canonical construction: seed D at level n,
// extended per tau on the way down (type 1: C D C pointed at the middle;
// type 0: D CD for odd levels, DC D for even ones).
RecWord canonical_element(const TypeSpec& tau, int n, const AlphabetParams& params = {});

} // namespace smooth
