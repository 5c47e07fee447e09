#ifndef LEXFST_ENCODE_HPP
#define LEXFST_ENCODE_HPP

#include "lexfst/fst.hpp"

namespace lexfst {

/// Single-tape image of a two-tape automaton: accepts exactly the strings
/// enc(x)·#·enc(y) for (x,y) in the relation. Output symbols emitted while
/// reading x are buffered and replayed after the separator, so the
/// construction is possible exactly when the trimmed machine has no cycle
/// that emits output (otherwise pending output is unbounded and the encoded
/// language need not be regular at all).
struct EncodedAutomaton {
    Nfa nfa;
    SymbolId separator;                // id of "#" in nfa.alphabet
    std::vector<SymbolId> input_map;   // source input symbol -> nfa symbol
    std::vector<SymbolId> output_map;  // source output symbol -> nfa symbol

    /// The single-tape string a pair (x, y) encodes to.
    std::vector<SymbolId> encode_pair(const Word& x, const Word& y) const;
};

/// Throws ValidationError if the machine has input-ε transitions or an
/// output-emitting cycle survives trimming. When the input and output
/// alphabets overlap, symbols are renamed with "in:"/"out:" prefixes.
EncodedAutomaton encode_single_tape(const TwoTapeAutomaton& n);

} // namespace lexfst

#endif
