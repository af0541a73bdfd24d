#ifndef BGP_ENCODING_HPP
#define BGP_ENCODING_HPP

#include "bgp/ballot.hpp"
#include "bgp/bytes.hpp"
#include "bgp/core.hpp"

namespace bgp {

// Canonical byte encodings shared by the wire codec and signature statements.
// Layouts are documented in docs/wire.md and frozen by golden fixtures.

void write_ballot(ByteWriter& w, const Ballot& b);
Ballot read_ballot(ByteReader& r);

// Full command: statement fields followed by the proposer signature.
void write_command(ByteWriter& w, const Command& c);
Command read_command(ByteReader& r);

// The bytes the proposer signs: every field except proposer_sig.
std::vector<uint8_t> command_statement(const Command& c);

void write_sequence(ByteWriter& w, const CmdSequence& s);
// Rejects duplicate command ids.
CmdSequence read_sequence(ByteReader& r);

std::vector<uint8_t> encode_sequence(const CmdSequence& s);

}  // namespace bgp

#endif  // BGP_ENCODING_HPP
