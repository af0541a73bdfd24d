#ifndef BGP_WIRE_HPP
#define BGP_WIRE_HPP

#include <map>
#include <variant>
#include <vector>

#include "bgp/ballot.hpp"
#include "bgp/core.hpp"
#include "bgp/crypto.hpp"

namespace bgp {

// Wire vocabulary. Byte layouts are in docs/wire.md; fixtures under
// tests/golden/ freeze them.

struct MsgPropose {
  CmdSequence prop;
  bool operator==(const MsgPropose&) const = default;
};

struct MsgBallot {
  BallotKind kind = BallotKind::kClassic;
  bool operator==(const MsgBallot&) const = default;
};

struct MsgFast {
  Ballot ballot;
  uint64_t view = 0;
};

struct MsgP1a {
  Ballot ballot;
  uint64_t view = 0;
};

// proof_ballot is the ballot at which `proven` gathered its certificate;
// the proofs map is that certificate's signature bundle.
struct MsgP1b {
  Ballot ballot;
  Ballot bal_a;
  CmdSequence proven;
  CmdSequence val_a;
  Ballot proof_ballot;
  std::map<ProcessId, VerifyProof> proofs;
};

struct MsgP2aClassic {
  Ballot ballot;
  uint64_t view = 0;
  CmdSequence value;
};

struct MsgP2aFast {
  CmdSequence value;
  bool operator==(const MsgP2aFast&) const = default;
};

struct MsgVerify {
  uint64_t view = 0;
  Ballot ballot;
  CmdSequence value;
  VerifyProof proof;
};

struct MsgP2b {
  Ballot ballot;
  CmdSequence value;
  std::map<ProcessId, VerifyProof> proofs;

  ProvenCert cert() const { return ProvenCert{ballot, value, proofs}; }
};

struct MsgP2bUniv {
  Ballot ballot;
  CmdSequence value;
};

struct MsgSuspicion {
  uint64_t view = 0;
  SuspicionProof proof;
};

struct MsgViewChange {
  uint64_t new_view = 0;
  std::map<ProcessId, SuspicionProof> suspicions;
  ViewChangeProof change_proof;
};

struct MsgLeader {
  uint64_t view = 0;
  std::map<ProcessId, ViewChangeProof> proofs;
};

struct MsgCheckpointAck {
  CommandId checkpoint_id;
  bool operator==(const MsgCheckpointAck&) const = default;
};

using ProtocolMessage =
    std::variant<MsgPropose, MsgBallot, MsgFast, MsgP1a, MsgP1b, MsgP2aClassic, MsgP2aFast,
                 MsgVerify, MsgP2b, MsgP2bUniv, MsgSuspicion, MsgViewChange, MsgLeader,
                 MsgCheckpointAck>;

std::vector<uint8_t> encode(const ProtocolMessage& m);

// Throws MalformedMessage on any malformed input; never crashes.
ProtocolMessage decode(const std::vector<uint8_t>& bytes);

const char* message_tag_name(const ProtocolMessage& m);

// Agreement-path messages are deferred while an acceptor waits out a
// checkpoint; view-change traffic and acks are not.
bool is_agreement_message(const ProtocolMessage& m);

}  // namespace bgp

#endif  // BGP_WIRE_HPP
