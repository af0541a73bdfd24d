#include "bgp/wire.hpp"

#include "bgp/encoding.hpp"

namespace bgp {

namespace {

enum Tag : uint8_t {
  kTagPropose = 1,
  kTagBallot = 2,
  kTagFast = 3,
  kTagP1a = 4,
  kTagP1b = 5,
  kTagP2aClassic = 6,
  kTagP2aFast = 7,
  kTagVerify = 8,
  kTagP2b = 9,
  kTagP2bUniv = 10,
  kTagSuspicion = 11,
  kTagViewChange = 12,
  kTagLeader = 13,
  kTagCheckpointAck = 14,
};

void write_digest(ByteWriter& w, const Digest& d) { w.raw(d.data(), d.size()); }

Digest read_digest(ByteReader& r) {
  Digest d;
  for (auto& byte : d) byte = r.u8();
  return d;
}

void write_verify_proof(ByteWriter& w, const VerifyProof& p) {
  w.u32(p.acceptor);
  write_ballot(w, p.ballot);
  write_digest(w, p.value_digest);
  w.bytes(p.sig);
}

VerifyProof read_verify_proof(ByteReader& r) {
  VerifyProof p;
  p.acceptor = r.u32();
  p.ballot = read_ballot(r);
  p.value_digest = read_digest(r);
  p.sig = r.bytes();
  return p;
}

void write_proof_map(ByteWriter& w, const std::map<ProcessId, VerifyProof>& proofs) {
  w.u32(static_cast<uint32_t>(proofs.size()));
  for (const auto& [pid, proof] : proofs) {
    w.u32(pid);
    write_verify_proof(w, proof);
  }
}

std::map<ProcessId, VerifyProof> read_proof_map(ByteReader& r) {
  uint32_t n = r.count(4 + 4 + 17 + 32 + 4);
  std::map<ProcessId, VerifyProof> out;
  for (uint32_t i = 0; i < n; ++i) {
    ProcessId pid = r.u32();
    VerifyProof p = read_verify_proof(r);
    if (!out.emplace(pid, std::move(p)).second) throw MalformedMessage("duplicate proof key");
  }
  return out;
}

void write_suspicion_proof(ByteWriter& w, const SuspicionProof& p) {
  w.u32(p.acceptor);
  w.u64(p.view);
  w.bytes(p.sig);
}

SuspicionProof read_suspicion_proof(ByteReader& r) {
  SuspicionProof p;
  p.acceptor = r.u32();
  p.view = r.u64();
  p.sig = r.bytes();
  return p;
}

void write_view_change_proof(ByteWriter& w, const ViewChangeProof& p) {
  w.u32(p.acceptor);
  w.u64(p.new_view);
  w.bytes(p.sig);
}

ViewChangeProof read_view_change_proof(ByteReader& r) {
  ViewChangeProof p;
  p.acceptor = r.u32();
  p.new_view = r.u64();
  p.sig = r.bytes();
  return p;
}

struct Encoder {
  ByteWriter w;

  void operator()(const MsgPropose& m) {
    w.u8(kTagPropose);
    write_sequence(w, m.prop);
  }
  void operator()(const MsgBallot& m) {
    w.u8(kTagBallot);
    w.u8(static_cast<uint8_t>(m.kind));
  }
  void operator()(const MsgFast& m) {
    w.u8(kTagFast);
    write_ballot(w, m.ballot);
    w.u64(m.view);
  }
  void operator()(const MsgP1a& m) {
    w.u8(kTagP1a);
    write_ballot(w, m.ballot);
    w.u64(m.view);
  }
  void operator()(const MsgP1b& m) {
    w.u8(kTagP1b);
    write_ballot(w, m.ballot);
    write_ballot(w, m.bal_a);
    write_sequence(w, m.proven);
    write_sequence(w, m.val_a);
    write_ballot(w, m.proof_ballot);
    write_proof_map(w, m.proofs);
  }
  void operator()(const MsgP2aClassic& m) {
    w.u8(kTagP2aClassic);
    write_ballot(w, m.ballot);
    w.u64(m.view);
    write_sequence(w, m.value);
  }
  void operator()(const MsgP2aFast& m) {
    w.u8(kTagP2aFast);
    write_sequence(w, m.value);
  }
  void operator()(const MsgVerify& m) {
    w.u8(kTagVerify);
    w.u64(m.view);
    write_ballot(w, m.ballot);
    write_sequence(w, m.value);
    write_verify_proof(w, m.proof);
  }
  void operator()(const MsgP2b& m) {
    w.u8(kTagP2b);
    write_ballot(w, m.ballot);
    write_sequence(w, m.value);
    write_proof_map(w, m.proofs);
  }
  void operator()(const MsgP2bUniv& m) {
    w.u8(kTagP2bUniv);
    write_ballot(w, m.ballot);
    write_sequence(w, m.value);
  }
  void operator()(const MsgSuspicion& m) {
    w.u8(kTagSuspicion);
    w.u64(m.view);
    write_suspicion_proof(w, m.proof);
  }
  void operator()(const MsgViewChange& m) {
    w.u8(kTagViewChange);
    w.u64(m.new_view);
    w.u32(static_cast<uint32_t>(m.suspicions.size()));
    for (const auto& [pid, proof] : m.suspicions) {
      w.u32(pid);
      write_suspicion_proof(w, proof);
    }
    write_view_change_proof(w, m.change_proof);
  }
  void operator()(const MsgLeader& m) {
    w.u8(kTagLeader);
    w.u64(m.view);
    w.u32(static_cast<uint32_t>(m.proofs.size()));
    for (const auto& [pid, proof] : m.proofs) {
      w.u32(pid);
      write_view_change_proof(w, proof);
    }
  }
  void operator()(const MsgCheckpointAck& m) {
    w.u8(kTagCheckpointAck);
    w.u32(m.checkpoint_id.proposer);
    w.u64(m.checkpoint_id.seqno);
  }
};

}  // namespace

std::vector<uint8_t> encode(const ProtocolMessage& m) {
  Encoder enc;
  std::visit(enc, m);
  return enc.w.take();
}

ProtocolMessage decode(const std::vector<uint8_t>& bytes) {
  ByteReader r(bytes);
  uint8_t tag = r.u8();
  ProtocolMessage out;
  switch (tag) {
    case kTagPropose:
      out = MsgPropose{read_sequence(r)};
      break;
    case kTagBallot: {
      uint8_t kind = r.u8();
      if (kind > 1) throw MalformedMessage("bad ballot kind");
      out = MsgBallot{static_cast<BallotKind>(kind)};
      break;
    }
    case kTagFast: {
      MsgFast m;
      m.ballot = read_ballot(r);
      m.view = r.u64();
      out = m;
      break;
    }
    case kTagP1a: {
      MsgP1a m;
      m.ballot = read_ballot(r);
      m.view = r.u64();
      out = m;
      break;
    }
    case kTagP1b: {
      MsgP1b m;
      m.ballot = read_ballot(r);
      m.bal_a = read_ballot(r);
      m.proven = read_sequence(r);
      m.val_a = read_sequence(r);
      m.proof_ballot = read_ballot(r);
      m.proofs = read_proof_map(r);
      out = m;
      break;
    }
    case kTagP2aClassic: {
      MsgP2aClassic m;
      m.ballot = read_ballot(r);
      m.view = r.u64();
      m.value = read_sequence(r);
      out = m;
      break;
    }
    case kTagP2aFast:
      out = MsgP2aFast{read_sequence(r)};
      break;
    case kTagVerify: {
      MsgVerify m;
      m.view = r.u64();
      m.ballot = read_ballot(r);
      m.value = read_sequence(r);
      m.proof = read_verify_proof(r);
      out = m;
      break;
    }
    case kTagP2b: {
      MsgP2b m;
      m.ballot = read_ballot(r);
      m.value = read_sequence(r);
      m.proofs = read_proof_map(r);
      out = m;
      break;
    }
    case kTagP2bUniv: {
      MsgP2bUniv m;
      m.ballot = read_ballot(r);
      m.value = read_sequence(r);
      out = m;
      break;
    }
    case kTagSuspicion: {
      MsgSuspicion m;
      m.view = r.u64();
      m.proof = read_suspicion_proof(r);
      out = m;
      break;
    }
    case kTagViewChange: {
      MsgViewChange m;
      m.new_view = r.u64();
      uint32_t n = r.count(4 + 4 + 8 + 4);
      for (uint32_t i = 0; i < n; ++i) {
        ProcessId pid = r.u32();
        SuspicionProof p = read_suspicion_proof(r);
        if (!m.suspicions.emplace(pid, std::move(p)).second) {
          throw MalformedMessage("duplicate suspicion key");
        }
      }
      m.change_proof = read_view_change_proof(r);
      out = m;
      break;
    }
    case kTagLeader: {
      MsgLeader m;
      m.view = r.u64();
      uint32_t n = r.count(4 + 4 + 8 + 4);
      for (uint32_t i = 0; i < n; ++i) {
        ProcessId pid = r.u32();
        ViewChangeProof p = read_view_change_proof(r);
        if (!m.proofs.emplace(pid, std::move(p)).second) {
          throw MalformedMessage("duplicate view-change key");
        }
      }
      out = m;
      break;
    }
    case kTagCheckpointAck: {
      MsgCheckpointAck m;
      m.checkpoint_id.proposer = r.u32();
      m.checkpoint_id.seqno = r.u64();
      out = m;
      break;
    }
    default:
      throw MalformedMessage("unknown tag");
  }
  r.expect_done();
  return out;
}

const char* message_tag_name(const ProtocolMessage& m) {
  struct Namer {
    const char* operator()(const MsgPropose&) { return "PROPOSE"; }
    const char* operator()(const MsgBallot&) { return "BALLOT"; }
    const char* operator()(const MsgFast&) { return "FAST"; }
    const char* operator()(const MsgP1a&) { return "P1A"; }
    const char* operator()(const MsgP1b&) { return "P1B"; }
    const char* operator()(const MsgP2aClassic&) { return "P2A_CLASSIC"; }
    const char* operator()(const MsgP2aFast&) { return "P2A_FAST"; }
    const char* operator()(const MsgVerify&) { return "VERIFY"; }
    const char* operator()(const MsgP2b&) { return "P2B"; }
    const char* operator()(const MsgP2bUniv&) { return "P2B_UNIV"; }
    const char* operator()(const MsgSuspicion&) { return "SUSPICION"; }
    const char* operator()(const MsgViewChange&) { return "VIEW_CHANGE"; }
    const char* operator()(const MsgLeader&) { return "LEADER"; }
    const char* operator()(const MsgCheckpointAck&) { return "CHECKPOINT_ACK"; }
  };
  return std::visit(Namer{}, m);
}

bool is_agreement_message(const ProtocolMessage& m) {
  struct Classifier {
    bool operator()(const MsgSuspicion&) { return false; }
    bool operator()(const MsgViewChange&) { return false; }
    bool operator()(const MsgLeader&) { return false; }
    bool operator()(const MsgCheckpointAck&) { return false; }
    template <typename T>
    bool operator()(const T&) {
      return true;
    }
  };
  return std::visit(Classifier{}, m);
}

}  // namespace bgp
