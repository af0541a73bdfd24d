#include "bgp/encoding.hpp"

#include <set>

namespace bgp {

void write_ballot(ByteWriter& w, const Ballot& b) {
  w.u64(b.view);
  w.u64(b.number);
  w.u8(static_cast<uint8_t>(b.kind));
}

Ballot read_ballot(ByteReader& r) {
  Ballot b;
  b.view = r.u64();
  b.number = r.u64();
  uint8_t kind = r.u8();
  if (kind > 1) throw MalformedMessage("bad ballot kind");
  b.kind = static_cast<BallotKind>(kind);
  return b;
}

namespace {

void write_command_statement(ByteWriter& w, const Command& c) {
  w.u32(c.id.proposer);
  w.u64(c.id.seqno);
  w.str(c.payload);
  w.u32(static_cast<uint32_t>(c.read_keys.size()));
  for (const auto& k : c.read_keys) w.str(k);
  w.u32(static_cast<uint32_t>(c.write_keys.size()));
  for (const auto& k : c.write_keys) w.str(k);
  w.u8(c.universal ? 1 : 0);
}

}  // namespace

void write_command(ByteWriter& w, const Command& c) {
  write_command_statement(w, c);
  w.bytes(c.proposer_sig);
}

Command read_command(ByteReader& r) {
  Command c;
  c.id.proposer = r.u32();
  c.id.seqno = r.u64();
  c.payload = r.str();
  uint32_t n_read = r.count(4);
  for (uint32_t i = 0; i < n_read; ++i) {
    if (!c.read_keys.insert(r.str()).second) throw MalformedMessage("duplicate read key");
  }
  uint32_t n_write = r.count(4);
  for (uint32_t i = 0; i < n_write; ++i) {
    if (!c.write_keys.insert(r.str()).second) throw MalformedMessage("duplicate write key");
  }
  uint8_t universal = r.u8();
  if (universal > 1) throw MalformedMessage("bad universal flag");
  c.universal = universal == 1;
  if (c.universal && (!c.read_keys.empty() || !c.write_keys.empty())) {
    throw MalformedMessage("universal command with key footprint");
  }
  c.proposer_sig = r.bytes();
  return c;
}

std::vector<uint8_t> command_statement(const Command& c) {
  ByteWriter w;
  write_command_statement(w, c);
  return w.take();
}

void write_sequence(ByteWriter& w, const CmdSequence& s) {
  w.u32(static_cast<uint32_t>(s.items.size()));
  for (const auto& c : s.items) write_command(w, c);
}

CmdSequence read_sequence(ByteReader& r) {
  uint32_t n = r.count(18);  // minimum encoded command size
  CmdSequence s;
  s.items.reserve(n);
  std::set<CommandId> seen;
  for (uint32_t i = 0; i < n; ++i) {
    Command c = read_command(r);
    if (!seen.insert(c.id).second) throw MalformedMessage("duplicate command id in sequence");
    s.items.push_back(std::move(c));
  }
  return s;
}

std::vector<uint8_t> encode_sequence(const CmdSequence& s) {
  ByteWriter w;
  write_sequence(w, s);
  return w.take();
}

}  // namespace bgp
