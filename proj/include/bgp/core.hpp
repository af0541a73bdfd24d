#ifndef BGP_CORE_HPP
#define BGP_CORE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bgp {

using ProcessId = uint32_t;
using Signature = std::vector<uint8_t>;

// Reserved payload prefix for the checkpoint command C*. Scenario payloads may
// not start with a NUL byte, so ordinary commands can never collide with it.
inline const std::string kCheckpointPayload = std::string("\0C*", 3);

struct CommandId {
  ProcessId proposer = 0;
  uint64_t seqno = 0;

  auto operator<=>(const CommandId&) const = default;
};

struct Command {
  CommandId id;
  std::string payload;  // opaque bytes
  std::set<std::string> read_keys;
  std::set<std::string> write_keys;
  bool universal = false;
  Signature proposer_sig;  // over the command statement, see crypto

  bool is_checkpoint() const { return payload == kCheckpointPayload; }

  bool operator==(const Command&) const = default;
};

struct CmdSequence {
  std::vector<Command> items;

  CmdSequence() = default;
  explicit CmdSequence(std::vector<Command> cmds) : items(std::move(cmds)) {}

  bool empty() const { return items.empty(); }
  size_t size() const { return items.size(); }

  bool contains(const CommandId& id) const {
    for (const auto& c : items)
      if (c.id == id) return true;
    return false;
  }

  const Command& back() const { return items.back(); }
  const Command& front() const { return items.front(); }

  std::set<CommandId> ids() const {
    std::set<CommandId> out;
    for (const auto& c : items) out.insert(c.id);
    return out;
  }

  bool operator==(const CmdSequence&) const = default;
};

// Interference between commands, either derived from read/write key
// footprints or given as an explicit symmetric relation on command ids.
class CommutativityOracle {
 public:
  enum class Mode { kKeyset, kExplicit };

  CommutativityOracle() = default;
  explicit CommutativityOracle(Mode mode) : mode_(mode) {}

  Mode mode() const { return mode_; }

  void add_interference(const CommandId& a, const CommandId& b) {
    interfering_.insert(normalized(a, b));
  }

  bool commute(const Command& a, const Command& b) const;
  bool interferes(const Command& a, const Command& b) const { return !commute(a, b); }

 private:
  static std::pair<CommandId, CommandId> normalized(const CommandId& a, const CommandId& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  Mode mode_ = Mode::kKeyset;
  std::set<std::pair<CommandId, CommandId>> interfering_;
};

// Two proven sequences that are neither equivalent nor extensions of one
// another: certificate forgery or a protocol bug, surfaced to the oracle.
class IncomparableProvenSequences : public std::runtime_error {
 public:
  IncomparableProvenSequences() : std::runtime_error("incomparable proven sequences") {}
};

// Sequence algebra. All functions are pure; sequences are values.
bool equivalent(const CmdSequence& s1, const CmdSequence& s2, const CommutativityOracle& o);

// Unique representative of s's equivalence class: stable topological sort of
// the interference DAG induced by s's order, ties broken by ascending id.
CmdSequence canonicalize(const CmdSequence& s, const CommutativityOracle& o);

// x ⊑ y: x's ids are a subset of y's and y restricted to x's ids is ~ x.
bool eq_prefix(const CmdSequence& x, const CmdSequence& y, const CommutativityOracle& o);

// The • operator: s followed by t, dropping from t any id already in s.
CmdSequence concat(const CmdSequence& s, const CmdSequence& t);

// Appends to old each command of new_seq not already contained, in order.
CmdSequence merge_sequences(const CmdSequence& old_seq, const CmdSequence& new_seq);

// Longest of a quorum's proven sequences; equal-length candidates must be
// equivalent and yield the canonical representative. Inputs must be mutually
// equivalent-or-extension; otherwise throws IncomparableProvenSequences.
CmdSequence largest_seq(const std::map<ProcessId, CmdSequence>& proven_by_acceptor,
                        const CommutativityOracle& o);

// Keeps the first occurrence of each command id.
CmdSequence remove_duplicates(const CmdSequence& s);

bool is_universally_commutative(const CmdSequence& s);

// Commands of s whose ids are not in t, in s's order (val_a \ proven).
CmdSequence subtract(const CmdSequence& s, const CmdSequence& t);

}  // namespace bgp

#endif  // BGP_CORE_HPP
