#ifndef BGP_ROLES_HPP
#define BGP_ROLES_HPP

#include <string>
#include <vector>

#include "bgp/wire.hpp"

namespace bgp {

// A message produced by a role handler, addressed by role group or pid.
// The simulator resolves groups and delivers.
struct Outbound {
  enum class Target { kProcess, kAcceptors, kProposers, kLearners };
  Target target = Target::kProcess;
  ProcessId pid = 0;
  ProtocolMessage msg;
};

inline Outbound to_process(ProcessId pid, ProtocolMessage m) {
  return Outbound{Outbound::Target::kProcess, pid, std::move(m)};
}
inline Outbound to_acceptors(ProtocolMessage m) {
  return Outbound{Outbound::Target::kAcceptors, 0, std::move(m)};
}
inline Outbound to_proposers(ProtocolMessage m) {
  return Outbound{Outbound::Target::kProposers, 0, std::move(m)};
}
inline Outbound to_learners(ProtocolMessage m) {
  return Outbound{Outbound::Target::kLearners, 0, std::move(m)};
}

// Structured trace record emitted at a decision point; the simulator drains
// these into the run trace and stats.
struct TraceNote {
  std::string kind;
  std::string detail;
};

// Process layout: acceptor replicas first, then proposers, then learners.
struct RoleParams {
  uint32_t n_acceptors = 4;
  uint32_t f = 1;
  uint32_t n_proposers = 1;
  uint32_t n_learners = 1;
  // Leadership adoption threshold: N-f per the view-change text, f+1 per the
  // pseudocode; selectable, default N-f.
  bool leader_cert_f_plus_one = false;

  size_t quorum() const { return n_acceptors - f; }
  size_t learner_quorum() const {
    return n_learners > f ? n_learners - f : 1;
  }

  bool is_acceptor(ProcessId pid) const { return pid < n_acceptors; }
  bool is_proposer(ProcessId pid) const {
    return pid >= n_acceptors && pid < n_acceptors + n_proposers;
  }
  bool is_learner(ProcessId pid) const {
    return pid >= n_acceptors + n_proposers &&
           pid < n_acceptors + n_proposers + n_learners;
  }
  uint32_t total_processes() const { return n_acceptors + n_proposers + n_learners; }
  ProcessId leader_of(uint64_t view) const { return static_cast<ProcessId>(view % n_acceptors); }
};

}  // namespace bgp

#endif  // BGP_ROLES_HPP
