#ifndef BGP_CRYPTO_HPP
#define BGP_CRYPTO_HPP

#include <array>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "bgp/ballot.hpp"
#include "bgp/core.hpp"
#include "bgp/encoding.hpp"

namespace bgp {

using Digest = std::array<uint8_t, 32>;

Digest sha256(const uint8_t* data, size_t n);
Digest sha256(const std::vector<uint8_t>& b);

// Digest of the canonical form of a sequence, so proofs over equivalent
// sequences collate under the same index.
Digest sequence_digest(const CmdSequence& s, const CommutativityOracle& o);

// An acceptor's signed commitment to (ballot, sequence).
struct VerifyProof {
  ProcessId acceptor = 0;
  Ballot ballot;
  Digest value_digest{};
  Signature sig;
};

// N-f bundle proving quorum acceptance of `value` at `ballot`.
struct ProvenCert {
  Ballot ballot;
  CmdSequence value;
  std::map<ProcessId, VerifyProof> proofs;
};

struct SuspicionProof {
  ProcessId acceptor = 0;
  uint64_t view = 0;
  Signature sig;
};

struct ViewChangeProof {
  ProcessId acceptor = 0;
  uint64_t new_view = 0;
  Signature sig;
};

struct LeaderCert {
  uint64_t view = 0;
  std::map<ProcessId, ViewChangeProof> proofs;
};

// Statement encodings, fixed layouts per docs/wire.md.
std::vector<uint8_t> verify_statement(const Ballot& ballot, const Digest& value_digest);
std::vector<uint8_t> suspicion_statement(uint64_t view);
std::vector<uint8_t> view_change_statement(uint64_t new_view);

// Pluggable, publicly verifiable signatures. Keys are provisioned per
// process from a run seed; the interface exposes keygen/sign/verify only.
class SignatureScheme {
 public:
  virtual ~SignatureScheme() = default;
  virtual std::string name() const = 0;
  virtual void provision(uint32_t n_processes, uint64_t run_seed) = 0;
  virtual Signature sign(ProcessId signer, const std::vector<uint8_t>& msg) const = 0;
  virtual bool verify(ProcessId claimed, const std::vector<uint8_t>& msg,
                      const Signature& sig) const = 0;
};

// Deterministic provider: HMAC-SHA256 with a registry of per-process keys
// held by the simulator; verify recomputes. Byzantine processes never see
// other processes' keys (they only get a Signer for their own id).
std::unique_ptr<SignatureScheme> make_hmac_scheme();

// Ed25519 (libsodium) for integration realism; signing is deterministic.
std::unique_ptr<SignatureScheme> make_ed25519_scheme();

std::unique_ptr<SignatureScheme> make_scheme(const std::string& name);

// Signing capability restricted to one process id.
class Signer {
 public:
  Signer() = default;
  Signer(const SignatureScheme* scheme, ProcessId pid) : scheme_(scheme), pid_(pid) {}
  Signature sign(const std::vector<uint8_t>& msg) const { return scheme_->sign(pid_, msg); }
  ProcessId pid() const { return pid_; }

 private:
  const SignatureScheme* scheme_ = nullptr;
  ProcessId pid_ = 0;
};

// Verification-only view of the scheme.
class Verifier {
 public:
  Verifier() = default;
  explicit Verifier(const SignatureScheme* scheme) : scheme_(scheme) {}
  bool verify(ProcessId claimed, const std::vector<uint8_t>& msg, const Signature& sig) const {
    return scheme_ && scheme_->verify(claimed, msg, sig);
  }

 private:
  const SignatureScheme* scheme_ = nullptr;
};

// True iff >= N-f proofs from distinct known acceptors verify for
// (cert.ballot, digest of cert.value's canonical form).
bool check_proven_cert(const ProvenCert& cert, const std::set<ProcessId>& membership, uint32_t f,
                       const CommutativityOracle& oracle, const Verifier& verifier);

// Per-process memo of proposer-signature checks; commands are immutable and
// sequences repeat them constantly.
class CommandSigCache {
 public:
  explicit CommandSigCache(const Verifier* v) : verifier_(v) {}
  bool valid(const Command& c) const;
  bool all_valid(const CmdSequence& s) const;

 private:
  const Verifier* verifier_;
  mutable std::map<CommandId, std::pair<std::vector<uint8_t>, bool>> memo_;
};

}  // namespace bgp

#endif  // BGP_CRYPTO_HPP
