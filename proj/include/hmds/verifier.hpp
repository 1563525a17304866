#pragma once

// Deciding MDS(l) for arbitrary generator matrices.
//
// The main route enumerates the (n,k,l)-generic collections with
// sum |A_i| = (l-1)k and tests each for a trivial intersection of column
// spans.  The per-collection test is pluggable (subspace intersection, the
// stacked block determinant, or the RS-specific pi-polynomial determinant in
// rs.hpp).  A reduced verifier applies the order reduction l -> min(l, k) and
// checks only (n,k,k)_{k-1} collections for the final step.  A sampling
// oracle compares against a random (generic) matrix directly.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hmds/collections.hpp"
#include "hmds/linalg.hpp"

namespace hmds::verifier {

using linalg::Matrix;

struct VerificationReport {
  std::string property;  // e.g. "MDS(3)"
  bool holds = true;
  std::optional<SubsetCollection> witness;
  std::uint64_t collections_checked = 0;
  std::string method;
  double elapsed_ms = 0;
  std::vector<std::string> notes;
};

struct Options {
  unsigned threads = 1;
  std::size_t batch = 2048;
  /// Called with the running collection count after each batch.
  std::function<void(std::uint64_t)> progress;
};

/// A per-collection test: true iff V_{A_1} cap ... cap V_{A_l} = 0.  Must be
/// safe to call concurrently.
struct Criterion {
  std::string name;
  std::function<bool(const SubsetCollection&)> trivial_intersection;
};

Criterion subspace_criterion(const Matrix& v);
Criterion block_det_criterion(const Matrix& v);

enum class Method { Subspace, BlockDet };
Criterion make_criterion(const Matrix& v, Method m);

std::string mds_label(int ell);

/// Every k columns independent.  Throws if k > n.
VerificationReport is_mds(const Matrix& v);

/// MDS(l) via generic-collection enumeration (l >= 3) or the rank check
/// (l = 2).  A non-MDS matrix is reported as failing without enumeration.
/// Throws std::invalid_argument for l < 2.
VerificationReport is_mds_ell(const Matrix& v, int ell, const Criterion& crit, const Options& opt = {});
VerificationReport is_mds_ell(const Matrix& v, int ell, Method m = Method::BlockDet, const Options& opt = {});

/// Same verdict as is_mds_ell, using l -> min(l,k), the MDS(3..k-1) chain and
/// only (n,k,k)_{k-1} collections for the last step.
VerificationReport is_mds_ell_reduced(const Matrix& v, int ell, const Criterion& crit, const Options& opt = {});
VerificationReport is_mds_ell_reduced(const Matrix& v, int ell, Method m = Method::BlockDet,
                                      const Options& opt = {});

/// l = 1 dispatches to is_mds, otherwise to is_mds_ell.
VerificationReport verify(const Matrix& v, int ell, const Criterion& crit, const Options& opt = {});

/// Rechecks a failing report's witness with intersect_dim against the
/// generic dimension (|A| for a single set, 0 for a balanced generic
/// collection).  False if there is no witness or it does not violate.
bool witness_rechecks(const Matrix& v, const VerificationReport& report);

/// Smallest prime above 2^20; comfortably above the degree budget l*k^2 at
/// desk scale.
std::uint64_t default_oracle_prime();

struct GenericDimQuery {
  int n = 0;
  int k = 0;
  SubsetCollection collection;
  int trials = 5;
  std::uint64_t prime = 0;  // 0 selects default_oracle_prime()
  std::uint64_t seed = 0;
};

/// Minimum of intersect_dim over `trials` uniformly random k x n matrices
/// over GF(prime).  Degenerate samples can only raise the dimension.
std::size_t generic_dim_oracle(const GenericDimQuery& q);

/// Definition-level check: for every multiset of l subsets of size <= k,
/// intersect_dim(V, .) equals the sampled generic dimension.  Desk scale only.
VerificationReport check_definition3(const Matrix& v, int ell, int trials = 5, std::uint64_t seed = 0,
                                     std::uint64_t prime = 0);

std::uint64_t fingerprint(const Matrix& v);

/// Records verdicts per generator matrix and flags any matrix verified
/// MDS(l) while failing a lower order l' < l (l >= 3).
class MonotonicityAudit {
 public:
  void record(std::uint64_t fp, int ell, bool holds);
  std::vector<std::string> violations() const;
  std::size_t runs() const;

 private:
  mutable std::mutex mu_;
  std::map<std::uint64_t, std::map<int, bool>> verdicts_;
  std::vector<std::string> violations_;
  std::size_t runs_ = 0;
};

/// Installs an audit that every verification run reports to; nullptr
/// disables.  Not owned.
void set_audit(MonotonicityAudit* audit);

/// Reports an externally computed verdict (e.g. the k = 3 pair criterion) to
/// the installed audit, if any.
void report_verdict(const Matrix& v, int ell, bool holds);

}  // namespace hmds::verifier
