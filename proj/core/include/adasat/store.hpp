#pragma once

#include <cstdint>
#include <vector>

#include "adasat/bindings.hpp"
#include "adasat/label_set.hpp"
#include "adasat/term.hpp"

namespace adasat {

enum class ConsKind : uint8_t { Or, Neg };

// A live boolean constraint: or(a,b,c) meaning a|b=c, or neg(a,b) meaning
// a = not b. Neg uses args[0..1] only.
struct BoolConstraint {
  int32_t id;
  ConsKind kind;
  Term args[3];
  LabelSet label;
  bool alive;
};

enum class SourceKind : uint8_t { Or, Neg, Eq };

// One entry of the source log: everything the store currently holds, in the
// order it was told. Deleted items are expunged, so the log always equals
// the live source set. Eq items use args[0..1].
struct SourceItem {
  SourceKind kind;
  Term args[3];
  LabelSet label;
};

struct StoreStatus {
  bool failed = false;
  LabelSet explanation;  // meaningful only when failed
};

// Justification-tracking store for the boolean or/neg constraint system.
//
// Additions propagate to a fixpoint through a fixed rule set (see
// scan_rules); every derived binding carries the union of the labels of the
// source items it depends on. Deleting a set of labels removes every source
// item whose label intersects it and adapts the rest of the state so it is
// indistinguishable from replaying the surviving items into a fresh store.
//
// The adaptation is incremental: each source item records a restore point
// (trail lengths and status just before it was applied); a deletion unwinds
// the trails to the restore point of the earliest dying item and replays the
// surviving later items. Suffix deletions therefore cost only the work being
// undone.
class ConstraintStore {
public:
  int32_t new_var();
  std::size_t var_count() const { return binds_.var_count(); }

  void add_or(Term a, Term b, Term c, const LabelSet& just);
  void add_neg(Term a, Term b, const LabelSet& just);
  void equal(Term a, Term b, const LabelSet& just);

  bool is_consistent() const { return !status_.failed; }
  // Explanation of the recorded inconsistency; throws std::logic_error while
  // the store is consistent.
  const LabelSet& get_explanation() const;

  // Remove every live source item whose label intersects s and adapt all
  // derived state. Returns the number of items removed.
  std::size_t delete_labels(const LabelSet& s);

  Deref deref(Term t) const { return binds_.deref(t); }
  bool bound_to_const(Term t) const { return deref(t).term.is_const(); }

  const std::vector<SourceItem>& source_log() const { return log_; }
  std::size_t live_constraint_count() const;
  // Copies of the currently live constraints (ids reflect creation order).
  std::vector<BoolConstraint> live_constraints() const;

private:
  struct RestorePoint {
    uint32_t arena_len;
    uint32_t bound_trail_len;
    uint32_t removal_trail_len;
    uint32_t index_trail_len;
    StoreStatus status;
  };

  void log_and_apply(SourceItem item);
  void apply(const SourceItem& item);
  void instantiate(const SourceItem& item);
  void run_eq(Term a, Term b, const LabelSet& just);
  void fail(LabelSet explanation);
  void reactivate_watchers(int32_t var);
  void index_under(int32_t var, int32_t cid);
  void drain_agenda();
  void scan_rules(int32_t cid);
  bool try_or_pairs(BoolConstraint& c, const Deref d[3]);
  bool try_neg_pairs(BoolConstraint& c, const Deref d[2]);
  void collect_candidates(const Deref* d, int n_args, int32_t self);
  void kill(BoolConstraint& c);
  RestorePoint snapshot() const;

  Bindings binds_;
  std::vector<SourceItem> log_;
  std::vector<RestorePoint> points_;  // parallel to log_
  std::vector<BoolConstraint> arena_;
  std::vector<std::vector<int32_t>> index_;  // var id -> constraint ids
  std::vector<int32_t> bound_trail_;         // vars bound, in order
  std::vector<int32_t> removal_trail_;       // constraints killed, in order
  std::vector<int32_t> index_trail_;         // vars that got an index append
  std::vector<int32_t> agenda_;              // FIFO via agenda_head_
  std::size_t agenda_head_ = 0;
  std::vector<int32_t> candidates_;  // scratch for partner search
  StoreStatus status_;
};

}  // namespace adasat
