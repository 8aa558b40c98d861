#include "mincut/predicates.hpp"

#include <algorithm>

#include "mincut/errors.hpp"

namespace mincut {

namespace {

// S-side membership including the implicit source.
bool in_s(const FlowNetwork& net, const Cut& cut, int v) {
  return v == net.source() || cut.contains(v);
}

void check_non_terminal(const FlowNetwork& net, int v) {
  if (v < 0 || v >= net.vertex_count()) throw StructuralError("vertex id out of range");
  if (net.is_terminal(v)) throw StructuralError("vertex must be non-terminal");
}

}  // namespace

FeasibleSet min_cut_forbidden(const FlowNetwork& net, const Flow& flow, const Cut& cut) {
  net.check_cut(cut);
  validate_max_flow(net, flow);
  VertexSet out(net.vertex_count());
  for (int i = 0; i < net.edge_count(); ++i) {
    const Edge& e = net.edges()[i];
    bool tail_in = in_s(net, cut, e.tail);
    bool head_in = in_s(net, cut, e.head);
    if (!tail_in && head_in && flow.per_edge[i] > 0) out.set(e.tail);
    if (tail_in && !head_in && flow.per_edge[i] < e.capacity) out.set(e.head);
  }
  return FeasibleSet::forbidden(std::move(out));
}

FeasibleSet min_cut_dual_forbidden(const FlowNetwork& net, const Flow& flow, const Cut& cut) {
  net.check_cut(cut);
  validate_max_flow(net, flow);
  VertexSet out(net.vertex_count());
  for (int i = 0; i < net.edge_count(); ++i) {
    const Edge& e = net.edges()[i];
    bool tail_in = in_s(net, cut, e.tail);
    bool head_in = in_s(net, cut, e.head);
    if (!tail_in && head_in && flow.per_edge[i] > 0) out.set(e.head);
    if (tail_in && !head_in && flow.per_edge[i] < e.capacity) out.set(e.tail);
  }
  return FeasibleSet::forbidden(std::move(out));
}

namespace {

class TruePredicate final : public Predicate {
 public:
  explicit TruePredicate(int universe) : universe_(universe) {}
  bool evaluate(const Cut&) const override { return true; }
  FeasibleSet forbidden(const Cut&) const override {
    return FeasibleSet::forbidden(VertexSet(universe_));
  }
  std::optional<FeasibleSet> dual_forbidden(const Cut&) const override {
    return FeasibleSet::forbidden(VertexSet(universe_));
  }
  int transition_bound() const override { return 0; }

 private:
  int universe_;
};

class Implicational final : public Predicate {
 public:
  Implicational(const FlowNetwork& net, VertexSet X, int u)
      : universe_(net.vertex_count()), premise_(std::move(X)), conclusion_(u) {}

  bool evaluate(const Cut& cut) const override {
    return !premise_.is_subset_of(cut.s_side) || cut.contains(conclusion_);
  }

  FeasibleSet forbidden(const Cut& cut) const override {
    VertexSet out(universe_);
    if (!evaluate(cut)) out.set(conclusion_);
    return FeasibleSet::forbidden(std::move(out));
  }

  int transition_bound() const override { return 2; }

 private:
  int universe_;
  VertexSet premise_;
  int conclusion_;
};

class ForbidSourceSide final : public Predicate {
 public:
  ForbidSourceSide(const FlowNetwork& net, int u) : universe_(net.vertex_count()), vertex_(u) {}

  bool evaluate(const Cut& cut) const override { return !cut.contains(vertex_); }

  FeasibleSet forbidden(const Cut& cut) const override {
    if (cut.contains(vertex_)) return FeasibleSet::infeasible(universe_);
    return FeasibleSet::forbidden(VertexSet(universe_));
  }

  std::optional<FeasibleSet> dual_forbidden(const Cut& cut) const override {
    VertexSet out(universe_);
    if (cut.contains(vertex_)) out.set(vertex_);
    return FeasibleSet::forbidden(std::move(out));
  }

  // Satisfying set is an order ideal.
  int transition_bound() const override { return 1; }

 private:
  int universe_;
  int vertex_;
};

class RequireSource final : public Predicate {
 public:
  RequireSource(const FlowNetwork& net, int u) : universe_(net.vertex_count()), vertex_(u) {}

  bool evaluate(const Cut& cut) const override { return cut.contains(vertex_); }

  FeasibleSet forbidden(const Cut& cut) const override {
    VertexSet out(universe_);
    if (!cut.contains(vertex_)) out.set(vertex_);
    return FeasibleSet::forbidden(std::move(out));
  }

  std::optional<FeasibleSet> dual_forbidden(const Cut& cut) const override {
    if (!cut.contains(vertex_)) return FeasibleSet::infeasible(universe_);
    return FeasibleSet::forbidden(VertexSet(universe_));
  }

  // Satisfying set is an order filter.
  int transition_bound() const override { return 1; }

 private:
  int universe_;
  int vertex_;
};

class Conjunction final : public Predicate {
 public:
  Conjunction(int universe, std::vector<PredicatePtr> conjuncts)
      : universe_(universe), conjuncts_(std::move(conjuncts)) {}

  bool evaluate(const Cut& cut) const override {
    return std::all_of(conjuncts_.begin(), conjuncts_.end(),
                       [&](const PredicatePtr& p) { return p->evaluate(cut); });
  }

  FeasibleSet forbidden(const Cut& cut) const override {
    VertexSet out(universe_);
    for (const PredicatePtr& p : conjuncts_) {
      FeasibleSet f = p->forbidden(cut);
      if (f.is_infeasible()) return f;
      out |= f.vertices();
    }
    return FeasibleSet::forbidden(std::move(out));
  }

  std::optional<FeasibleSet> dual_forbidden(const Cut& cut) const override {
    VertexSet out(universe_);
    for (const PredicatePtr& p : conjuncts_) {
      auto f = p->dual_forbidden(cut);
      if (!f) return std::nullopt;
      if (f->is_infeasible()) return f;
      out |= f->vertices();
    }
    return FeasibleSet::forbidden(std::move(out));
  }

  int transition_bound() const override {
    int total = 0;
    for (const PredicatePtr& p : conjuncts_) total += p->transition_bound();
    return total;
  }

 private:
  int universe_;
  std::vector<PredicatePtr> conjuncts_;
};

// Conjunction of the per-edge implications encoding the uniformly directed
// condition, with a closed-form evaluate over the stored edge list.
class UniformlyDirected final : public Predicate {
 public:
  explicit UniformlyDirected(const FlowNetwork& net)
      : universe_(net.vertex_count()), source_(net.source()), sink_(net.sink()) {
    for (const Edge& e : net.edges()) {
      if (e.tail == source_ || e.head == sink_) continue;  // vacuous conjunct
      if (e.head == source_ && e.tail == sink_) {
        always_infeasible_ = true;  // edge t->s crosses every cut backwards
        continue;
      }
      if (e.head == source_) {
        forced_.push_back(e.tail);  // edge into s: tail must join S
      } else if (e.tail == sink_) {
        banned_.push_back(e.head);  // edge out of t: head must stay in T
      } else {
        internal_.emplace_back(e.tail, e.head);
      }
    }
  }

  bool evaluate(const Cut& cut) const override {
    if (always_infeasible_) return false;
    for (int u : forced_)
      if (!cut.contains(u)) return false;
    for (int v : banned_)
      if (cut.contains(v)) return false;
    for (auto [u, v] : internal_)
      if (cut.contains(v) && !cut.contains(u)) return false;
    return true;
  }

  FeasibleSet forbidden(const Cut& cut) const override {
    if (always_infeasible_) return FeasibleSet::infeasible(universe_);
    for (int v : banned_)
      if (cut.contains(v)) return FeasibleSet::infeasible(universe_);
    VertexSet out(universe_);
    for (int u : forced_)
      if (!cut.contains(u)) out.set(u);
    for (auto [u, v] : internal_)
      if (cut.contains(v) && !cut.contains(u)) out.set(u);
    return FeasibleSet::forbidden(std::move(out));
  }

  std::optional<FeasibleSet> dual_forbidden(const Cut& cut) const override {
    if (always_infeasible_) return FeasibleSet::infeasible(universe_);
    for (int u : forced_)
      if (!cut.contains(u)) return FeasibleSet::infeasible(universe_);
    VertexSet out(universe_);
    for (int v : banned_)
      if (cut.contains(v)) out.set(v);
    for (auto [u, v] : internal_)
      if (cut.contains(v) && !cut.contains(u)) out.set(v);
    return FeasibleSet::forbidden(std::move(out));
  }

  int transition_bound() const override {
    return 2 * static_cast<int>(internal_.size() + forced_.size() + banned_.size());
  }

 private:
  int universe_;
  int source_;
  int sink_;
  bool always_infeasible_ = false;
  std::vector<std::pair<int, int>> internal_;  // (tail, head), both non-terminal
  std::vector<int> forced_;
  std::vector<int> banned_;
};

}  // namespace

PredicatePtr constant_true(const FlowNetwork& net) {
  return std::make_shared<TruePredicate>(net.vertex_count());
}

PredicatePtr implicational(const FlowNetwork& net, const VertexSet& X, int u) {
  check_non_terminal(net, u);
  if (X.universe() != net.vertex_count())
    throw StructuralError("premise set does not match network dimensions");
  if (X.test(u)) throw StructuralError("implication conclusion may not appear in the premise");
  bool bad = false;
  X.for_each([&](int v) { bad = bad || net.is_terminal(v); });
  if (bad) throw StructuralError("premise vertices must be non-terminal");
  if (X.none()) return std::make_shared<RequireSource>(net, u);
  return std::make_shared<Implicational>(net, X, u);
}

PredicatePtr require_source(const FlowNetwork& net, int u) {
  check_non_terminal(net, u);
  return std::make_shared<RequireSource>(net, u);
}

PredicatePtr forbid_source_side(const FlowNetwork& net, int u) {
  check_non_terminal(net, u);
  return std::make_shared<ForbidSourceSide>(net, u);
}

PredicatePtr uniformly_directed(const FlowNetwork& net) {
  return std::make_shared<UniformlyDirected>(net);
}

bool is_uniformly_directed_cut(const FlowNetwork& net, const Cut& cut) {
  net.check_cut(cut);
  for (const Edge& e : net.edges()) {
    bool tail_in = e.tail == net.source() || cut.contains(e.tail);
    bool head_in = e.head == net.source() || cut.contains(e.head);
    if (!tail_in && head_in) return false;
  }
  return true;
}

PredicatePtr conjunction(const FlowNetwork& net, std::vector<PredicatePtr> conjuncts) {
  if (conjuncts.empty()) throw StructuralError("conjunction requires at least one predicate");
  if (conjuncts.size() == 1) return conjuncts.front();
  return std::make_shared<Conjunction>(net.vertex_count(), std::move(conjuncts));
}

namespace {

class InS final : public CutExpression {
 public:
  explicit InS(int v) : vertex_(v) {}
  bool evaluate(const Cut& cut) const override { return cut.contains(vertex_); }

 private:
  int vertex_;
};

class CardLe final : public CutExpression {
 public:
  explicit CardLe(int k) : k_(k) {}
  bool evaluate(const Cut& cut) const override { return cut.size() <= k_; }

 private:
  int k_;
};

class CardGe final : public CutExpression {
 public:
  explicit CardGe(int k) : k_(k) {}
  bool evaluate(const Cut& cut) const override { return cut.size() >= k_; }

 private:
  int k_;
};

class AndExpr final : public CutExpression {
 public:
  explicit AndExpr(std::vector<ExpressionPtr> args) : args_(std::move(args)) {}
  bool evaluate(const Cut& cut) const override {
    return std::all_of(args_.begin(), args_.end(),
                       [&](const ExpressionPtr& e) { return e->evaluate(cut); });
  }

 private:
  std::vector<ExpressionPtr> args_;
};

class OrExpr final : public CutExpression {
 public:
  explicit OrExpr(std::vector<ExpressionPtr> args) : args_(std::move(args)) {}
  bool evaluate(const Cut& cut) const override {
    return std::any_of(args_.begin(), args_.end(),
                       [&](const ExpressionPtr& e) { return e->evaluate(cut); });
  }

 private:
  std::vector<ExpressionPtr> args_;
};

class NotExpr final : public CutExpression {
 public:
  explicit NotExpr(ExpressionPtr arg) : arg_(std::move(arg)) {}
  bool evaluate(const Cut& cut) const override { return !arg_->evaluate(cut); }

 private:
  ExpressionPtr arg_;
};

}  // namespace

ExpressionPtr expr_in_s(const FlowNetwork& net, int v) {
  check_non_terminal(net, v);
  return std::make_shared<InS>(v);
}

ExpressionPtr expr_card_le(int k) { return std::make_shared<CardLe>(k); }

ExpressionPtr expr_card_ge(int k) { return std::make_shared<CardGe>(k); }

ExpressionPtr expr_and(std::vector<ExpressionPtr> args) {
  if (args.empty()) throw StructuralError("and requires at least one argument");
  return std::make_shared<AndExpr>(std::move(args));
}

ExpressionPtr expr_or(std::vector<ExpressionPtr> args) {
  if (args.empty()) throw StructuralError("or requires at least one argument");
  return std::make_shared<OrExpr>(std::move(args));
}

ExpressionPtr expr_not(ExpressionPtr arg) { return std::make_shared<NotExpr>(std::move(arg)); }

}  // namespace mincut
