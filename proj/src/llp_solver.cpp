#include "mincut/llp_solver.hpp"

#include "mincut/errors.hpp"

namespace mincut {

namespace {

// One wave of the forbidden-vertex edge scan, without re-validating the flow.
VertexSet forbidden_wave(const FlowNetwork& net, const Flow& flow, const Cut& cut) {
  VertexSet out(net.vertex_count());
  for (int i = 0; i < net.edge_count(); ++i) {
    const Edge& e = net.edges()[i];
    bool tail_in = e.tail == net.source() || cut.contains(e.tail);
    bool head_in = e.head == net.source() || cut.contains(e.head);
    if (!tail_in && head_in && flow.per_edge[i] > 0) out.set(e.tail);
    if (tail_in && !head_in && flow.per_edge[i] < e.capacity) out.set(e.head);
  }
  return out;
}

bool contains_terminal(const FlowNetwork& net, const VertexSet& verts) {
  return verts.test(net.source()) || verts.test(net.sink());
}

class Run {
 public:
  Run(const FlowNetwork& net, const Flow& flow, const Predicate& B)
      : net_(net), flow_(flow), b_(B) {}

  SolveTrace solve(Cut current, Advancement advancement) {
    observe(current);
    const int round_limit = net_.non_terminal_count() + 2;
    while (true) {
      ++trace_.rounds;
      bool progressed = advancement == Advancement::kStrong ? strong_round(current)
                                                            : single_vertex_round(current);
      if (infeasible_) return trace_;
      if (!progressed) {
        if (!b_.evaluate(current))
          throw ContractViolation("predicate reported no forbidden vertices on an unsatisfied cut");
        trace_.cut = current;
        return trace_;
      }
      if (trace_.rounds > round_limit)
        throw ContractViolation("solver exceeded the structural round bound");
    }
  }

 private:
  // Returns false when the round advanced nothing (fixed point reached).
  bool strong_round(Cut& current) {
    FeasibleSet fb = b_.forbidden(current);
    if (fb.is_infeasible()) return fail_round(0, 0);
    int b_added = 0;
    if (fb.vertices().any()) {
      if (contains_terminal(net_, fb.vertices()))
        throw ContractViolation("predicate forbade a terminal vertex");
      if (fb.vertices().is_subset_of(current.s_side))
        throw ContractViolation("predicate forbade only vertices already on the S-side");
      b_added = (fb.vertices() - current.s_side).count();
      current.s_side |= fb.vertices();
    }
    observe(current);

    // Close under the min-cut forbidden search: least min-cut refinement.
    int mc_added = 0;
    while (true) {
      VertexSet wave = forbidden_wave(net_, flow_, current);
      if (wave.none()) break;
      if (contains_terminal(net_, wave)) return fail_round(mc_added, b_added);
      mc_added += wave.count();
      current.s_side |= wave;
    }
    observe(current);

    trace_.per_round_forbidden.emplace_back(mc_added, b_added);
    return mc_added > 0 || b_added > 0;
  }

  bool single_vertex_round(Cut& current) {
    FeasibleSet fb = b_.forbidden(current);
    if (fb.is_infeasible()) return fail_round(0, 0);
    if (fb.vertices().any() && contains_terminal(net_, fb.vertices()))
      throw ContractViolation("predicate forbade a terminal vertex");
    VertexSet mc = forbidden_wave(net_, flow_, current);
    if (contains_terminal(net_, mc)) return fail_round(0, 0);
    int pick = -1;
    bool from_b = false;
    (fb.vertices() | mc).for_each([&](int v) {
      if (pick == -1) {
        pick = v;
        from_b = fb.vertices().test(v);
      }
    });
    if (pick == -1) {
      trace_.per_round_forbidden.emplace_back(0, 0);
      return false;
    }
    if (current.contains(pick))
      throw ContractViolation("predicate forbade only vertices already on the S-side");
    current.s_side.set(pick);
    trace_.per_round_forbidden.emplace_back(from_b ? 0 : 1, from_b ? 1 : 0);
    observe(current);
    return true;
  }

  bool fail_round(int mc_added, int b_added) {
    trace_.per_round_forbidden.emplace_back(mc_added, b_added);
    infeasible_ = true;
    return true;
  }

  void observe(const Cut& cut) {
    bool value = b_.evaluate(cut);
    if (have_last_ && value != last_value_) ++trace_.transitions_observed;
    last_value_ = value;
    have_last_ = true;
  }

  const FlowNetwork& net_;
  const Flow& flow_;
  const Predicate& b_;
  SolveTrace trace_;
  bool infeasible_ = false;
  bool have_last_ = false;
  bool last_value_ = false;
};

}  // namespace

SolveTrace least_sat_min_cut_from(const FlowNetwork& net, const Flow& flow, const Predicate& B,
                                  const Cut& start, Advancement advancement) {
  net.check_cut(start);
  validate_max_flow(net, flow);
  return Run(net, flow, B).solve(start, advancement);
}

SolveTrace least_sat_min_cut(const FlowNetwork& net, const Flow& flow, const Predicate& B,
                             Advancement advancement) {
  return least_sat_min_cut_from(net, flow, B, net.bottom_cut(), advancement);
}

}  // namespace mincut
