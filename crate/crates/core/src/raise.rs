//! The continuous greedy: repeatedly lift a minimum inc_cost set by the
//! smallest of its tolerance, the remaining balance over its cost, and the
//! cap headroom of its tightest edge.

use crate::graph::{compact, mst_weight_of, EdgeId};
use crate::rational::int;
use crate::strength::{best_certificate, tolerance_of, PartitionCertificate, TieBreak, Tolerance};
use crate::{Error, Perturbation, Rational, Result, WeightedGraph};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftStep {
    pub certificate: PartitionCertificate,
    pub amount: Rational,
    pub budget_before: Rational,
    pub budget_after: Rational,
    pub mst_before: Rational,
    pub mst_after: Rational,
    pub tolerance: Tolerance,
}

/// One unit (or the final partial unit) of a lift: `set` rises by
/// `(end - start) / c(set)` as the budget runs from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitInterval {
    pub start: Rational,
    pub end: Rational,
    pub set: Vec<EdgeId>,
    pub cost: u64,
    pub step: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<LiftStep>,
    pub perturbation: Perturbation,
    pub initial_mst: Rational,
    pub increase: Rational,
    /// Budget actually spent; below the request only when every liftable
    /// edge saturated its cap.
    pub spent: Rational,
}

impl Trace {
    /// Unit intervals in budget order. Every interval lifts its set by
    /// exactly one except possibly the last.
    pub fn unit_intervals(&self) -> Vec<UnitInterval> {
        let mut out = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            let cost = int(step.certificate.cost as i128);
            let mut start = step.budget_before;
            let mut left = step.amount;
            while left.is_positive() {
                let unit = left.min(int(1));
                let end = start + unit * cost;
                out.push(UnitInterval {
                    start,
                    end,
                    set: step.certificate.set_s.clone(),
                    cost: step.certificate.cost,
                    step: i,
                });
                start = end;
                left -= unit;
            }
        }
        out
    }

    /// Budgets `b_0 = 0 < b_1 < … < b_k = spent` at which all weights are
    /// integral, plus the final (possibly fractional) end.
    pub fn breakpoints(&self) -> Vec<Rational> {
        std::iter::once(Rational::zero())
            .chain(self.unit_intervals().into_iter().map(|u| u.end))
            .collect()
    }

    /// A trace that applies the given lifts in order, each certified by the
    /// partition its set induces in the compacted graph of its weight class.
    /// Optimality of the lifted sets is not checked; each amount must stay
    /// within the set's tolerance.
    pub fn replay(g: &WeightedGraph, lifts: &[(Vec<EdgeId>, Rational)]) -> Result<Trace> {
        let mut x = Perturbation::zero(g);
        let initial_mst = mst_weight_of(g, &g.weights(&x));
        let mut steps = Vec::new();
        let mut budget = Rational::zero();
        let mut mst = initial_mst;
        for (set, amount) in lifts {
            if !amount.is_positive() {
                return Err(Error::InvalidArgument(
                    "lift amounts must be positive".into(),
                ));
            }
            let mut set = set.clone();
            set.sort_unstable();
            set.dedup();
            g.check_ids(&set)?;
            let certificate = certify_set(g, &x, &set)?;
            let weights = g.weights(&x);
            let tolerance = tolerance_of(g, &weights, &set, &certificate.pivot)?;
            if let Tolerance::Finite(t) = tolerance {
                if *amount > int(t as i128) {
                    return Err(Error::InvalidArgument(format!(
                        "lift of {set:?} exceeds its tolerance {t}"
                    )));
                }
            }
            let mut amounts = x.amounts().to_vec();
            for &e in &set {
                amounts[e] += amount;
            }
            x = Perturbation::new(g, amounts)?;
            let budget_after = budget + amount * int(certificate.cost as i128);
            let mst_after = mst_weight_of(g, &g.weights(&x));
            steps.push(LiftStep {
                certificate,
                amount: *amount,
                budget_before: budget,
                budget_after,
                mst_before: mst,
                mst_after,
                tolerance,
            });
            budget = budget_after;
            mst = mst_after;
        }
        Ok(Trace {
            steps,
            perturbation: x,
            initial_mst,
            increase: mst - initial_mst,
            spent: budget,
        })
    }
}

/// Certificate for an arbitrary single-class set that is exactly the edge
/// set between the components it leaves behind.
fn certify_set(
    g: &WeightedGraph,
    x: &Perturbation,
    set: &[EdgeId],
) -> Result<PartitionCertificate> {
    let weights = g.weights(x);
    let Some(&first) = set.first() else {
        return Err(Error::InvalidArgument("cannot lift an empty set".into()));
    };
    let pivot = weights[first];
    if set.iter().any(|&e| weights[e] != pivot) {
        return Err(Error::InvalidArgument(format!(
            "{set:?} spans several weight classes"
        )));
    }
    let h = compact(g, x, &pivot)?;
    let mut dsu = crate::graph::Dsu::new(h.vertex_count());
    for e in h.edges().iter().filter(|e| !set.contains(&e.id)) {
        dsu.union(e.u, e.v);
    }
    let classes = h.classes();
    let mut component_of = vec![usize::MAX; h.vertex_count()];
    for (i, comp) in h.components().iter().enumerate() {
        for &v in comp {
            component_of[v] = i;
        }
    }
    let edge_of = |id: EdgeId| h.edges().iter().find(|e| e.id == id);
    let Some(anchor) = edge_of(first) else {
        return Err(Error::InvalidArgument(format!(
            "edge {first} is a self-loop in its class"
        )));
    };
    let component = component_of[anchor.u];
    for &e in set {
        match edge_of(e) {
            Some(ce) if component_of[ce.u] == component && dsu.find(ce.u) != dsu.find(ce.v) => {}
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "{set:?} is not the edge set of a partition"
                )));
            }
        }
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for v in (0..h.vertex_count()).filter(|&v| component_of[v] == component) {
        let r = dsu.find(v);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, members)) => members.extend(&classes[v]),
            None => groups.push((r, classes[v].clone())),
        }
    }
    let mut shores: Vec<Vec<usize>> = groups
        .into_iter()
        .map(|(_, mut vs)| {
            vs.sort_unstable();
            vs
        })
        .collect();
    shores.sort();
    let in_shore = |shore: &[usize], v: usize| shore.binary_search(&v).is_ok();
    let shore_cuts: Vec<Vec<EdgeId>> = shores
        .iter()
        .map(|s| {
            set.iter()
                .copied()
                .filter(|&e| in_shore(s, g.edge(e).u) != in_shore(s, g.edge(e).v))
                .collect()
        })
        .collect();
    let cost = g.cost_of(set);
    let coverage = shores.len() - 1;
    Ok(PartitionCertificate {
        pivot,
        shore_cut_costs: shore_cuts.iter().map(|c| g.cost_of(c)).collect(),
        shore_cuts,
        shores,
        set_s: set.to_vec(),
        cost,
        inc_cost: Rational::new(cost as i128, coverage as i128),
    })
}

enum Stop {
    Exhausted,
    Saturated,
    Unbounded(PartitionCertificate),
}

fn run(g: &WeightedGraph, budget: Option<&Rational>, tie: TieBreak) -> (Trace, Stop) {
    let mut x = Perturbation::zero(g);
    let initial_mst = mst_weight_of(g, &g.weights(&x));
    let mut mst = initial_mst;
    let mut spent = Rational::zero();
    let mut steps = Vec::new();
    let stop = loop {
        let balance = budget.map(|b| b - spent);
        if matches!(&balance, Some(b) if !b.is_positive()) {
            break Stop::Exhausted;
        }
        let weights = g.weights(&x);
        let frozen: Vec<bool> = g
            .edges()
            .iter()
            .map(|e| e.cap.is_some_and(|c| x.amount(e.id) >= &int(c as i128)))
            .collect();
        let Some(cert) = best_certificate(g, &weights, &frozen, tie) else {
            break Stop::Saturated;
        };
        let tolerance = tolerance_of(g, &weights, &cert.set_s, &cert.pivot)
            .expect("weights stay integral until the final budget-limited lift");
        let headroom = cert
            .set_s
            .iter()
            .filter_map(|&e| g.edge(e).cap.map(|c| int(c as i128) - x.amount(e)))
            .min();
        let cost = int(cert.cost as i128);
        let mut amount: Option<Rational> = match tolerance {
            Tolerance::Finite(t) => Some(int(t as i128)),
            Tolerance::Infinite => None,
        };
        for bound in [headroom, balance.map(|b| b / cost)].into_iter().flatten() {
            amount = Some(amount.map_or(bound, |a| a.min(bound)));
        }
        let Some(amount) = amount else {
            break Stop::Unbounded(cert);
        };
        x.lift(&cert.set_s, &amount);
        let budget_after = spent + amount * cost;
        let mst_after = mst + amount * int(cert.coverage() as i128);
        debug_assert_eq!(mst_after, mst_weight_of(g, &g.weights(&x)));
        steps.push(LiftStep {
            certificate: cert,
            amount,
            budget_before: spent,
            budget_after,
            mst_before: mst,
            mst_after,
            tolerance,
        });
        spent = budget_after;
        mst = mst_after;
    };
    (
        Trace {
            steps,
            perturbation: x,
            initial_mst,
            increase: mst - initial_mst,
            spent,
        },
        stop,
    )
}

/// Continuous optimum under `budget`, with the greedy's full trace.
pub fn raise_mst(g: &WeightedGraph, budget: &Rational) -> Trace {
    raise_mst_with(g, budget, TieBreak::Canonical)
}

pub fn raise_mst_with(g: &WeightedGraph, budget: &Rational, tie: TieBreak) -> Trace {
    run(g, Some(&(*budget).max(Rational::zero())), tie).0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    pub budget: Rational,
    pub mst_weight: Rational,
    /// Slope on the segment that starts here.
    pub slope: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminal {
    /// The last slope continues forever.
    Unbounded,
    /// Every liftable edge is saturated; the last point has slope zero.
    Capped,
    /// Emission stopped at the budget limit.
    Truncated,
}

/// The optimal continuous MST weight as a function of budget: concave and
/// piecewise linear, one point per change of slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakpointCurve {
    pub points: Vec<CurvePoint>,
    pub terminal: Terminal,
    /// Budget limit for a truncated curve.
    pub limit: Option<Rational>,
}

impl BreakpointCurve {
    pub fn initial_mst(&self) -> Rational {
        self.points[0].mst_weight
    }

    /// Curve value at `budget`; `None` past a truncation limit.
    pub fn value_at(&self, budget: &Rational) -> Option<Rational> {
        if let Some(limit) = &self.limit {
            if budget > limit {
                return None;
            }
        }
        let budget = (*budget).max(Rational::zero());
        let p = self.points.iter().rev().find(|p| p.budget <= budget)?;
        Some(p.mst_weight + p.slope * (budget - p.budget))
    }

    /// Largest attainable increase when capped; `None` otherwise.
    pub fn max_increase(&self) -> Option<Rational> {
        match self.terminal {
            Terminal::Capped => {
                Some(self.points.last().map(|p| p.mst_weight).unwrap() - self.initial_mst())
            }
            _ => None,
        }
    }
}

/// Breakpoint curve of the greedy, up to `budget_limit` if given.
pub fn curve(g: &WeightedGraph, budget_limit: Option<&Rational>) -> BreakpointCurve {
    let limit = budget_limit.map(|b| (*b).max(Rational::zero()));
    let (trace, stop) = run(g, limit.as_ref(), TieBreak::Canonical);
    let mut points: Vec<CurvePoint> = Vec::new();
    let mut push = |budget: Rational, mst_weight: Rational, slope: Rational| {
        if points.last().is_some_and(|p| p.slope == slope) {
            return;
        }
        points.push(CurvePoint {
            budget,
            mst_weight,
            slope,
        });
    };
    for s in &trace.steps {
        let slope = Rational::new(s.certificate.coverage() as i128, s.certificate.cost as i128);
        push(s.budget_before, s.mst_before, slope);
    }
    let end_mst = trace.initial_mst + trace.increase;
    let terminal = match stop {
        Stop::Unbounded(cert) => {
            push(
                trace.spent,
                end_mst,
                Rational::new(cert.coverage() as i128, cert.cost as i128),
            );
            Terminal::Unbounded
        }
        Stop::Saturated => {
            push(trace.spent, end_mst, Rational::zero());
            Terminal::Capped
        }
        Stop::Exhausted => {
            if trace.steps.is_empty() {
                // zero limit: report the slope that would start here
                push(
                    Rational::zero(),
                    trace.initial_mst,
                    trace_first_slope(g).unwrap_or_default(),
                );
            }
            Terminal::Truncated
        }
    };
    BreakpointCurve {
        points,
        terminal,
        limit: if terminal == Terminal::Truncated {
            limit
        } else {
            None
        },
    }
}

fn trace_first_slope(g: &WeightedGraph) -> Option<Rational> {
    let x = Perturbation::zero(g);
    let frozen: Vec<bool> = g.edges().iter().map(|e| e.cap == Some(0)).collect();
    best_certificate(g, &g.weights(&x), &frozen, TieBreak::Canonical)
        .map(|c| Rational::new(c.coverage() as i128, c.cost as i128))
}

/// Minimal budget whose curve value is the initial MST plus `target`.
pub fn invert_curve(curve: &BreakpointCurve, target: &Rational) -> Result<Rational> {
    if target.is_negative() {
        return Err(Error::InvalidArgument(
            "target increase must be non-negative".into(),
        ));
    }
    let goal = curve.initial_mst() + target;
    for (i, p) in curve.points.iter().enumerate() {
        if goal <= p.mst_weight {
            return Ok(p.budget);
        }
        if !p.slope.is_positive() {
            continue;
        }
        let end = match curve.points.get(i + 1) {
            Some(next) => Some(next.budget),
            None => curve.limit,
        };
        let needed = p.budget + (goal - p.mst_weight) / p.slope;
        match end {
            Some(e) if needed > e => continue,
            Some(_) => return Ok(needed),
            None if curve.terminal == Terminal::Unbounded => return Ok(needed),
            None => {}
        }
    }
    match curve.terminal {
        Terminal::Truncated => Err(Error::CurveTruncated {
            limit: curve.limit.unwrap_or_default(),
        }),
        _ => Err(Error::Unreachable {
            max_increase: curve.max_increase().unwrap_or_default(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mst_weight;
    use proptest::prelude::*;

    fn triangle(w: [u64; 3], c: [u64; 3]) -> WeightedGraph {
        WeightedGraph::uncapped(
            3,
            &[(0, 1, w[0], c[0]), (0, 2, w[1], c[1]), (1, 2, w[2], c[2])],
        )
        .unwrap()
    }

    fn path3() -> WeightedGraph {
        WeightedGraph::uncapped(4, &[(0, 1, 0, 1), (1, 2, 0, 1), (2, 3, 0, 1)]).unwrap()
    }

    fn check_trace(g: &WeightedGraph, t: &Trace) {
        let mut budget = Rational::zero();
        let mut inc = Rational::zero();
        for s in &t.steps {
            assert_eq!(s.budget_before, budget);
            assert_eq!(
                s.budget_after - s.budget_before,
                s.amount * int(s.certificate.cost as i128)
            );
            assert_eq!(
                s.mst_after - s.mst_before,
                s.amount * int(s.certificate.coverage() as i128)
            );
            if let Tolerance::Finite(tol) = s.tolerance {
                assert!(s.amount <= int(tol as i128));
            }
            budget = s.budget_after;
            inc += s.amount * int(s.certificate.coverage() as i128);
        }
        assert_eq!(t.spent, budget);
        assert_eq!(t.increase, inc);
        assert_eq!(t.increase, mst_weight(g, &t.perturbation) - t.initial_mst);
        assert_eq!(t.perturbation.total_cost(g), t.spent);
    }

    #[test]
    fn raise_examples() {
        let p = path3();
        let t = raise_mst(&p, &int(4));
        assert_eq!(t.increase, int(4));
        check_trace(&p, &t);

        let g = triangle([0, 0, 0], [1, 1, 1]);
        let t = raise_mst(&g, &int(3));
        assert_eq!(t.increase, int(2));
        assert_eq!(t.perturbation.amounts(), &[int(1), int(1), int(1)]);
        check_trace(&g, &t);

        let t = raise_mst(&g, &int(0));
        assert!(t.steps.is_empty());
        assert_eq!(t.increase, int(0));
    }

    #[test]
    fn curve_examples() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let c = curve(&g, None);
        assert_eq!(c.terminal, Terminal::Unbounded);
        assert_eq!(
            c.points,
            vec![CurvePoint {
                budget: int(0),
                mst_weight: int(0),
                slope: Rational::new(2, 3)
            }]
        );

        let t = triangle([2, 1, 1], [1, 1, 1]);
        let c = curve(&t, None);
        assert_eq!(c.points.len(), 2);
        assert_eq!(
            c.points[0],
            CurvePoint {
                budget: int(0),
                mst_weight: int(2),
                slope: int(1)
            }
        );
        assert_eq!(
            c.points[1],
            CurvePoint {
                budget: int(2),
                mst_weight: int(4),
                slope: Rational::new(2, 3)
            }
        );
        for b in 1..=3 {
            assert_eq!(
                c.value_at(&int(b)).unwrap() - c.initial_mst(),
                raise_mst(&t, &int(b)).increase
            );
        }

        let e = WeightedGraph::uncapped(2, &[(0, 1, 0, 5)]).unwrap();
        let c = curve(&e, None);
        assert_eq!(c.points[0].slope, Rational::new(1, 5));
        assert_eq!(c.terminal, Terminal::Unbounded);
    }

    #[test]
    fn capped_curve_saturates() {
        let e = WeightedGraph::new(2, [(0, 1, 0, 5, Some(1))]).unwrap();
        let c = curve(&e, None);
        assert_eq!(c.terminal, Terminal::Capped);
        assert_eq!(c.points.last().unwrap().slope, int(0));
        assert_eq!(c.max_increase(), Some(int(1)));
        assert_eq!(
            invert_curve(&c, &int(2)),
            Err(Error::Unreachable {
                max_increase: int(1)
            })
        );
        assert_eq!(invert_curve(&c, &int(1)), Ok(int(5)));
        let t = raise_mst(&e, &int(100));
        assert_eq!(t.spent, int(5));
        assert_eq!(t.increase, int(1));
    }

    #[test]
    fn invert_examples() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let c = curve(&g, None);
        assert_eq!(invert_curve(&c, &int(2)), Ok(int(3)));
        assert_eq!(invert_curve(&c, &int(0)), Ok(int(0)));
        let truncated = curve(&g, Some(&int(1)));
        assert_eq!(truncated.terminal, Terminal::Truncated);
        assert_eq!(
            invert_curve(&truncated, &int(2)),
            Err(Error::CurveTruncated { limit: int(1) })
        );
        assert_eq!(invert_curve(&truncated, &Rational::new(2, 3)), Ok(int(1)));
    }

    #[test]
    fn zero_limit_curve_keeps_initial_slope() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let c = curve(&g, Some(&int(0)));
        assert_eq!(c.points[0].slope, Rational::new(2, 3));
        assert_eq!(c.value_at(&int(0)), Some(int(0)));
        assert_eq!(c.value_at(&int(1)), None);
    }

    #[test]
    fn unit_intervals_split_lifts() {
        let p = path3();
        let t = Trace::replay(&p, &[(vec![0, 1], int(2))]).unwrap();
        assert_eq!(t.breakpoints(), vec![int(0), int(2), int(4)]);
        assert_eq!(t.increase, int(4));
        check_trace(&p, &t);
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let t = raise_mst(&g, &int(4));
        assert_eq!(t.breakpoints(), vec![int(0), int(3), int(4)]);
    }

    #[test]
    fn replay_rejects_non_cuts() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        assert!(Trace::replay(&g, &[(vec![0], int(1))]).is_err());
        assert!(Trace::replay(&g, &[(vec![0, 1], int(1))]).is_ok());
        let t = triangle([2, 1, 1], [1, 1, 1]);
        assert!(Trace::replay(&t, &[(vec![0, 1], int(1))]).is_err());
        assert!(
            Trace::replay(&t, &[(vec![1, 2], int(2))]).is_err(),
            "exceeds tolerance 1"
        );
    }

    #[test]
    fn caps_clamp_lifts() {
        let g = WeightedGraph::new(
            3,
            [
                (0, 1, 0, 1, Some(1)),
                (1, 2, 0, 1, None),
                (0, 2, 5, 1, None),
            ],
        )
        .unwrap();
        let t = raise_mst(&g, &int(10));
        check_trace(&g, &t);
        for e in g.edges() {
            if let Some(c) = e.cap {
                assert!(t.perturbation.amount(e.id) <= &int(c as i128));
            }
        }
        assert_eq!(
            t.increase,
            curve(&g, None).value_at(&int(10)).unwrap() - t.initial_mst
        );
        assert_eq!(t.increase, int(8));
    }

    fn small_instance() -> impl Strategy<Value = WeightedGraph> {
        (2usize..=5).prop_flat_map(|n| {
            let spine = proptest::collection::vec((0usize..100, 0u64..3, 1u64..4), n - 1);
            let extra = proptest::collection::vec((0..n, 0..n, 0u64..3, 1u64..4), 0..5);
            let caps = proptest::collection::vec(proptest::option::of(0u64..3), 9);
            (Just(n), spine, extra, caps).prop_map(|(n, spine, extra, caps)| {
                let mut edges: Vec<_> = spine
                    .iter()
                    .enumerate()
                    .map(|(i, &(r, w, c))| (r % (i + 1), i + 1, w, c))
                    .collect();
                edges.extend(extra.into_iter().filter(|e| e.0 != e.1));
                WeightedGraph::new(
                    n,
                    edges
                        .iter()
                        .enumerate()
                        .map(|(i, &(u, v, w, c))| (u, v, w, c, caps[i])),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn curve_is_concave_and_reproduces_raise(g in small_instance(), num in 0i128..40, den in 1i128..5) {
            let c = curve(&g, None);
            for w in c.points.windows(2) {
                prop_assert!(w[0].budget < w[1].budget);
                prop_assert!(w[0].slope >= w[1].slope);
            }
            let b = Rational::new(num, den);
            let t = raise_mst(&g, &b);
            check_trace(&g, &t);
            prop_assert_eq!(c.value_at(&b).unwrap(), t.initial_mst + t.increase);
            for e in g.edges() {
                if let Some(cap) = e.cap {
                    prop_assert!(t.perturbation.amount(e.id) <= &int(cap as i128));
                }
            }
        }

        #[test]
        fn edge_order_does_not_change_increase(g in small_instance(), b in 0i128..12, shift in 0usize..8) {
            let m = g.edge_count();
            let order: Vec<usize> = (0..m).map(|i| (i + shift) % m).collect();
            let permuted = WeightedGraph::new(
                g.vertex_count(),
                order.iter().map(|&i| { let e = g.edge(i); (e.u, e.v, e.weight, e.cost, e.cap) }),
            ).unwrap();
            prop_assert_eq!(raise_mst(&g, &int(b)).increase, raise_mst(&permuted, &int(b)).increase);
            prop_assert_eq!(
                raise_mst(&g, &int(b)).increase,
                raise_mst_with(&g, &int(b), TieBreak::Reversed).increase
            );
        }

        #[test]
        fn inversion_is_minimal(g in small_instance(), target in 0i128..6) {
            let c = curve(&g, None);
            match invert_curve(&c, &int(target)) {
                Ok(b) => {
                    prop_assert_eq!(c.value_at(&b).unwrap() - c.initial_mst(), int(target));
                    if b.is_positive() {
                        let below = b - Rational::new(1, 1000);
                        prop_assert!(c.value_at(&below.max(Rational::zero())).unwrap() - c.initial_mst() < int(target));
                    }
                }
                Err(Error::Unreachable { max_increase }) => prop_assert!(max_increase < int(target)),
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}
