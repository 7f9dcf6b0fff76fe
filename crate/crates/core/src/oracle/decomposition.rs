//! Decomposes an optimal final weighting `w*` of budget `B` into a budget
//! path of proper lifts aligned with a greedy trace, and verifies it.
//!
//! Along the trace, `w_b` are the greedy's weights after spending `b`, and
//! `b_0 < … < b_k` are the budgets at which they are integral. For an offset
//! `Δ` let `c(Δ, b) = Σ c(e)·(min(w*(e), w_b(e) + Δ) - w(e))`. Then
//!
//! * `Δ_i` is the least `Δ` with `c(Δ, b_i) = b_i` and `β_i = c(Δ_i, b_{i+1})`;
//! * on `[b_i, β_i]` the path is `min(w*, w_{f(b)} + Δ_i)` where `f(b)` is
//!   the least budget in `[b_i, b_{i+1}]` with `c(Δ_i, f(b)) = b`;
//! * on `[β_i, b_{i+1}]` it is `min(w*, w_{b_{i+1}} + Δ(b))` where `Δ(b)` is
//!   the least `Δ` with `c(Δ, b_{i+1}) = b`.
//!
//! The caller supplies `w*`; any weighting that spends exactly `B` and
//! dominates the base weights is accepted, and only the structure of the
//! path is checked.

use crate::graph::EdgeId;
use crate::raise::Trace;
use crate::rational::int;
use crate::{Error, Rational, Result, WeightedGraph};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    /// The greedy's own set is lifted, minus edges already at `w*`.
    First,
    /// Every edge below `w*` is lifted.
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftSegment {
    pub interval: usize,
    /// `None` for decompositions without phases.
    pub phase: Option<Phase>,
    pub start: Rational,
    pub end: Rational,
    pub set: Vec<EdgeId>,
    pub amount: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTrace {
    /// `b_0 .. b_k`.
    pub breakpoints: Vec<Rational>,
    /// `β_0 .. β_{k-1}`.
    pub betas: Vec<Rational>,
    /// `Δ_0 .. Δ_k`.
    pub deltas: Vec<Rational>,
    /// Budgets where the lifted set changes, per interval, endpoints included.
    pub refined: Vec<Vec<Rational>>,
    pub segments: Vec<LiftSegment>,
    /// `(budget, edge)` whenever an edge reaches its final weight.
    pub cap_events: Vec<(Rational, EdgeId)>,
}

struct Path<'a> {
    g: &'a WeightedGraph,
    w_star: &'a [Rational],
    b: Vec<Rational>,
    // weights at each b_i
    at: Vec<Vec<Rational>>,
    sets: Vec<Vec<EdgeId>>,
    costs: Vec<Rational>,
}

impl<'a> Path<'a> {
    fn new(g: &'a WeightedGraph, trace: &Trace, w_star: &'a [Rational]) -> Result<Self> {
        if w_star.len() != g.edge_count() {
            return Err(Error::PerturbationLength {
                expected: g.edge_count(),
                got: w_star.len(),
            });
        }
        if let Some(e) = g
            .edges()
            .iter()
            .find(|e| w_star[e.id] < int(e.weight as i128))
        {
            return Err(Error::InvalidArgument(format!(
                "final weight of edge {} is below its base weight",
                e.id
            )));
        }
        let spend: Rational = g
            .edges()
            .iter()
            .map(|e| (w_star[e.id] - int(e.weight as i128)) * int(e.cost as i128))
            .sum();
        if spend != trace.spent {
            return Err(Error::BudgetMismatch {
                trace: trace.spent,
                weights: spend,
            });
        }
        let units = trace.unit_intervals();
        let mut at = vec![g
            .edges()
            .iter()
            .map(|e| int(e.weight as i128))
            .collect::<Vec<_>>()];
        let mut b = vec![Rational::zero()];
        for u in &units {
            let mut next = at.last().unwrap().clone();
            let rise = (u.end - u.start) / int(u.cost as i128);
            for &e in &u.set {
                next[e] += rise;
            }
            at.push(next);
            b.push(u.end);
        }
        Ok(Path {
            g,
            w_star,
            b,
            at,
            sets: units.iter().map(|u| u.set.clone()).collect(),
            costs: units.iter().map(|u| int(u.cost as i128)).collect(),
        })
    }

    fn k(&self) -> usize {
        self.b.len() - 1
    }

    /// Greedy weights at budget `f` inside interval `i`.
    fn weights_in(&self, i: usize, f: &Rational) -> Vec<Rational> {
        let mut w = self.at[i].clone();
        let rise = (f - self.b[i]) / self.costs[i];
        for &e in &self.sets[i] {
            w[e] += rise;
        }
        w
    }

    fn clipped(&self, w: &[Rational], delta: &Rational) -> Vec<Rational> {
        w.iter()
            .zip(self.w_star)
            .map(|(x, s)| (x + delta).min(*s))
            .collect()
    }

    fn spend(&self, w: &[Rational]) -> Rational {
        self.g
            .edges()
            .iter()
            .map(|e| (w[e.id] - int(e.weight as i128)) * int(e.cost as i128))
            .sum()
    }

    fn c(&self, delta: &Rational, w: &[Rational]) -> Rational {
        self.spend(&self.clipped(w, delta))
    }

    /// Offsets at which some edge of `w` reaches `w*`.
    fn offset_kinks(&self, w: &[Rational]) -> Vec<Rational> {
        w.iter().zip(self.w_star).map(|(x, s)| s - x).collect()
    }

    fn delta_for(&self, w: &[Rational], target: &Rational, lo: &Rational) -> Result<Rational> {
        let kinks = self.offset_kinks(w);
        let hi = kinks.iter().copied().fold(*lo, Rational::max);
        invert(|d| self.c(d, w), lo, &hi, &kinks, target)
    }

    /// Phase-one budget parameter `f(b)` within interval `i`.
    fn f_of(&self, i: usize, delta: &Rational, b: &Rational) -> Result<Rational> {
        let kinks = self.phase_one_kinks(i, delta);
        invert(
            |f| self.c(delta, &self.weights_in(i, f)),
            &self.b[i],
            &self.b[i + 1],
            &kinks,
            b,
        )
    }

    fn phase_one_kinks(&self, i: usize, delta: &Rational) -> Vec<Rational> {
        self.sets[i]
            .iter()
            .map(|&e| self.b[i] + self.costs[i] * (self.w_star[e] - delta - self.at[i][e]))
            .collect()
    }
}

/// Least `t` in `[lo, hi]` with `phi(t) = target`, for a continuous
/// non-decreasing `phi` that is linear between consecutive `kinks`.
fn invert<F>(
    phi: F,
    lo: &Rational,
    hi: &Rational,
    kinks: &[Rational],
    target: &Rational,
) -> Result<Rational>
where
    F: Fn(&Rational) -> Rational,
{
    let mut points: Vec<Rational> = kinks
        .iter()
        .filter(|k| *k > lo && *k < hi)
        .copied()
        .collect();
    points.push(*lo);
    points.push(*hi);
    points.sort();
    points.dedup();
    let mut prev: Option<(Rational, Rational)> = None;
    for t in points {
        let v = phi(&t);
        match prev {
            None if &v > target => {
                return Err(Error::Internal(format!(
                    "target {target} lies below the parametrised range"
                )));
            }
            None if &v == target => return Ok(t),
            Some((a, va)) if &v >= target => return Ok(a + (target - va) * (t - a) / (v - va)),
            _ => {}
        }
        prev = Some((t, v));
    }
    Err(Error::Internal(format!(
        "target {target} lies above the parametrised range"
    )))
}

fn fail(what: &str) -> Error {
    Error::Verification(what.to_string())
}

/// Checks that `eval` moves exactly `set` uniformly and linearly across the
/// segment and spends exactly its budget length.
fn check_segment<F>(g: &WeightedGraph, eval: &F, seg: &LiftSegment) -> Result<()>
where
    F: Fn(&Rational) -> Result<Vec<Rational>>,
{
    let w0 = eval(&seg.start)?;
    let w1 = eval(&seg.end)?;
    let span = seg.end - seg.start;
    let spent: Rational = g
        .edges()
        .iter()
        .map(|e| (w1[e.id] - w0[e.id]) * int(e.cost as i128))
        .sum();
    if spent != span {
        return Err(fail(&format!(
            "segment [{}, {}] spends {spent}, not its length",
            seg.start, seg.end
        )));
    }
    for t in [
        Rational::new(1, 3),
        Rational::new(1, 2),
        Rational::new(2, 3),
        int(1),
    ] {
        let wt = eval(&(seg.start + span * t))?;
        for e in 0..g.edge_count() {
            let expected = if seg.set.contains(&e) {
                seg.amount * t
            } else {
                Rational::zero()
            };
            if wt[e] - w0[e] != expected {
                return Err(fail(&format!(
                    "segment [{}, {}] is not a proper lift: edge {e} rises by {} at fraction {t}, expected {expected}",
                    seg.start,
                    seg.end,
                    wt[e] - w0[e]
                )));
            }
        }
    }
    Ok(())
}

/// Builds a segment from its endpoints' weights.
fn segment(
    interval: usize,
    phase: Option<Phase>,
    start: Rational,
    end: Rational,
    w0: &[Rational],
    w1: &[Rational],
) -> LiftSegment {
    let set: Vec<EdgeId> = (0..w0.len()).filter(|&e| w1[e] != w0[e]).collect();
    let amount = set.first().map_or(Rational::zero(), |&e| w1[e] - w0[e]);
    LiftSegment {
        interval,
        phase,
        start,
        end,
        set,
        amount,
    }
}

/// Builds the two-phase decomposition of `w_star` against `trace` and
/// verifies it: offsets never decrease, every segment is a proper lift of
/// the set its phase prescribes, and the path ends at `w_star`.
pub fn decompose_and_verify(
    g: &WeightedGraph,
    trace: &Trace,
    w_star: &[Rational],
) -> Result<DecompositionTrace> {
    let path = Path::new(g, trace, w_star)?;
    let k = path.k();
    let mut deltas = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let lo = Rational::zero();
        deltas.push(path.delta_for(&path.at[i], &path.b[i], &lo)?);
    }
    if let Some(i) = (0..k).find(|&i| deltas[i + 1] < deltas[i]) {
        return Err(fail(&format!(
            "offsets decrease: Δ_{} = {} > Δ_{} = {}",
            i,
            deltas[i],
            i + 1,
            deltas[i + 1]
        )));
    }
    let betas: Vec<Rational> = (0..k)
        .map(|i| path.c(&deltas[i], &path.at[i + 1]))
        .collect();

    // path weights at budget b within interval i
    let eval_in = |i: usize, b: &Rational| -> Result<Vec<Rational>> {
        if b <= &betas[i] {
            let f = path.f_of(i, &deltas[i], b)?;
            Ok(path.clipped(&path.weights_in(i, &f), &deltas[i]))
        } else {
            let d = path.delta_for(&path.at[i + 1], b, &deltas[i])?;
            Ok(path.clipped(&path.at[i + 1], &d))
        }
    };

    let mut refined = Vec::with_capacity(k);
    let mut segments = Vec::new();
    let mut cap_events = Vec::new();
    for i in 0..k {
        let (bi, bj, beta) = (path.b[i], path.b[i + 1], betas[i]);
        let mut first: Vec<Rational> = vec![bi, beta];
        for f in path.phase_one_kinks(i, &deltas[i]) {
            if f > bi && f < bj {
                let p = path.c(&deltas[i], &path.weights_in(i, &f));
                if p > bi && p < beta {
                    first.push(p);
                }
            }
        }
        let mut second: Vec<Rational> = vec![beta, bj];
        for d in path.offset_kinks(&path.at[i + 1]) {
            if d > deltas[i] && d < deltas[i + 1] {
                let p = path.c(&d, &path.at[i + 1]);
                if p > beta && p < bj {
                    second.push(p);
                }
            }
        }
        let mut points = Vec::new();
        for (phase, mut pts) in [(Phase::First, first), (Phase::Second, second)] {
            pts.sort();
            pts.dedup();
            for w in pts.windows(2) {
                let (p, q) = (w[0], w[1]);
                if p == q {
                    continue;
                }
                let eval = |b: &Rational| eval_in(i, b);
                let w0 = eval(&p)?;
                let w1 = eval(&q)?;
                let seg = segment(i, Some(phase), p, q, &w0, &w1);
                check_segment(g, &eval, &seg)?;
                let capped: Vec<EdgeId> = (0..g.edge_count())
                    .filter(|&e| w0[e] == w_star[e])
                    .collect();
                let prescribed: Vec<EdgeId> = match phase {
                    Phase::First => path.sets[i]
                        .iter()
                        .copied()
                        .filter(|e| !capped.contains(e))
                        .collect(),
                    Phase::Second => (0..g.edge_count())
                        .filter(|e| !capped.contains(e))
                        .collect(),
                };
                if seg.set != prescribed {
                    return Err(fail(&format!(
                        "segment [{p}, {q}] of phase {phase:?} lifts {:?}, expected {prescribed:?}",
                        seg.set
                    )));
                }
                for e in (0..g.edge_count()).filter(|&e| w1[e] == w_star[e] && w0[e] != w_star[e]) {
                    cap_events.push((q, e));
                }
                segments.push(seg);
            }
            points.extend(pts);
        }
        points.sort();
        points.dedup();
        refined.push(points);
    }
    let end = if k == 0 {
        path.at[0].clone()
    } else {
        eval_in(k - 1, &path.b[k])?
    };
    if end != w_star {
        return Err(fail("path does not end at the final weights"));
    }
    Ok(DecompositionTrace {
        breakpoints: path.b.clone(),
        betas,
        deltas,
        refined,
        segments,
        cap_events,
    })
}

/// The decomposition that uses a single offset per budget,
/// `min(w*, w_b + Δ_b)` with `c(Δ_b, b) = b`, segmented at the unit
/// intervals of the trace. It generally fails the proper-lift check; it is
/// kept as the counterexample to the phased construction.
pub fn decompose_global_offset(
    g: &WeightedGraph,
    trace: &Trace,
    w_star: &[Rational],
) -> Result<DecompositionTrace> {
    let path = Path::new(g, trace, w_star)?;
    let k = path.k();
    let interval_of = |b: &Rational| {
        (0..k)
            .find(|&i| b <= &path.b[i + 1])
            .unwrap_or(k.saturating_sub(1))
    };
    let eval = |b: &Rational| -> Result<Vec<Rational>> {
        if k == 0 {
            return Ok(path.at[0].clone());
        }
        let i = interval_of(b);
        let w = path.weights_in(i, b);
        let d = path.delta_for(&w, b, &Rational::zero())?;
        Ok(path.clipped(&w, &d))
    };
    let mut deltas = Vec::with_capacity(k + 1);
    for i in 0..=k {
        deltas.push(path.delta_for(&path.at[i], &path.b[i], &Rational::zero())?);
    }
    let mut segments = Vec::new();
    for i in 0..k {
        let (p, q) = (path.b[i], path.b[i + 1]);
        let seg = segment(i, None, p, q, &eval(&p)?, &eval(&q)?);
        check_segment(g, &eval, &seg)?;
        segments.push(seg);
    }
    if eval(&path.b[k])? != w_star {
        return Err(fail("path does not end at the final weights"));
    }
    Ok(DecompositionTrace {
        breakpoints: path.b.clone(),
        betas: Vec::new(),
        deltas,
        refined: path.b.windows(2).map(|w| w.to_vec()).collect(),
        segments,
        cap_events: Vec::new(),
    })
}
