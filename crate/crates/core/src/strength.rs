//! Minimum inc_cost sets, graph strength and tolerance.
//!
//! Strength of a connected multigraph is `min c(δ(P)) / (|P| - 1)` over
//! vertex partitions `P` with at least two parts. Small graphs are solved by
//! enumerating partitions; larger ones by a Dinkelbach iteration whose inner
//! problem (minimise `c(δ(P)) - λ(|P| - 1)`) is a Dilworth truncation
//! computed with one minimum cut per vertex.

use crate::graph::{compact_weights, coverage_of, mask, CompactedGraph, Dsu, EdgeId};
use crate::partition::{blocks, for_each_partition};
use crate::rational::int;
use crate::{Error, Perturbation, Rational, Result, WeightedGraph};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::VecDeque;

/// Components with at most this many vertices are solved by enumeration.
pub const ENUMERATION_LIMIT: usize = 9;

/// Which of several minimum inc_cost sets to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Smallest pivot, then most shores, then lexicographically smallest
    /// sorted edge-id vector.
    #[default]
    Canonical,
    /// Largest pivot, then fewest shores, then lexicographically largest.
    Reversed,
}

/// A vertex partition of one connected component of a compacted graph that
/// witnesses a minimum inc_cost set.
///
/// `shores` are sets of original vertices (unions of contraction classes)
/// ordered by smallest member; they cover the classes of that component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub pivot: Rational,
    pub shores: Vec<Vec<usize>>,
    /// `δ(P_i)` for each shore, sorted edge ids.
    pub shore_cuts: Vec<Vec<EdgeId>>,
    pub shore_cut_costs: Vec<u64>,
    /// Edges crossing the partition, sorted.
    pub set_s: Vec<EdgeId>,
    /// `c(set_s)`.
    pub cost: u64,
    pub inc_cost: Rational,
}

impl PartitionCertificate {
    /// Coverage of `set_s`, which is the number of shores less one.
    pub fn coverage(&self) -> usize {
        self.shores.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strength {
    pub sigma: Rational,
    /// Vertex blocks of `h`, ascending, ordered by smallest member.
    pub partition: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tolerance {
    Finite(u64),
    Infinite,
}

fn check_strength_input(h: &CompactedGraph) -> Result<()> {
    if h.vertex_count() < 2 {
        return Err(Error::SingleVertex);
    }
    if h.component_count() != 1 {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Strength of a connected compacted graph with at least two vertices.
///
/// Enumeration (used up to [`ENUMERATION_LIMIT`] vertices) returns the finest
/// optimal partition; the flow route returns some optimal partition.
pub fn strength(h: &CompactedGraph) -> Result<Strength> {
    check_strength_input(h)?;
    if h.vertex_count() <= ENUMERATION_LIMIT {
        Ok(enumerate_best(h, TieBreak::Canonical).into_strength())
    } else {
        Ok(flow_strength(h))
    }
}

/// Strength by exhaustive partition enumeration.
pub fn strength_by_enumeration(h: &CompactedGraph) -> Result<Strength> {
    check_strength_input(h)?;
    if h.vertex_count() > 12 {
        return Err(Error::SizeGuard(format!(
            "{} vertices exceeds 12 for enumeration",
            h.vertex_count()
        )));
    }
    Ok(enumerate_best(h, TieBreak::Canonical).into_strength())
}

/// Strength by Dinkelbach iteration over Dilworth truncations.
pub fn strength_by_flow(h: &CompactedGraph) -> Result<Strength> {
    check_strength_input(h)?;
    Ok(flow_strength(h))
}

struct Candidate {
    cost: u64,
    blocks: usize,
    labels: Vec<usize>,
    set: Vec<EdgeId>,
}

impl Candidate {
    fn ratio(&self) -> Rational {
        Rational::new(self.cost as i128, (self.blocks - 1) as i128)
    }

    fn into_strength(self) -> Strength {
        Strength {
            sigma: self.ratio(),
            partition: blocks(&self.labels, self.blocks),
        }
    }
}

fn crossing(h: &CompactedGraph, labels: &[usize]) -> Vec<EdgeId> {
    let mut set: Vec<EdgeId> = h
        .edges()
        .iter()
        .filter(|e| labels[e.u] != labels[e.v])
        .map(|e| e.id)
        .collect();
    set.sort_unstable();
    set
}

/// Orders candidates of equal pivot: ratio first, then the tie-break.
fn compare_within(a: &Candidate, b: &Candidate, tie: TieBreak) -> Ordering {
    let lhs = a.cost as u128 * (b.blocks - 1) as u128;
    let rhs = b.cost as u128 * (a.blocks - 1) as u128;
    lhs.cmp(&rhs).then_with(|| match tie {
        TieBreak::Canonical => b.blocks.cmp(&a.blocks).then_with(|| a.set.cmp(&b.set)),
        TieBreak::Reversed => a.blocks.cmp(&b.blocks).then_with(|| b.set.cmp(&a.set)),
    })
}

fn enumerate_best(h: &CompactedGraph, tie: TieBreak) -> Candidate {
    let n = h.vertex_count();
    let mut best: Option<Candidate> = None;
    for_each_partition(n, 2, n, |labels, k| {
        let cost: u64 = h
            .edges()
            .iter()
            .filter(|e| labels[e.u] != labels[e.v])
            .map(|e| e.cost)
            .sum();
        if let Some(b) = &best {
            let lhs = cost as u128 * (b.blocks - 1) as u128;
            let rhs = b.cost as u128 * (k - 1) as u128;
            if lhs > rhs {
                return;
            }
        }
        let cand = Candidate {
            cost,
            blocks: k,
            labels: labels.to_vec(),
            set: crossing(h, labels),
        };
        match &best {
            Some(b) if compare_within(&cand, b, tie) != Ordering::Less => {}
            _ => best = Some(cand),
        }
    });
    best.expect("a graph with two or more vertices has a partition into two parts")
}

fn flow_strength(h: &CompactedGraph) -> Strength {
    let n = h.vertex_count();
    let total: u64 = h.edges().iter().map(|e| e.cost).sum();
    let mut best_labels: Vec<usize> = (0..n).collect();
    let mut best_blocks = n;
    let mut lambda = Rational::new(total as i128, (n - 1) as i128);
    loop {
        let (labels, k) = min_partition(h, &lambda);
        let cut: u64 = h
            .edges()
            .iter()
            .filter(|e| labels[e.u] != labels[e.v])
            .map(|e| e.cost)
            .sum();
        let value = int(cut as i128) - lambda * int(k as i128 - 1);
        if value.is_negative() {
            lambda = Rational::new(cut as i128, (k - 1) as i128);
            best_labels = labels;
            best_blocks = k;
        } else {
            break;
        }
    }
    Strength {
        sigma: lambda,
        partition: blocks(&best_labels, best_blocks),
    }
}

/// Partition minimising `c(δ(P)) - λ·|P|` by the greedy Dilworth truncation
/// of `f(X) = c(δ(X)) - 2λ`: `x_i = min { f(X) - x(X - i) : i ∈ X ⊆ {0..=i} }`
/// and the minimising sets merge into the blocks.
fn min_partition(h: &CompactedGraph, lambda: &Rational) -> (Vec<usize>, usize) {
    let n = h.vertex_count();
    let two_lambda = lambda * int(2);
    let mut x: Vec<Rational> = Vec::with_capacity(n);
    let mut dsu = Dsu::new(n);
    for i in 0..n {
        let sink = n;
        let node = |v: usize| if v > i { sink } else { v };
        let mut net = RationalNetwork::new(n + 1);
        for e in h.edges() {
            let (a, b) = (node(e.u), node(e.v));
            if a != b {
                net.add_undirected(a, b, int(e.cost as i128));
            }
        }
        let mut positive = Rational::zero();
        for (j, y) in x.iter().enumerate() {
            if y.is_positive() {
                net.add_arc(i, j, *y);
                positive += y;
            } else if y.is_negative() {
                net.add_arc(j, sink, -y);
            }
        }
        let (flow, side) = net.min_cut(i, sink);
        x.push(flow - positive - two_lambda);
        for v in (0..=i).filter(|&v| side[v]) {
            dsu.union(i, v);
        }
    }
    let mut labels = vec![usize::MAX; n];
    let mut root_label = vec![usize::MAX; n];
    let mut k = 0;
    for v in 0..n {
        let r = dsu.find(v);
        if root_label[r] == usize::MAX {
            root_label[r] = k;
            k += 1;
        }
        labels[v] = root_label[r];
    }
    (labels, k)
}

/// Dense max-flow network with exact rational capacities.
struct RationalNetwork {
    cap: Vec<Vec<Rational>>,
}

impl RationalNetwork {
    fn new(n: usize) -> Self {
        RationalNetwork {
            cap: vec![vec![Rational::zero(); n]; n],
        }
    }

    fn add_arc(&mut self, a: usize, b: usize, c: Rational) {
        self.cap[a][b] += c;
    }

    fn add_undirected(&mut self, a: usize, b: usize, c: Rational) {
        self.cap[a][b] += c;
        self.cap[b][a] += c;
    }

    /// Edmonds-Karp; returns the flow value and the source side of the
    /// minimal minimum cut.
    fn min_cut(mut self, s: usize, t: usize) -> (Rational, Vec<bool>) {
        let n = self.cap.len();
        let mut value = Rational::zero();
        loop {
            let mut parent = vec![usize::MAX; n];
            parent[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if parent[v] == usize::MAX && self.cap[u][v].is_positive() {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                let side = parent.iter().map(|&p| p != usize::MAX).collect();
                return (value, side);
            }
            let mut bottleneck: Option<Rational> = None;
            let mut v = t;
            while v != s {
                let u = parent[v];
                let c = self.cap[u][v];
                bottleneck = Some(bottleneck.map_or(c, |b| b.min(c)));
                v = u;
            }
            let b = bottleneck.expect("path has at least one arc");
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.cap[u][v] -= b;
                self.cap[v][u] += b;
                v = u;
            }
            value += b;
        }
    }
}

fn certificate(
    g: &WeightedGraph,
    compaction: &CompactedGraph,
    component: &[usize],
    local: &CompactedGraph,
    labels: &[usize],
    block_count: usize,
) -> PartitionCertificate {
    let classes = compaction.classes();
    let mut shores: Vec<Vec<usize>> = blocks(labels, block_count)
        .into_iter()
        .map(|b| {
            let mut vs: Vec<usize> = b
                .iter()
                .flat_map(|&lv| classes[component[lv]].iter().copied())
                .collect();
            vs.sort_unstable();
            vs
        })
        .collect();
    shores.sort();
    let set_s = crossing(local, labels);
    let cost = g.cost_of(&set_s);
    let in_shore = |shore: &[usize], v: usize| shore.binary_search(&v).is_ok();
    let shore_cuts: Vec<Vec<EdgeId>> = shores
        .iter()
        .map(|shore| {
            set_s
                .iter()
                .copied()
                .filter(|&e| in_shore(shore, g.edge(e).u) != in_shore(shore, g.edge(e).v))
                .collect()
        })
        .collect();
    let shore_cut_costs = shore_cuts.iter().map(|c| g.cost_of(c)).collect();
    let inc_cost = Rational::new(cost as i128, (block_count - 1) as i128);
    PartitionCertificate {
        pivot: compaction.pivot,
        shores,
        shore_cuts,
        shore_cut_costs,
        set_s,
        cost,
        inc_cost,
    }
}

/// Best certificate for explicit weights, skipping edges flagged `frozen`
/// (they are contracted within their class). `None` if no candidate exists.
pub(crate) fn best_certificate(
    g: &WeightedGraph,
    weights: &[Rational],
    frozen: &[bool],
    tie: TieBreak,
) -> Option<PartitionCertificate> {
    let mut pivots: Vec<Rational> = (0..g.edge_count())
        .filter(|&e| !frozen[e])
        .map(|e| weights[e])
        .collect();
    pivots.sort();
    pivots.dedup();
    if tie == TieBreak::Reversed {
        pivots.reverse();
    }
    let mut best: Option<(Rational, PartitionCertificate)> = None;
    for pivot in pivots {
        let h = compact_weights(g, weights, &pivot, frozen);
        for component in h.components().into_iter().filter(|c| c.len() >= 2) {
            let local = h.induced(&component);
            let (labels, k) = if local.vertex_count() <= ENUMERATION_LIMIT {
                let c = enumerate_best(&local, tie);
                (c.labels, c.blocks)
            } else {
                let s = flow_strength(&local);
                let mut labels = vec![0; local.vertex_count()];
                for (b, block) in s.partition.iter().enumerate() {
                    for &v in block {
                        labels[v] = b;
                    }
                }
                (labels, s.partition.len())
            };
            let cert = certificate(g, &h, &component, &local, &labels, k);
            let replace = match &best {
                None => true,
                Some((_, b)) => {
                    let by_ratio = cert.inc_cost.cmp(&b.inc_cost);
                    // pivots are visited in tie-break order, so only a later
                    // component of the same pivot can win a ratio tie
                    by_ratio == Ordering::Less
                        || (by_ratio == Ordering::Equal && b.pivot == cert.pivot && {
                            let k_cmp = match tie {
                                TieBreak::Canonical => b.shores.len().cmp(&cert.shores.len()),
                                TieBreak::Reversed => cert.shores.len().cmp(&b.shores.len()),
                            };
                            let s_cmp = match tie {
                                TieBreak::Canonical => cert.set_s.cmp(&b.set_s),
                                TieBreak::Reversed => b.set_s.cmp(&cert.set_s),
                            };
                            k_cmp.then(s_cmp) == Ordering::Less
                        })
                }
            };
            if replace {
                best = Some((pivot, cert));
            }
        }
    }
    best.map(|(_, c)| c)
}

/// A set of minimum `c(S) / coverage(S)`, with its witnessing partition.
pub fn min_inc_cost_set(g: &WeightedGraph, x: &Perturbation) -> Result<PartitionCertificate> {
    min_inc_cost_set_with(g, x, TieBreak::Canonical)
}

pub fn min_inc_cost_set_with(
    g: &WeightedGraph,
    x: &Perturbation,
    tie: TieBreak,
) -> Result<PartitionCertificate> {
    best_certificate(g, &g.weights(x), &vec![false; g.edge_count()], tie).ok_or(Error::SingleVertex)
}

/// First integral lift of `set_s` that lowers its coverage.
pub(crate) fn tolerance_of(
    g: &WeightedGraph,
    weights: &[Rational],
    set: &[EdgeId],
    pivot: &Rational,
) -> Result<Tolerance> {
    if weights.iter().any(|w| !w.is_integer()) {
        return Err(Error::NonIntegralWeights);
    }
    let in_s = mask(g.edge_count(), set);
    let base = coverage_of(g, weights, &in_s);
    let top = (0..g.edge_count())
        .filter(|&e| !in_s[e])
        .map(|e| weights[e])
        .max();
    let Some(top) = top else {
        return Ok(Tolerance::Infinite);
    };
    if top < *pivot {
        return Ok(Tolerance::Infinite);
    }
    let steps = (top - pivot).to_integer() + 1;
    let mut lifted = weights.to_vec();
    for j in 1..=steps {
        for &e in set {
            lifted[e] = weights[e] + int(j);
        }
        if coverage_of(g, &lifted, &in_s) < base {
            return Ok(Tolerance::Finite(j as u64));
        }
    }
    Ok(Tolerance::Infinite)
}

/// Largest `δ` such that every lift of `set_s` by less than `δ` keeps its
/// coverage. Requires integral current weights.
pub fn tolerance(
    cert: &PartitionCertificate,
    g: &WeightedGraph,
    x: &Perturbation,
) -> Result<Tolerance> {
    g.check_ids(&cert.set_s)?;
    tolerance_of(g, &g.weights(x), &cert.set_s, &cert.pivot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::compact;
    use crate::oracle::brute_strength;
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

    fn assert_certificate_invariants(
        g: &WeightedGraph,
        x: &Perturbation,
        c: &PartitionCertificate,
    ) {
        assert!(c.shores.len() >= 2);
        let w = g.weights(x);
        assert!(c.set_s.iter().all(|&e| w[e] == c.pivot));
        let sum: u64 = c.shore_cut_costs.iter().sum();
        assert_eq!(sum, 2 * c.cost);
        assert_eq!(
            c.inc_cost,
            Rational::new(c.cost as i128, c.coverage() as i128)
        );
        assert_eq!(crate::coverage(&c.set_s, g, x).unwrap(), c.coverage());
        let mut all: Vec<usize> = c.shores.iter().flatten().copied().collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), total, "shores overlap");
    }

    #[test]
    fn min_inc_cost_set_examples() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let x = Perturbation::zero(&g);
        let c = min_inc_cost_set(&g, &x).unwrap();
        assert_eq!(c.inc_cost, Rational::new(3, 2));
        assert_eq!(c.shores, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(c.set_s, vec![0, 1, 2]);
        assert_eq!(c.shore_cut_costs, vec![2, 2, 2]);
        assert_certificate_invariants(&g, &x, &c);

        let p = path3();
        let x = Perturbation::zero(&p);
        let c = min_inc_cost_set(&p, &x).unwrap();
        assert_eq!(c.inc_cost, int(1));
        assert_certificate_invariants(&p, &x, &c);

        let t = triangle([2, 1, 1], [20, 1, 1]);
        let x = Perturbation::zero(&t);
        let c = min_inc_cost_set(&t, &x).unwrap();
        assert_eq!(c.pivot, int(1));
        assert_eq!(c.inc_cost, int(1));
        assert_eq!(c.set_s, vec![1, 2]);
        assert_eq!(c.coverage(), 2);
        assert_certificate_invariants(&t, &x, &c);
    }

    #[test]
    fn reversed_tie_break_picks_another_optimum() {
        let p = path3();
        let x = Perturbation::zero(&p);
        let c = min_inc_cost_set_with(&p, &x, TieBreak::Reversed).unwrap();
        assert_eq!(c.inc_cost, int(1));
        assert_eq!(c.set_s, vec![2]);
    }

    #[test]
    fn strength_examples() {
        let tri = CompactedGraph::from_edges(3, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap();
        let s = strength(&tri).unwrap();
        assert_eq!(s.sigma, Rational::new(3, 2));
        assert_eq!(s.partition, vec![vec![0], vec![1], vec![2]]);
        let edge = CompactedGraph::from_edges(2, &[(0, 1, 5)]).unwrap();
        assert_eq!(strength(&edge).unwrap().sigma, int(5));
        let c4 =
            CompactedGraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        let s = strength(&c4).unwrap();
        assert_eq!(s.sigma, Rational::new(4, 3));
        assert_eq!(s.partition.len(), 4);
        let single = CompactedGraph::from_edges(1, &[]).unwrap();
        assert_eq!(strength(&single), Err(Error::SingleVertex));
        let split = CompactedGraph::from_edges(3, &[(0, 1, 1)]).unwrap();
        assert_eq!(strength(&split), Err(Error::Disconnected));
    }

    #[test]
    fn flow_route_matches_on_examples() {
        let c4 =
            CompactedGraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        assert_eq!(strength_by_flow(&c4).unwrap().sigma, Rational::new(4, 3));
        // two heavy triangles joined by a light bridge
        let g = CompactedGraph::from_edges(
            6,
            &[
                (0, 1, 5),
                (1, 2, 5),
                (0, 2, 5),
                (3, 4, 5),
                (4, 5, 5),
                (3, 5, 5),
                (2, 3, 1),
            ],
        )
        .unwrap();
        let s = strength_by_flow(&g).unwrap();
        assert_eq!(s.sigma, int(1));
        assert_eq!(s.partition, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn tolerance_examples() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let x = Perturbation::zero(&g);
        let c = min_inc_cost_set(&g, &x).unwrap();
        assert_eq!(tolerance(&c, &g, &x), Ok(Tolerance::Infinite));

        let p = path3();
        let x = Perturbation::zero(&p);
        let c = PartitionCertificate {
            pivot: int(0),
            shores: vec![vec![0], vec![1, 2, 3]],
            shore_cuts: vec![vec![0], vec![0]],
            shore_cut_costs: vec![1, 1],
            set_s: vec![0],
            cost: 1,
            inc_cost: int(1),
        };
        assert_eq!(tolerance(&c, &p, &x), Ok(Tolerance::Infinite));

        let t = triangle([2, 1, 1], [1, 1, 1]);
        let x = Perturbation::zero(&t);
        let c = min_inc_cost_set(&t, &x).unwrap();
        assert_eq!(c.set_s, vec![1, 2]);
        assert_eq!(tolerance(&c, &t, &x), Ok(Tolerance::Finite(1)));

        let half = Perturbation::new(&t, vec![int(0), Rational::new(1, 2), int(0)]).unwrap();
        assert_eq!(tolerance(&c, &t, &half), Err(Error::NonIntegralWeights));
    }

    fn connected_multigraph(
        max_n: usize,
        max_m: usize,
    ) -> impl Strategy<Value = (usize, Vec<(usize, usize, u64)>)> {
        (2usize..=max_n).prop_flat_map(move |n| {
            let spine = proptest::collection::vec((0usize..1000, 1u64..5), n - 1);
            let extra =
                proptest::collection::vec((0..n, 0..n, 1u64..5), 0..=max_m.saturating_sub(n - 1));
            (Just(n), spine, extra).prop_map(|(n, spine, extra)| {
                let mut edges: Vec<_> = spine
                    .iter()
                    .enumerate()
                    .map(|(i, &(r, c))| (r % (i + 1), i + 1, c))
                    .collect();
                edges.extend(extra.into_iter().filter(|e| e.0 != e.1));
                (n, edges)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn strength_matches_oracle((n, edges) in connected_multigraph(6, 10)) {
            let h = CompactedGraph::from_edges(n, &edges).unwrap();
            let oracle = brute_strength(&h).unwrap();
            prop_assert_eq!(strength(&h).unwrap().sigma, oracle.sigma);
            let flow = strength_by_flow(&h).unwrap();
            prop_assert_eq!(flow.sigma, oracle.sigma);
            let cut: u64 = h.edges().iter().filter(|e| {
                !flow.partition.iter().any(|b| b.contains(&e.u) && b.contains(&e.v))
            }).map(|e| e.cost).sum();
            prop_assert_eq!(Rational::new(cut as i128, flow.partition.len() as i128 - 1), oracle.sigma);
        }

        #[test]
        fn flow_route_matches_enumeration_beyond_limit((n, edges) in connected_multigraph(11, 16)) {
            let h = CompactedGraph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(strength_by_flow(&h).unwrap().sigma, strength_by_enumeration(&h).unwrap().sigma);
        }

        #[test]
        fn certificate_is_minimal_over_all_sets(
            (n, edges) in connected_multigraph(5, 7),
            weights in proptest::collection::vec(0u64..3, 7),
        ) {
            let wedges: Vec<_> = edges.iter().enumerate().map(|(i, &(u, v, c))| (u, v, weights[i % 7], c)).collect();
            let g = WeightedGraph::uncapped(n, &wedges).unwrap();
            let x = Perturbation::zero(&g);
            let cert = min_inc_cost_set(&g, &x).unwrap();
            assert_certificate_invariants(&g, &x, &cert);
            let m = g.edge_count();
            for bits in 1u32..(1 << m) {
                let set: Vec<EdgeId> = (0..m).filter(|&e| bits >> e & 1 == 1).collect();
                let cov = crate::oracle::brute_coverage(&g, &g.weights(&x), &set);
                if cov > 0 {
                    prop_assert!(cert.inc_cost * int(cov as i128) <= int(g.cost_of(&set) as i128));
                }
            }
            prop_assert!(tolerance(&cert, &g, &x).unwrap() >= Tolerance::Finite(1));
        }
    }

    #[test]
    fn certificate_shores_cover_compacted_component() {
        let t = triangle([2, 1, 1], [20, 1, 1]);
        let x = Perturbation::zero(&t);
        let c = min_inc_cost_set(&t, &x).unwrap();
        let h = compact(&t, &x, &c.pivot).unwrap();
        let covered: usize = c.shores.iter().map(Vec::len).sum();
        assert_eq!(covered, h.classes().iter().map(Vec::len).sum::<usize>());
    }
}
