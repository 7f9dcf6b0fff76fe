use crate::graph::{CompactedGraph, EdgeId};
use crate::oracle::BaseGraph;
use crate::partition::{blocks, for_each_partition};
use crate::strength::Strength;
use crate::{Error, Perturbation, Rational, Result, WeightedGraph};
use std::collections::VecDeque;

/// Most edges that may stay free after pruning.
const FREE_EDGE_LIMIT: usize = 16;
/// Most MST evaluations one search may perform.
const EVALUATION_LIMIT: u64 = 200_000_000;

/// All spanning trees of a small multigraph.
#[derive(Debug, Clone)]
pub struct SpanningTrees {
    trees: Vec<Vec<EdgeId>>,
}

impl SpanningTrees {
    pub fn enumerate(g: &WeightedGraph) -> Result<Self> {
        let m = g.edge_count();
        let k = g.vertex_count() - 1;
        if m > 24 {
            return Err(Error::SizeGuard(format!(
                "{m} edges exceeds 24 for tree enumeration"
            )));
        }
        let mut trees = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        fn go(
            g: &WeightedGraph,
            next: usize,
            k: usize,
            chosen: &mut Vec<EdgeId>,
            out: &mut Vec<Vec<EdgeId>>,
        ) {
            if chosen.len() == k {
                if is_forest(
                    g.vertex_count(),
                    chosen.iter().map(|&e| (g.edge(e).u, g.edge(e).v)),
                ) {
                    out.push(chosen.clone());
                }
                return;
            }
            let m = g.edge_count();
            for e in next..m {
                if m - e < k - chosen.len() {
                    break;
                }
                chosen.push(e);
                if is_forest(
                    g.vertex_count(),
                    chosen.iter().map(|&f| (g.edge(f).u, g.edge(f).v)),
                ) {
                    go(g, e + 1, k, chosen, out);
                }
                chosen.pop();
            }
        }
        go(g, 0, k, &mut chosen, &mut trees);
        Ok(SpanningTrees { trees })
    }

    pub fn trees(&self) -> &[Vec<EdgeId>] {
        &self.trees
    }

    fn weight(tree: &[EdgeId], weights: &[Rational]) -> Rational {
        tree.iter().map(|&e| weights[e]).sum()
    }

    pub fn mst_weight(&self, weights: &[Rational]) -> Rational {
        self.trees
            .iter()
            .map(|t| Self::weight(t, weights))
            .min()
            .unwrap_or_default()
    }

    /// Every tree of minimum weight.
    pub fn minimum_trees(&self, weights: &[Rational]) -> Vec<&[EdgeId]> {
        let best = self.mst_weight(weights);
        self.trees
            .iter()
            .filter(|t| Self::weight(t, weights) == best)
            .map(Vec::as_slice)
            .collect()
    }

    /// `min |T ∩ set|` over minimum spanning trees `T`.
    pub fn coverage(&self, weights: &[Rational], set: &[EdgeId]) -> usize {
        self.minimum_trees(weights)
            .iter()
            .map(|t| t.iter().filter(|e| set.contains(e)).count())
            .min()
            .unwrap_or(0)
    }
}

fn is_forest(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for (u, v) in edges {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Coverage of `set` by spanning-tree enumeration.
pub fn brute_coverage(g: &WeightedGraph, weights: &[Rational], set: &[EdgeId]) -> usize {
    SpanningTrees::enumerate(g)
        .expect("oracle graphs are small")
        .coverage(weights, set)
}

/// Strength by enumerating every partition into two or more parts.
pub fn brute_strength(h: &CompactedGraph) -> Result<Strength> {
    let n = h.vertex_count();
    if n < 2 {
        return Err(Error::SingleVertex);
    }
    if n > 8 {
        return Err(Error::SizeGuard(format!(
            "{n} compacted vertices exceeds 8"
        )));
    }
    let mut best: Option<(Rational, Vec<usize>, usize)> = None;
    for_each_partition(n, 2, n, |labels, k| {
        let cut: u64 = h
            .edges()
            .iter()
            .filter(|e| labels[e.u] != labels[e.v])
            .map(|e| e.cost)
            .sum();
        let ratio = Rational::new(cut as i128, k as i128 - 1);
        if best.as_ref().is_none_or(|(r, _, _)| ratio < *r) {
            best = Some((ratio, labels.to_vec(), k));
        }
    });
    let (sigma, labels, k) = best.expect("two or more vertices");
    Ok(Strength {
        sigma,
        partition: blocks(&labels, k),
    })
}

/// Minimum number of edges whose removal leaves at least `k` components.
pub fn brute_min_kcut(base: &BaseGraph, k: usize) -> Result<usize> {
    let m = base.edges.len();
    if k > base.vertex_count {
        return Err(Error::InvalidArgument(format!(
            "{k} parts from {} vertices",
            base.vertex_count
        )));
    }
    if m > 20 {
        return Err(Error::SizeGuard(format!("{m} edges exceeds 20")));
    }
    (0..=m)
        .find(|&size| {
            combinations(m, size).any(|removed| {
                let kept = base
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !removed.contains(i))
                    .map(|(_, &e)| e);
                components(base.vertex_count, kept) >= k
            })
        })
        .ok_or_else(|| Error::Internal("removing every edge must isolate all vertices".into()))
}

fn components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

fn combinations(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k <= m).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if c[i] < m - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Optimal integral scheme found by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteSolution {
    pub amounts: Vec<u64>,
    pub increase: u64,
    pub cost: u64,
}

impl BruteSolution {
    pub fn perturbation(&self, g: &WeightedGraph) -> Perturbation {
        Perturbation::from_integers(g, &self.amounts).expect("oracle respects caps")
    }
}

/// Integer Kruskal over a fixed edge list (pre-sorted) and a few free edges.
struct Evaluator {
    n: usize,
    ends: Vec<(usize, usize)>,
    base: Vec<i64>,
    // fixed edges surviving sparsification, sorted by base weight
    fixed: Vec<usize>,
    free: Vec<usize>,
    parent: Vec<usize>,
    evaluations: u64,
}

impl Evaluator {
    fn new(g: &WeightedGraph, free: Vec<usize>) -> Self {
        let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let base: Vec<i64> = g.edges().iter().map(|e| e.weight as i64).collect();
        let mut is_free = vec![false; g.edge_count()];
        for &e in &free {
            is_free[e] = true;
        }
        let mut order: Vec<usize> = (0..g.edge_count()).filter(|&e| !is_free[e]).collect();
        order.sort_by_key(|&e| (base[e], e));
        // a fixed edge outside the fixed-edge forest closes a cycle of fixed
        // edges no heavier than itself and is never needed
        let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
        let fixed = order
            .into_iter()
            .filter(|&e| {
                let (a, b) = (find(&mut parent, ends[e].0), find(&mut parent, ends[e].1));
                if a == b {
                    return false;
                }
                parent[a] = b;
                true
            })
            .collect();
        Evaluator {
            n: g.vertex_count(),
            ends,
            base,
            fixed,
            free,
            parent: Vec::new(),
            evaluations: 0,
        }
    }

    fn mst(&mut self, x: &[u64]) -> i64 {
        self.evaluations += 1;
        let mut free: Vec<(i64, usize)> = self
            .free
            .iter()
            .map(|&e| (self.base[e] + x[e] as i64, e))
            .collect();
        free.sort_unstable();
        self.parent.clear();
        self.parent.extend(0..self.n);
        let (mut i, mut j) = (0, 0);
        let mut total = 0;
        let mut joined = 0;
        while joined + 1 < self.n {
            let take_fixed = match (self.fixed.get(i), free.get(j)) {
                (Some(&f), Some(&(w, _))) => self.base[f] <= w,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            let (e, w) = if take_fixed {
                i += 1;
                (self.fixed[i - 1], self.base[self.fixed[i - 1]])
            } else {
                j += 1;
                (free[j - 1].1, free[j - 1].0)
            };
            let (a, b) = (
                find(&mut self.parent, self.ends[e].0),
                find(&mut self.parent, self.ends[e].1),
            );
            if a != b {
                self.parent[a] = b;
                total += w;
                joined += 1;
            }
        }
        total
    }
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Number of edge-disjoint `u`-`v` paths using only `allowed` edges,
/// counted up to `limit`.
fn edge_connectivity(
    g: &WeightedGraph,
    u: usize,
    v: usize,
    allowed: &[bool],
    limit: usize,
) -> usize {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for e in g.edges().iter().filter(|e| allowed[e.id]) {
        adj[e.u].push((e.v, e.id));
        adj[e.v].push((e.u, e.id));
    }
    // flow[e] is +1 when edge e carries flow from its u to its v, -1 reversed
    let mut flow = vec![0i8; g.edge_count()];
    let mut paths = 0;
    while paths < limit {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            if a == v {
                break;
            }
            for &(b, e) in &adj[a] {
                let dir: i8 = if g.edge(e).u == a { 1 } else { -1 };
                if !seen[b] && flow[e] != dir {
                    seen[b] = true;
                    prev[b] = Some((a, e));
                    queue.push_back(b);
                }
            }
        }
        if !seen[v] {
            break;
        }
        let mut b = v;
        while let Some((a, e)) = prev[b] {
            flow[e] += if g.edge(e).u == a { 1 } else { -1 };
            b = a;
        }
        paths += 1;
    }
    paths
}

/// Edges that can hold a positive amount in an optimal scheme spending at
/// most `spend`. An edge `e = uv` is excluded when `u` and `v` stay joined
/// by more edge-disjoint paths of base weight at most `w(e)` (avoiding `e`)
/// than the other lifted edges could ever block: one unlifted path then
/// keeps `e` out of every MST, so lifting `e` is wasted money.
fn free_edges(g: &WeightedGraph, spend: u64, bound: &[u64]) -> Vec<usize> {
    let c_min = g.edges().iter().map(|e| e.cost).min().unwrap_or(1);
    g.edges()
        .iter()
        .filter(|e| bound[e.id] > 0 && e.cost <= spend)
        .filter(|e| {
            let others = ((spend - e.cost) / c_min) as usize;
            let allowed: Vec<bool> = g
                .edges()
                .iter()
                .map(|f| f.id != e.id && f.weight <= e.weight)
                .collect();
            edge_connectivity(g, e.u, e.v, &allowed, others + 1) <= others
        })
        .map(|e| e.id)
        .collect()
}

fn bounded_search_guard(free: &[usize]) -> Result<()> {
    if free.len() > FREE_EDGE_LIMIT {
        return Err(Error::SizeGuard(format!(
            "{} edges remain free after pruning, limit {FREE_EDGE_LIMIT}",
            free.len()
        )));
    }
    Ok(())
}

/// Minimum-cost integral scheme raising the MST by at least `target`; ties
/// go to the lexicographically smallest amount vector.
pub fn brute_targeted(g: &WeightedGraph, target: u64) -> Result<BruteSolution> {
    let w_max = g.max_weight();
    let bound: Vec<u64> = g
        .edges()
        .iter()
        .map(|e| {
            let b = w_max - e.weight + target;
            e.cap.map_or(b, |c| c.min(b))
        })
        .collect();
    let all: Vec<usize> = (0..g.edge_count()).collect();
    let mut top = Evaluator::new(g, all);
    let base_mst = top.mst(&vec![0; g.edge_count()]);
    let best = top.mst(&bound) - base_mst;
    if best < target as i64 {
        return Err(Error::Unreachable {
            max_increase: Rational::from_integer(best as i128),
        });
    }
    let ceiling: u64 = g.edges().iter().map(|e| e.cost * bound[e.id]).sum();
    let mut evaluations = 0;
    for level in 0..=ceiling {
        let free = free_edges(g, level, &bound);
        bounded_search_guard(&free)?;
        let mut eval = Evaluator::new(g, free.clone());
        let mut x = vec![0u64; g.edge_count()];
        let costs: Vec<u64> = free.iter().map(|&e| g.edge(e).cost).collect();
        let caps: Vec<u64> = free.iter().map(|&e| bound[e]).collect();
        let found = exact_spend(
            &mut eval,
            &free,
            &costs,
            &caps,
            0,
            level,
            &mut x,
            base_mst + target as i64,
        );
        evaluations += eval.evaluations;
        if evaluations > EVALUATION_LIMIT {
            return Err(Error::SizeGuard("evaluation budget exhausted".into()));
        }
        if found {
            let increase = (eval.mst(&x) - base_mst) as u64;
            return Ok(BruteSolution {
                amounts: x,
                increase,
                cost: level,
            });
        }
    }
    Err(Error::Internal(
        "bounded scheme reaches the target but no level found it".into(),
    ))
}

/// Depth-first search over amounts spending exactly `left`, in
/// lexicographic order; stops at the first scheme meeting `goal`.
#[allow(clippy::too_many_arguments)]
fn exact_spend(
    eval: &mut Evaluator,
    free: &[usize],
    costs: &[u64],
    caps: &[u64],
    i: usize,
    left: u64,
    x: &mut [u64],
    goal: i64,
) -> bool {
    if i == free.len() {
        return left == 0 && eval.mst(x) >= goal;
    }
    let reach: u64 = (i..free.len()).map(|j| costs[j] * caps[j]).sum();
    if reach < left {
        return false;
    }
    let e = free[i];
    let top = caps[i].min(left / costs[i]);
    for a in 0..=top {
        x[e] = a;
        if exact_spend(eval, free, costs, caps, i + 1, left - a * costs[i], x, goal) {
            return true;
        }
    }
    x[e] = 0;
    false
}

/// Integral scheme of cost at most `budget` maximising the MST increase;
/// ties go to lower cost, then the lexicographically smallest vector.
pub fn brute_budgeted(g: &WeightedGraph, budget: u64) -> Result<BruteSolution> {
    let bound: Vec<u64> = g
        .edges()
        .iter()
        .map(|e| {
            let b = budget / e.cost;
            e.cap.map_or(b, |c| c.min(b))
        })
        .collect();
    let free = free_edges(g, budget, &bound);
    bounded_search_guard(&free)?;
    let mut eval = Evaluator::new(g, free.clone());
    let mut x = vec![0u64; g.edge_count()];
    let base_mst = eval.mst(&x);
    let costs: Vec<u64> = free.iter().map(|&e| g.edge(e).cost).collect();
    let caps: Vec<u64> = free.iter().map(|&e| bound[e]).collect();
    let mut best = BruteSolution {
        amounts: x.clone(),
        increase: 0,
        cost: 0,
    };
    struct Search<'a> {
        eval: &'a mut Evaluator,
        free: &'a [usize],
        costs: &'a [u64],
        caps: &'a [u64],
        base: i64,
        best: &'a mut BruteSolution,
    }
    fn go(s: &mut Search<'_>, i: usize, spent: u64, left: u64, x: &mut [u64]) {
        if i == s.free.len() {
            let inc = (s.eval.mst(x) - s.base) as u64;
            if inc > s.best.increase || (inc == s.best.increase && spent < s.best.cost) {
                *s.best = BruteSolution {
                    amounts: x.to_vec(),
                    increase: inc,
                    cost: spent,
                };
            }
            return;
        }
        let e = s.free[i];
        let top = s.caps[i].min(left / s.costs[i]);
        for a in 0..=top {
            x[e] = a;
            go(s, i + 1, spent + a * s.costs[i], left - a * s.costs[i], x);
        }
        x[e] = 0;
    }
    let mut search = Search {
        eval: &mut eval,
        free: &free,
        costs: &costs,
        caps: &caps,
        base: base_mst,
        best: &mut best,
    };
    go(&mut search, 0, 0, budget, &mut x);
    if eval.evaluations > EVALUATION_LIMIT {
        return Err(Error::SizeGuard("evaluation budget exhausted".into()));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn triangle(w: [u64; 3], c: [u64; 3]) -> WeightedGraph {
        WeightedGraph::uncapped(
            3,
            &[(0, 1, w[0], c[0]), (0, 2, w[1], c[1]), (1, 2, w[2], c[2])],
        )
        .unwrap()
    }

    #[test]
    fn tree_enumeration_counts() {
        let k4 = WeightedGraph::uncapped(
            4,
            &[
                (0, 1, 0, 1),
                (0, 2, 0, 1),
                (0, 3, 0, 1),
                (1, 2, 0, 1),
                (1, 3, 0, 1),
                (2, 3, 0, 1),
            ],
        )
        .unwrap();
        assert_eq!(SpanningTrees::enumerate(&k4).unwrap().trees().len(), 16);
        let tri = triangle([0, 0, 0], [1, 1, 1]);
        assert_eq!(SpanningTrees::enumerate(&tri).unwrap().trees().len(), 3);
    }

    #[test]
    fn brute_targeted_examples() {
        let tri = triangle([0, 0, 0], [1, 1, 1]);
        assert_eq!(brute_targeted(&tri, 1).unwrap().cost, 2);
        let path = WeightedGraph::uncapped(4, &[(0, 1, 0, 3), (1, 2, 0, 2), (2, 3, 0, 4)]).unwrap();
        assert_eq!(brute_targeted(&path, 3).unwrap().cost, 6);
        let fig = triangle([2, 1, 1], [20, 1, 1]);
        let s = brute_targeted(&fig, 3).unwrap();
        assert_eq!(s.cost, 4);
        assert_eq!(s.amounts, vec![0, 2, 2]);
    }

    #[test]
    fn brute_budgeted_examples() {
        let tri = triangle([0, 0, 0], [1, 1, 1]);
        assert_eq!(brute_budgeted(&tri, 3).unwrap().increase, 2);
        assert_eq!(brute_budgeted(&tri, 0).unwrap().increase, 0);
        let path = WeightedGraph::uncapped(4, &[(0, 1, 0, 1), (1, 2, 0, 1), (2, 3, 0, 1)]).unwrap();
        assert_eq!(brute_budgeted(&path, 4).unwrap().increase, 4);
        let fig = triangle([2, 1, 1], [20, 1, 1]);
        let s = brute_budgeted(&fig, 4).unwrap();
        assert_eq!((s.increase, s.cost), (3, 4));
    }

    #[test]
    fn capped_target_is_unreachable() {
        let g = WeightedGraph::new(2, [(0, 1, 0, 1, Some(1))]).unwrap();
        assert!(matches!(
            brute_targeted(&g, 2),
            Err(Error::Unreachable { .. })
        ));
    }

    #[test]
    fn pruning_keeps_results_on_dense_graph() {
        // K4 with one heavy edge: the oracle with and without pruning agree
        let g = WeightedGraph::uncapped(
            4,
            &[
                (0, 1, 0, 1),
                (0, 2, 0, 2),
                (0, 3, 1, 1),
                (1, 2, 0, 1),
                (1, 3, 0, 3),
                (2, 3, 2, 1),
            ],
        )
        .unwrap();
        for b in 0..6 {
            let pruned = brute_budgeted(&g, b).unwrap();
            let bound: Vec<u64> = g.edges().iter().map(|e| b / e.cost).collect();
            let mut best = (0i64, 0u64);
            let mut x = vec![0u64; 6];
            let trees = SpanningTrees::enumerate(&g).unwrap();
            let base = trees.mst_weight(&g.weights(&Perturbation::zero(&g)));
            loop {
                let cost: u64 = (0..6).map(|e| x[e] * g.edge(e).cost).sum();
                if cost <= b {
                    let w = g.weights(&Perturbation::from_integers(&g, &x).unwrap());
                    let inc = (trees.mst_weight(&w) - base).to_integer() as i64;
                    if inc > best.0 || (inc == best.0 && cost < best.1) {
                        best = (inc, cost);
                    }
                }
                let mut i = 0;
                while i < 6 && x[i] == bound[i] {
                    x[i] = 0;
                    i += 1;
                }
                if i == 6 {
                    break;
                }
                x[i] += 1;
            }
            assert_eq!((pruned.increase as i64, pruned.cost), best, "budget {b}");
        }
    }

    #[test]
    fn brute_strength_examples() {
        let tri = CompactedGraph::from_edges(3, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap();
        assert_eq!(brute_strength(&tri).unwrap().sigma, Rational::new(3, 2));
        let edge = CompactedGraph::from_edges(2, &[(0, 1, 7)]).unwrap();
        assert_eq!(brute_strength(&edge).unwrap().sigma, int(7));
        let star = CompactedGraph::from_edges(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        assert_eq!(brute_strength(&star).unwrap().sigma, int(1));
    }

    #[test]
    fn min_kcut_examples() {
        let tri = BaseGraph {
            vertex_count: 3,
            edges: vec![(0, 1), (0, 2), (1, 2)],
        };
        assert_eq!(brute_min_kcut(&tri, 1).unwrap(), 0);
        assert_eq!(brute_min_kcut(&tri, 2).unwrap(), 2);
        assert_eq!(brute_min_kcut(&tri, 3).unwrap(), 3);
        assert!(brute_min_kcut(&tri, 4).is_err());
    }

    #[test]
    fn combinations_enumerate_all() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(4, 0).count(), 1);
        assert_eq!(combinations(3, 4).count(), 0);
    }
}
