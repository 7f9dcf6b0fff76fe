//! Exact solvers for graphs whose edges all start at the same weight.
//!
//! At uniform weight the coverage of a set `F` is the number of extra
//! components of `G - F`, and coverage is supermodular. An optimal scheme is
//! a multiset of minimum i-cuts; uncrossing turns it into a chain whose
//! largest-first lifting realises the summed coverage exactly.

use crate::approx::{budgeted_approx, DiscreteSolution};
use crate::graph::{count_components, EdgeId};
use crate::partition::for_each_partition;
use crate::rational::int;
use crate::{Error, Rational, Result, WeightedGraph};
use num_traits::Signed;

/// Largest vertex count for exact i-cut enumeration.
pub const CUT_ENUMERATION_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KnapsackItem {
    pub weight: u64,
    pub profit: u64,
}

/// Edge sets with positive multiplicities. Sets are sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutFamily {
    pub sets: Vec<(Vec<EdgeId>, u64)>,
    /// Sets are totally ordered by inclusion.
    pub chain: bool,
}

fn is_subset(a: &[EdgeId], b: &[EdgeId]) -> bool {
    a.iter().all(|e| b.binary_search(e).is_ok())
}

fn comparable(a: &[EdgeId], b: &[EdgeId]) -> bool {
    is_subset(a, b) || is_subset(b, a)
}

impl CutFamily {
    pub fn new(sets: Vec<(Vec<EdgeId>, u64)>) -> Self {
        let mut family = CutFamily {
            sets: Vec::new(),
            chain: false,
        };
        for (mut set, y) in sets {
            set.sort_unstable();
            set.dedup();
            family.add(set, y);
        }
        family.chain = family.is_chain();
        family
    }

    fn add(&mut self, set: Vec<EdgeId>, y: u64) {
        if y == 0 || set.is_empty() {
            return;
        }
        match self.sets.iter_mut().find(|(s, _)| *s == set) {
            Some((_, m)) => *m += y,
            None => self.sets.push((set, y)),
        }
    }

    fn take(&mut self, i: usize) -> Vec<EdgeId> {
        self.sets[i].1 -= 1;
        let set = self.sets[i].0.clone();
        if self.sets[i].1 == 0 {
            self.sets.remove(i);
        }
        set
    }

    pub fn is_chain(&self) -> bool {
        self.sets
            .iter()
            .enumerate()
            .all(|(i, (a, _))| self.sets[i + 1..].iter().all(|(b, _)| comparable(a, b)))
    }

    /// `Σ y · c(F)`.
    pub fn cost(&self, g: &WeightedGraph) -> u64 {
        self.sets.iter().map(|(s, y)| y * g.cost_of(s)).sum()
    }

    /// `Σ y · |F|²`, which every uncrossing step strictly increases.
    pub fn potential(&self) -> u64 {
        self.sets
            .iter()
            .map(|(s, y)| y * (s.len() * s.len()) as u64)
            .sum()
    }

    /// `Σ y · coverage(F)` at uniform weight.
    pub fn coverage_sum(&self, g: &WeightedGraph) -> u64 {
        self.sets
            .iter()
            .map(|(s, y)| y * components_increase(g, s) as u64)
            .sum()
    }

    /// Per-edge amount when every set is lifted by its multiplicity.
    pub fn amounts(&self, g: &WeightedGraph) -> Vec<u64> {
        let mut x = vec![0; g.edge_count()];
        for (s, y) in &self.sets {
            for &e in s {
                x[e] += y;
            }
        }
        x
    }

    /// Sets from largest to smallest; only meaningful for a chain.
    pub fn largest_first(&self) -> Vec<(Vec<EdgeId>, u64)> {
        let mut sets = self.sets.clone();
        sets.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        sets
    }
}

/// Extra components of `G - set`.
fn components_increase(g: &WeightedGraph, set: &[EdgeId]) -> usize {
    let kept = g
        .edges()
        .iter()
        .filter(|e| set.binary_search(&e.id).is_err())
        .map(|e| (e.u, e.v));
    count_components(g.vertex_count(), kept) - 1
}

fn check_uniform(g: &WeightedGraph) -> Result<()> {
    if g.has_uniform_weights() {
        Ok(())
    } else {
        Err(Error::NonUniformWeights)
    }
}

fn crossing(g: &WeightedGraph, labels: &[usize]) -> Vec<EdgeId> {
    g.edges()
        .iter()
        .filter(|e| labels[e.u] != labels[e.v])
        .map(|e| e.id)
        .collect()
}

/// Global minimum cut by Stoer-Wagner; the side returned holds the last
/// vertex of the cheapest phase.
fn stoer_wagner(g: &WeightedGraph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut w = vec![vec![0u64; n]; n];
    for e in g.edges() {
        w[e.u][e.v] += e.cost;
        w[e.v][e.u] += e.cost;
    }
    // members[v] are the original vertices merged into v
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best = (u64::MAX, Vec::new());
    while alive.len() > 1 {
        let mut added = vec![false; n];
        let mut key = vec![0u64; n];
        let (mut prev, mut last) = (usize::MAX, usize::MAX);
        for _ in 0..alive.len() {
            let next = *alive
                .iter()
                .filter(|&&v| !added[v])
                .max_by(|&&a, &&b| key[a].cmp(&key[b]).then(b.cmp(&a)))
                .unwrap();
            added[next] = true;
            prev = last;
            last = next;
            for &v in &alive {
                if !added[v] {
                    key[v] += w[next][v];
                }
            }
        }
        if key[last] < best.0 {
            best = (key[last], members[last].clone());
        }
        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        for &v in &alive {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        alive.retain(|&v| v != last);
    }
    let mut side = vec![false; n];
    for v in best.1 {
        side[v] = true;
    }
    side
}

/// Cheapest edge set whose removal leaves at least `i` components.
pub fn min_i_cut(g: &WeightedGraph, i: usize) -> Result<Vec<EdgeId>> {
    let n = g.vertex_count();
    if i < 2 || i > n {
        return Err(Error::InvalidArgument(format!(
            "cut order {i} must lie in 2..={n}"
        )));
    }
    if i == 2 {
        let side = stoer_wagner(g);
        let labels: Vec<usize> = side.iter().map(|&s| s as usize).collect();
        return Ok(crossing(g, &labels));
    }
    if n > CUT_ENUMERATION_LIMIT {
        return Err(Error::SizeGuard(format!(
            "{n} vertices exceed the i-cut enumeration limit"
        )));
    }
    // merging blocks never costs more, so exactly i blocks suffice
    let mut best: Option<(u64, Vec<EdgeId>)> = None;
    for_each_partition(n, i, i, |labels, _| {
        let cost: u64 = g
            .edges()
            .iter()
            .filter(|e| labels[e.u] != labels[e.v])
            .map(|e| e.cost)
            .sum();
        if best.as_ref().is_none_or(|b| cost < b.0) {
            best = Some((cost, crossing(g, labels)));
        }
    });
    Ok(best.expect("i <= n admits a partition").1)
}

fn check_items(items: &[KnapsackItem]) -> Result<()> {
    if items.iter().any(|it| it.weight == 0 || it.profit == 0) {
        return Err(Error::InvalidArgument(
            "knapsack items need positive weight and profit".into(),
        ));
    }
    Ok(())
}

fn profit_of(items: &[KnapsackItem], x: &[u64]) -> u64 {
    items.iter().zip(x).map(|(it, k)| it.profit * k).sum()
}

/// Multiplicities of maximum total profit with total weight at most
/// `capacity`.
///
/// Let item `r` have the best profit-to-weight ratio. An optimum needs fewer
/// than `p_r` copies of every other item, since `p_r` copies of item `i` can
/// be swapped for `p_i` copies of item `r` at no loss. So the profit from
/// other items stays below `P = Σ_{i≠r} p_r p_i`. A least-weight table over
/// exact profits `0..=P` is combined with `k` extra copies of item `r`,
/// where `k` ranges over the few values that can leave less than `w_r` of
/// the capacity unused.
pub fn unbounded_knapsack(items: &[KnapsackItem], capacity: u64) -> Result<Vec<u64>> {
    check_items(items)?;
    if items.is_empty() {
        return Ok(Vec::new());
    }
    let r = (0..items.len())
        .max_by(|&a, &b| {
            let (ia, ib) = (items[a], items[b]);
            (ia.profit as u128 * ib.weight as u128)
                .cmp(&(ib.profit as u128 * ia.weight as u128))
                .then(b.cmp(&a))
        })
        .unwrap();
    let top = items[r];
    let bound: u64 = items
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, it)| top.profit * it.profit)
        .sum();
    let bound = bound as usize;
    // least[p] = least weight reaching profit exactly p, with its last item
    let mut least: Vec<Option<(u64, usize)>> = vec![None; bound + 1];
    least[0] = Some((0, usize::MAX));
    for p in 1..=bound {
        for (i, it) in items.iter().enumerate() {
            let Some(rest) = p.checked_sub(it.profit as usize) else {
                continue;
            };
            if let Some((w, _)) = least[rest] {
                let w = w + it.weight;
                if least[p].is_none_or(|(bw, _)| w < bw) {
                    least[p] = Some((w, i));
                }
            }
        }
    }
    let w_top = least.iter().flatten().map(|&(w, _)| w).max().unwrap_or(0);
    let k_max = capacity / top.weight;
    let k_min = (capacity.saturating_sub(w_top) / top.weight).saturating_sub(1);
    // (profit, -weight) of the best combination
    let mut best: Option<(u64, u64, u64, usize)> = None;
    for k in k_min..=k_max {
        let room = capacity - k * top.weight;
        let Some(p) = (0..=bound)
            .rev()
            .find(|&p| least[p].is_some_and(|(w, _)| w <= room))
        else {
            continue;
        };
        let profit = k * top.profit + p as u64;
        let weight = k * top.weight + least[p].unwrap().0;
        if best.is_none_or(|(bp, bw, _, _)| {
            (profit, std::cmp::Reverse(weight)) > (bp, std::cmp::Reverse(bw))
        }) {
            best = Some((profit, weight, k, p));
        }
    }
    let (_, _, k, mut p) = best.expect("k = 0 with profit 0 always fits");
    let mut x = vec![0u64; items.len()];
    x[r] += k;
    while p > 0 {
        let (_, i) = least[p].unwrap();
        x[i] += 1;
        p -= items[i].profit as usize;
    }
    debug_assert!(profit_of(items, &x) >= k * top.profit);
    Ok(x)
}

/// Multiplicities of least total weight whose total profit is at least
/// `target`.
pub fn profit_dp(items: &[KnapsackItem], target: u64) -> Result<Vec<u64>> {
    check_items(items)?;
    if target > 0 && items.is_empty() {
        return Err(Error::InvalidArgument(
            "no items to reach a positive profit".into(),
        ));
    }
    let t = target as usize;
    // least[p] = least weight reaching profit at least p, with its first item
    let mut least: Vec<(u64, usize)> = vec![(0, usize::MAX); t + 1];
    for p in 1..=t {
        least[p] = items
            .iter()
            .enumerate()
            .map(|(i, it)| (least[p.saturating_sub(it.profit as usize)].0 + it.weight, i))
            .min()
            .unwrap();
    }
    let mut x = vec![0u64; items.len()];
    let mut p = t;
    while p > 0 {
        let i = least[p].1;
        x[i] += 1;
        p = p.saturating_sub(items[i].profit as usize);
    }
    Ok(x)
}

/// One uncrossing step on the first incomparable pair: a unit of each is
/// replaced by their intersection and union. Returns false on a chain.
pub fn uncross_once(family: &mut CutFamily) -> bool {
    let n = family.sets.len();
    let Some((i, j)) = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| !comparable(&family.sets[i].0, &family.sets[j].0))
    else {
        family.chain = true;
        return false;
    };
    // remove the later index first so the earlier stays valid
    let b = family.take(j);
    let a = family.take(i);
    let inter: Vec<EdgeId> = a
        .iter()
        .copied()
        .filter(|e| b.binary_search(e).is_ok())
        .collect();
    let mut union: Vec<EdgeId> = a.iter().chain(&b).copied().collect();
    union.sort_unstable();
    union.dedup();
    family.add(inter, 1);
    family.add(union, 1);
    true
}

/// Uncrosses `family` into a chain of the same total cost and no smaller
/// summed coverage.
pub fn uncross(family: &CutFamily, g: &WeightedGraph) -> Result<CutFamily> {
    check_uniform(g)?;
    for (s, _) in &family.sets {
        g.check_ids(s)?;
    }
    let mut out = CutFamily::new(family.sets.clone());
    while uncross_once(&mut out) {}
    Ok(out)
}

fn check_caps(g: &WeightedGraph, bound: u64) -> Result<()> {
    match g.edges().iter().any(|e| e.cap.is_some_and(|c| c < bound)) {
        true => Err(Error::CappedUniform),
        false => Ok(()),
    }
}

/// Items `(c(F_{j+1}), j)` for `j = 1..=limit`, with `F_{j+1}` a minimum
/// cut into `j + 1` parts.
fn cut_items(g: &WeightedGraph, limit: u64) -> Result<(Vec<KnapsackItem>, Vec<Vec<EdgeId>>)> {
    let top = (limit as usize).min(g.vertex_count() - 1);
    let cuts = (1..=top)
        .map(|j| min_i_cut(g, j + 1))
        .collect::<Result<Vec<_>>>()?;
    let items = cuts
        .iter()
        .zip(1..)
        .map(|(f, j)| KnapsackItem {
            weight: g.cost_of(f),
            profit: j,
        })
        .collect();
    Ok((items, cuts))
}

fn chain_solution(
    g: &WeightedGraph,
    cuts: &[Vec<EdgeId>],
    x: &[u64],
    bound: Option<Rational>,
) -> Result<(DiscreteSolution, CutFamily)> {
    let family = CutFamily::new(cuts.iter().cloned().zip(x.iter().copied()).collect());
    let chain = uncross(&family, g)?;
    let solution = DiscreteSolution::from_amounts(g, &chain.amounts(g), bound, None)?;
    let lifted = chain.coverage_sum(g);
    if solution.achieved_increase != lifted {
        return Err(Error::Internal(format!(
            "chain lift raised the tree by {} instead of {lifted}",
            solution.achieved_increase
        )));
    }
    Ok((solution, chain))
}

/// Cheapest integral scheme raising the MST by at least `target` on a
/// uniform-weight graph.
pub fn uniform_targeted_exact(g: &WeightedGraph, target: u64) -> Result<DiscreteSolution> {
    uniform_targeted_chain(g, target).map(|(s, _)| s)
}

/// As [`uniform_targeted_exact`], also returning the lifted chain.
pub fn uniform_targeted_chain(
    g: &WeightedGraph,
    target: u64,
) -> Result<(DiscreteSolution, CutFamily)> {
    check_uniform(g)?;
    check_caps(g, target)?;
    if target > 0 && g.vertex_count() < 2 {
        return Err(Error::Unreachable {
            max_increase: Rational::default(),
        });
    }
    let (items, cuts) = cut_items(g, target)?;
    let x = profit_dp(&items, target)?;
    let (solution, chain) = chain_solution(g, &cuts, &x, None)?;
    if solution.achieved_increase < target {
        return Err(Error::Internal(format!(
            "chain reaches {} below {target}",
            solution.achieved_increase
        )));
    }
    Ok((solution, chain))
}

/// Largest MST increase within `budget` on a uniform-weight graph.
pub fn uniform_budgeted_exact(g: &WeightedGraph, budget: u64) -> Result<DiscreteSolution> {
    budgeted_exact_limited(g, budget, u64::MAX)
}

fn budgeted_exact_limited(
    g: &WeightedGraph,
    budget: u64,
    profit_limit: u64,
) -> Result<DiscreteSolution> {
    check_uniform(g)?;
    check_caps(g, budget)?;
    if g.vertex_count() < 2 {
        return DiscreteSolution::from_amounts(g, &[], None, None);
    }
    let (items, cuts) = cut_items(g, profit_limit)?;
    let x = unbounded_knapsack(&items, budget)?;
    Ok(chain_solution(g, &cuts, &x, None)?.0)
}

/// Budgeted scheme within a factor `1/2 - eps` of optimal: the rounded
/// greedy when its increase is at least `1/eps`, otherwise the better of it
/// and the exact solver restricted to increases below `2 + 2/eps`.
pub fn uniform_halfeps_approx(
    g: &WeightedGraph,
    budget: u64,
    eps: &Rational,
) -> Result<DiscreteSolution> {
    check_uniform(g)?;
    if !eps.is_positive() {
        return Err(Error::InvalidArgument("eps must be positive".into()));
    }
    let greedy = budgeted_approx(g, budget)?;
    if int(greedy.achieved_increase as i128) >= eps.recip() {
        return Ok(greedy);
    }
    let limit = (int(2) + int(2) / eps).ceil().to_integer() as u64;
    let exact = budgeted_exact_limited(g, budget, limit)?;
    let better = (exact.achieved_increase, std::cmp::Reverse(exact.cost))
        > (greedy.achieved_increase, std::cmp::Reverse(greedy.cost));
    Ok(if better { exact } else { greedy })
}

/// Lifts one global minimum cut by `floor(budget / c(cut))`, clipped to the
/// smallest cap on the cut.
pub fn mincut_lift_heuristic(g: &WeightedGraph, budget: u64) -> Result<DiscreteSolution> {
    check_uniform(g)?;
    if g.vertex_count() < 2 {
        return DiscreteSolution::from_amounts(g, &[], None, None);
    }
    let cut = min_i_cut(g, 2)?;
    let times = cut.iter().fold(budget / g.cost_of(&cut), |k, &e| {
        g.edge(e).cap.map_or(k, |c| k.min(c))
    });
    let mut x = vec![0; g.edge_count()];
    for &e in &cut {
        x[e] = times;
    }
    DiscreteSolution::from_amounts(g, &x, None, None)
}
