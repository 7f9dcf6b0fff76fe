//! Weighted multigraphs, perturbations, Kruskal evaluation, weight-class
//! compaction and coverage.

use crate::rational::int;
use crate::{Error, Rational, Result};
use num_traits::Zero;

pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
    pub weight: u64,
    pub cost: u64,
    /// Maximum total upgrade; `None` is unbounded.
    pub cap: Option<u64>,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Connected multigraph with integral base weights, positive unit costs and
/// optional upgrade caps. Edge ids are dense and follow insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl WeightedGraph {
    /// Builds a graph from `(u, v, weight, cost, cap)` tuples.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64, u64, Option<u64>)>,
    {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        let mut out = Vec::new();
        for (id, (u, v, weight, cost, cap)) in edges.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(Error::EndpointOutOfRange {
                        edge: id,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { edge: id });
            }
            if cost == 0 {
                return Err(Error::ZeroCost { edge: id });
            }
            out.push(Edge {
                id,
                u,
                v,
                weight,
                cost,
                cap,
            });
        }
        let g = WeightedGraph {
            vertex_count,
            edges: out,
        };
        if count_components(vertex_count, g.edges.iter().map(|e| (e.u, e.v))) != 1 {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Uncapped graph from `(u, v, weight, cost)` tuples.
    pub fn uncapped(vertex_count: usize, edges: &[(usize, usize, u64, u64)]) -> Result<Self> {
        Self::new(
            vertex_count,
            edges.iter().map(|&(u, v, w, c)| (u, v, w, c, None)),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn max_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).max().unwrap_or(0)
    }

    pub fn has_caps(&self) -> bool {
        self.edges.iter().any(|e| e.cap.is_some())
    }

    pub fn has_uniform_weights(&self) -> bool {
        self.edges.windows(2).all(|p| p[0].weight == p[1].weight)
    }

    /// Current weights `w + x`, indexed by edge id.
    pub fn weights(&self, x: &Perturbation) -> Vec<Rational> {
        self.edges
            .iter()
            .zip(&x.amounts)
            .map(|(e, a)| int(e.weight as i128) + a)
            .collect()
    }

    pub fn cost_of(&self, ids: &[EdgeId]) -> u64 {
        ids.iter().map(|&id| self.edges[id].cost).sum()
    }

    pub(crate) fn check_ids(&self, ids: &[EdgeId]) -> Result<()> {
        match ids.iter().find(|&&id| id >= self.edges.len()) {
            Some(&edge) => Err(Error::UnknownEdge { edge }),
            None => Ok(()),
        }
    }
}

/// Per-edge upgrade amounts. `integral` holds exactly when every amount is
/// an integer; amounts never exceed caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perturbation {
    amounts: Vec<Rational>,
    integral: bool,
}

impl Perturbation {
    pub fn zero(g: &WeightedGraph) -> Self {
        Perturbation {
            amounts: vec![Rational::zero(); g.edge_count()],
            integral: true,
        }
    }

    pub fn new(g: &WeightedGraph, amounts: Vec<Rational>) -> Result<Self> {
        if amounts.len() != g.edge_count() {
            return Err(Error::PerturbationLength {
                expected: g.edge_count(),
                got: amounts.len(),
            });
        }
        for (e, a) in g.edges().iter().zip(&amounts) {
            if a < &Rational::zero() {
                return Err(Error::NegativeAmount { edge: e.id });
            }
            if let Some(cap) = e.cap {
                if a > &int(cap as i128) {
                    return Err(Error::CapExceeded { edge: e.id, cap });
                }
            }
        }
        let integral = amounts.iter().all(|a| a.is_integer());
        Ok(Perturbation { amounts, integral })
    }

    pub fn from_integers(g: &WeightedGraph, amounts: &[u64]) -> Result<Self> {
        Self::new(g, amounts.iter().map(|&a| int(a as i128)).collect())
    }

    pub fn amounts(&self) -> &[Rational] {
        &self.amounts
    }

    pub fn amount(&self, e: EdgeId) -> &Rational {
        &self.amounts[e]
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Integral amounts; `None` if some amount is fractional.
    pub fn as_integers(&self) -> Option<Vec<u64>> {
        if !self.integral {
            return None;
        }
        Some(self.amounts.iter().map(|a| *a.numer() as u64).collect())
    }

    pub fn total_cost(&self, g: &WeightedGraph) -> Rational {
        g.edges()
            .iter()
            .zip(&self.amounts)
            .map(|(e, a)| a * int(e.cost as i128))
            .sum()
    }

    /// Raises every edge of `set` by `delta`. Caller guarantees cap respect.
    pub(crate) fn lift(&mut self, set: &[EdgeId], delta: &Rational) {
        for &e in set {
            self.amounts[e] += delta;
        }
        self.integral = self.integral && delta.is_integer();
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

pub(crate) fn count_components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut dsu = Dsu::new(n);
    let mut count = n;
    for (u, v) in edges {
        if dsu.union(u, v) {
            count -= 1;
        }
    }
    count
}

/// MST weight for explicit current weights.
pub(crate) fn mst_weight_of(g: &WeightedGraph, weights: &[Rational]) -> Rational {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let mut dsu = Dsu::new(g.vertex_count());
    let mut total = Rational::zero();
    for e in order {
        let edge = g.edge(e);
        if dsu.union(edge.u, edge.v) {
            total += &weights[e];
        }
    }
    total
}

/// Minimum spanning tree weight under `w + x`.
pub fn mst_weight(g: &WeightedGraph, x: &Perturbation) -> Rational {
    mst_weight_of(g, &g.weights(x))
}

/// Coverage for explicit weights and a membership mask.
pub(crate) fn coverage_of(g: &WeightedGraph, weights: &[Rational], in_s: &[bool]) -> usize {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    // non-S edges first within a weight class
    order.sort_by(|&a, &b| {
        weights[a]
            .cmp(&weights[b])
            .then(in_s[a].cmp(&in_s[b]))
            .then(a.cmp(&b))
    });
    let mut dsu = Dsu::new(g.vertex_count());
    let mut count = 0;
    for e in order {
        let edge = g.edge(e);
        if dsu.union(edge.u, edge.v) && in_s[e] {
            count += 1;
        }
    }
    count
}

pub(crate) fn mask(m: usize, set: &[EdgeId]) -> Vec<bool> {
    let mut in_s = vec![false; m];
    for &e in set {
        in_s[e] = true;
    }
    in_s
}

/// Minimum number of edges of `set` contained in any minimum spanning tree
/// under `w + x`.
pub fn coverage(set: &[EdgeId], g: &WeightedGraph, x: &Perturbation) -> Result<usize> {
    g.check_ids(set)?;
    Ok(coverage_of(g, &g.weights(x), &mask(g.edge_count(), set)))
}

/// Edges whose current weight is at most that of `e`, including `e`.
pub fn sm_eq(e: EdgeId, g: &WeightedGraph, x: &Perturbation) -> Result<Vec<EdgeId>> {
    g.check_ids(&[e])?;
    let w = g.weights(x);
    Ok((0..g.edge_count()).filter(|&f| w[f] <= w[e]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactedEdge {
    /// Original edge id.
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
    pub cost: u64,
}

/// Graph of one weight class: lighter edges contracted, heavier deleted,
/// self-loops dropped. Classes are numbered by their smallest original vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactedGraph {
    pub pivot: Rational,
    vertex_count: usize,
    class_of: Vec<usize>,
    edges: Vec<CompactedEdge>,
}

impl CompactedGraph {
    /// A standalone multigraph on `vertex_count` vertices whose `(u, v, cost)`
    /// edges get ids in order. Each vertex is its own class.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut out = Vec::new();
        for (id, &(u, v, cost)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(Error::EndpointOutOfRange {
                        edge: id,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { edge: id });
            }
            out.push(CompactedEdge { id, u, v, cost });
        }
        Ok(CompactedGraph {
            pivot: Rational::zero(),
            vertex_count,
            class_of: (0..vertex_count).collect(),
            edges: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[CompactedEdge] {
        &self.edges
    }

    /// Contraction class of each original vertex.
    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    /// Original vertices of each class, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.edges.iter().any(|e| e.id == id)
    }

    pub fn component_count(&self) -> usize {
        count_components(self.vertex_count, self.edges.iter().map(|e| (e.u, e.v)))
    }

    /// Connected components as ascending vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.vertex_count);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        let mut index = vec![usize::MAX; self.vertex_count];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.vertex_count {
            let r = dsu.find(v);
            if index[r] == usize::MAX {
                index[r] = out.len();
                out.push(Vec::new());
            }
            out[index[r]].push(v);
        }
        out
    }

    /// The subgraph induced by `vertices` (ascending), renumbered densely.
    pub(crate) fn induced(&self, vertices: &[usize]) -> CompactedGraph {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.u] != usize::MAX && local[e.v] != usize::MAX)
            .map(|e| CompactedEdge {
                id: e.id,
                u: local[e.u],
                v: local[e.v],
                cost: e.cost,
            })
            .collect();
        CompactedGraph {
            pivot: self.pivot,
            vertex_count: vertices.len(),
            class_of: (0..vertices.len()).collect(),
            edges,
        }
    }
}

/// Compaction for explicit weights; pivot-weight edges flagged by `frozen`
/// are contracted along with the lighter ones.
pub(crate) fn compact_weights(
    g: &WeightedGraph,
    weights: &[Rational],
    pivot: &Rational,
    frozen: &[bool],
) -> CompactedGraph {
    let mut dsu = Dsu::new(g.vertex_count());
    for e in g.edges() {
        let w = &weights[e.id];
        if w < pivot || (w == pivot && frozen[e.id]) {
            dsu.union(e.u, e.v);
        }
    }
    let mut class_of = vec![usize::MAX; g.vertex_count()];
    let mut root_class = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for v in 0..g.vertex_count() {
        let r = dsu.find(v);
        if root_class[r] == usize::MAX {
            root_class[r] = next;
            next += 1;
        }
        class_of[v] = root_class[r];
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| &weights[e.id] == pivot && !frozen[e.id])
        .filter_map(|e| {
            let (cu, cv) = (class_of[e.u], class_of[e.v]);
            (cu != cv).then_some(CompactedEdge {
                id: e.id,
                u: cu,
                v: cv,
                cost: e.cost,
            })
        })
        .collect();
    CompactedGraph {
        pivot: *pivot,
        vertex_count: next,
        class_of,
        edges,
    }
}

/// Compacted graph of the weight class `pivot` under `w + x`.
pub fn compact(g: &WeightedGraph, x: &Perturbation, pivot: &Rational) -> Result<CompactedGraph> {
    let weights = g.weights(x);
    if !weights.iter().any(|w| w == pivot) {
        return Err(Error::IllFormedPivot(*pivot));
    }
    Ok(compact_weights(
        g,
        &weights,
        pivot,
        &vec![false; g.edge_count()],
    ))
}

/// Components of `h` minus `set`, less the components of `h`.
pub fn components_increase(set: &[EdgeId], h: &CompactedGraph) -> Result<usize> {
    if let Some(&edge) = set.iter().find(|&&id| !h.contains(id)) {
        return Err(Error::EdgeNotInCompaction { edge });
    }
    let removed = |e: &&CompactedEdge| !set.contains(&e.id);
    let after = count_components(
        h.vertex_count,
        h.edges.iter().filter(removed).map(|e| (e.u, e.v)),
    );
    Ok(after - h.component_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_coverage;
    use proptest::prelude::*;

    pub(crate) fn triangle(w: [u64; 3], c: [u64; 3]) -> WeightedGraph {
        // AB, AC, BC with A=0, B=1, C=2
        WeightedGraph::uncapped(
            3,
            &[(0, 1, w[0], c[0]), (0, 2, w[1], c[1]), (1, 2, w[2], c[2])],
        )
        .unwrap()
    }

    fn path3() -> WeightedGraph {
        WeightedGraph::uncapped(4, &[(0, 1, 0, 1), (1, 2, 0, 1), (2, 3, 0, 1)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            WeightedGraph::uncapped(2, &[(0, 0, 1, 1)]),
            Err(Error::SelfLoop { edge: 0 })
        );
        assert_eq!(
            WeightedGraph::uncapped(2, &[(0, 1, 1, 0)]),
            Err(Error::ZeroCost { edge: 0 })
        );
        assert_eq!(
            WeightedGraph::uncapped(3, &[(0, 1, 1, 1)]),
            Err(Error::Disconnected)
        );
        assert!(matches!(
            WeightedGraph::uncapped(2, &[(0, 2, 1, 1)]),
            Err(Error::EndpointOutOfRange { vertex: 2, .. })
        ));
        assert!(WeightedGraph::uncapped(1, &[]).is_ok());
        assert!(WeightedGraph::uncapped(2, &[(0, 1, 0, 1), (1, 0, 3, 2)]).is_ok());
    }

    #[test]
    fn perturbation_invariants() {
        let g = WeightedGraph::new(2, [(0, 1, 0, 2, Some(1))]).unwrap();
        assert!(Perturbation::from_integers(&g, &[2]).is_err());
        let x = Perturbation::new(&g, vec![Rational::new(1, 2)]).unwrap();
        assert!(!x.is_integral());
        assert_eq!(x.total_cost(&g), int(1));
        assert!(Perturbation::new(&g, vec![int(-1)]).is_err());
        assert!(Perturbation::new(&g, vec![]).is_err());
    }

    #[test]
    fn mst_weight_examples() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        assert_eq!(mst_weight(&g, &Perturbation::zero(&g)), int(0));
        let p = path3();
        let x = Perturbation::from_integers(&p, &[0, 2, 2]).unwrap();
        assert_eq!(mst_weight(&p, &x), int(4));
        let t = triangle([2, 1, 1], [20, 1, 1]);
        let x = Perturbation::from_integers(&t, &[0, 2, 2]).unwrap();
        assert_eq!(mst_weight(&t, &x), int(5));
    }

    #[test]
    fn compact_examples() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let h = compact(&g, &Perturbation::zero(&g), &int(0)).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges().len(), 3);

        let t = triangle([2, 1, 1], [1, 1, 1]);
        let x = Perturbation::zero(&t);
        let h1 = compact(&t, &x, &int(1)).unwrap();
        assert_eq!(h1.vertex_count(), 3);
        assert_eq!(
            h1.edges().iter().map(|e| e.id).collect::<Vec<_>>(),
            vec![1, 2]
        );
        let h2 = compact(&t, &x, &int(2)).unwrap();
        assert_eq!(h2.vertex_count(), 1);
        assert!(h2.edges().is_empty());
        assert_eq!(h2.classes(), vec![vec![0, 1, 2]]);

        assert_eq!(compact(&t, &x, &int(3)), Err(Error::IllFormedPivot(int(3))));
    }

    #[test]
    fn coverage_examples() {
        let p = path3();
        let zero = Perturbation::zero(&p);
        assert_eq!(coverage(&[1, 2], &p, &zero), Ok(2));
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let zero = Perturbation::zero(&g);
        assert_eq!(coverage(&[0], &g, &zero), Ok(0));
        assert_eq!(coverage(&[0, 1, 2], &g, &zero), Ok(2));
        assert_eq!(coverage(&[], &g, &zero), Ok(0));
        assert_eq!(
            coverage(&[7], &g, &zero),
            Err(Error::UnknownEdge { edge: 7 })
        );
    }

    #[test]
    fn components_increase_examples() {
        let g = triangle([0, 0, 0], [1, 1, 1]);
        let h = compact(&g, &Perturbation::zero(&g), &int(0)).unwrap();
        assert_eq!(components_increase(&[0, 1, 2], &h), Ok(2));
        assert_eq!(components_increase(&[], &h), Ok(0));
        let p = path3();
        let h = compact(&p, &Perturbation::zero(&p), &int(0)).unwrap();
        assert_eq!(components_increase(&[1], &h), Ok(1));

        let t = triangle([2, 1, 1], [1, 1, 1]);
        let h1 = compact(&t, &Perturbation::zero(&t), &int(1)).unwrap();
        assert_eq!(
            components_increase(&[0], &h1),
            Err(Error::EdgeNotInCompaction { edge: 0 })
        );
    }

    #[test]
    fn sm_eq_examples() {
        let t = triangle([2, 1, 1], [1, 1, 1]);
        assert_eq!(sm_eq(1, &t, &Perturbation::zero(&t)), Ok(vec![1, 2]));
        let g = triangle([0, 0, 0], [1, 1, 1]);
        assert_eq!(sm_eq(2, &g, &Perturbation::zero(&g)), Ok(vec![0, 1, 2]));
        let p = path3();
        let x = Perturbation::from_integers(&p, &[2, 2, 0]).unwrap();
        assert_eq!(sm_eq(2, &p, &x), Ok(vec![2]));
    }

    fn small_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize, u64, u64)>)> {
        (2usize..=5).prop_flat_map(|n| {
            let spine = proptest::collection::vec((0u64..3, 1u64..4), n - 1);
            let extra =
                proptest::collection::vec((0..n, 0..n, 0u64..3, 1u64..4), 0..=(8 - (n - 1)));
            (Just(n), spine, extra).prop_map(|(n, spine, extra)| {
                let mut edges: Vec<_> = spine
                    .iter()
                    .enumerate()
                    .map(|(i, &(w, c))| (i / 2, i + 1, w, c))
                    .collect();
                edges.extend(extra.into_iter().filter(|e| e.0 != e.1));
                edges.truncate(8);
                (n, edges)
            })
        })
    }

    proptest! {
        #[test]
        fn kruskal_coverage_matches_tree_enumeration((n, edges) in small_graph(), bits in any::<u16>()) {
            let g = WeightedGraph::uncapped(n, &edges).unwrap();
            let x = Perturbation::zero(&g);
            let set: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| bits >> e & 1 == 1).collect();
            prop_assert_eq!(coverage(&set, &g, &x).unwrap(), brute_coverage(&g, &g.weights(&x), &set));
        }

        #[test]
        fn coverage_extremes((n, edges) in small_graph()) {
            let g = WeightedGraph::uncapped(n, &edges).unwrap();
            let x = Perturbation::zero(&g);
            let all: Vec<EdgeId> = (0..g.edge_count()).collect();
            prop_assert_eq!(coverage(&[], &g, &x).unwrap(), 0);
            prop_assert_eq!(coverage(&all, &g, &x).unwrap(), n - 1);
        }

        #[test]
        fn single_class_coverage_is_components_increase((n, edges) in small_graph(), bits in any::<u16>()) {
            let g = WeightedGraph::uncapped(n, &edges).unwrap();
            let x = Perturbation::zero(&g);
            let w = g.weights(&x);
            for pivot in w.iter() {
                let h = compact(&g, &x, pivot).unwrap();
                let set: Vec<EdgeId> = h.edges().iter().map(|e| e.id).filter(|&e| bits >> e & 1 == 1).collect();
                prop_assert_eq!(coverage(&set, &g, &x).unwrap(), components_increase(&set, &h).unwrap());
            }
        }

        #[test]
        fn coverage_monotone_under_nested_sm_eq((n, edges) in small_graph(), bits in any::<u16>(), bumps in proptest::collection::vec(0u64..3, 8)) {
            // raising edges outside S only shrinks sm_eq(e) for e in S
            let g = WeightedGraph::uncapped(n, &edges).unwrap();
            let m = g.edge_count();
            let set: Vec<EdgeId> = (0..m).filter(|&e| bits >> e & 1 == 1).collect();
            let x = Perturbation::zero(&g);
            let amounts: Vec<u64> = (0..m).map(|e| if set.contains(&e) { 0 } else { bumps[e] }).collect();
            let x2 = Perturbation::from_integers(&g, &amounts).unwrap();
            for &e in &set {
                let a = sm_eq(e, &g, &x).unwrap();
                prop_assert!(sm_eq(e, &g, &x2).unwrap().iter().all(|f| a.contains(f)));
            }
            prop_assert!(coverage(&set, &g, &x).unwrap() <= coverage(&set, &g, &x2).unwrap());
        }
    }
}
