use crate::graph::{mst_weight_of, EdgeId};
use crate::oracle::SpanningTrees;
use crate::{Perturbation, Rational, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureViolation {
    pub tree: Vec<EdgeId>,
    pub edge: EdgeId,
    pub lifted_weight: Rational,
    pub cycle_max: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructureReport {
    /// Pairs (tree, lifted non-tree edge) examined.
    pub checked: usize,
    pub violations: Vec<StructureViolation>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every lifted edge outside a minimum spanning tree of
/// `w + x` weighs exactly the maximum of the rest of its fundamental cycle.
///
/// All minimum spanning trees are examined when the graph is small enough
/// to enumerate them; otherwise only the Kruskal tree.
pub fn optimality_structure_check(g: &WeightedGraph, x: &Perturbation) -> StructureReport {
    let weights = g.weights(x);
    let trees: Vec<Vec<EdgeId>> = match SpanningTrees::enumerate(g) {
        Ok(all) if g.edge_count() <= 16 => all
            .minimum_trees(&weights)
            .into_iter()
            .map(<[_]>::to_vec)
            .collect(),
        _ => vec![kruskal_tree(g, &weights)],
    };
    debug_assert!(trees
        .iter()
        .all(|t| t.iter().map(|&e| weights[e]).sum::<Rational>() == mst_weight_of(g, &weights)));
    let mut report = StructureReport::default();
    for tree in &trees {
        for e in g.edges() {
            if x.amount(e.id) == &Rational::default() || tree.contains(&e.id) {
                continue;
            }
            report.checked += 1;
            let path = tree_path(g, tree, e.u, e.v);
            let cycle_max = path
                .iter()
                .map(|&f| weights[f])
                .max()
                .expect("distinct endpoints");
            if cycle_max != weights[e.id] {
                report.violations.push(StructureViolation {
                    tree: tree.clone(),
                    edge: e.id,
                    lifted_weight: weights[e.id],
                    cycle_max,
                });
            }
        }
    }
    report
}

fn kruskal_tree(g: &WeightedGraph, weights: &[Rational]) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let mut dsu = crate::graph::Dsu::new(g.vertex_count());
    order
        .into_iter()
        .filter(|&e| dsu.union(g.edge(e).u, g.edge(e).v))
        .collect()
}

fn tree_path(g: &WeightedGraph, tree: &[EdgeId], from: usize, to: usize) -> Vec<EdgeId> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for &e in tree {
        adj[g.edge(e).u].push((g.edge(e).v, e));
        adj[g.edge(e).v].push((g.edge(e).u, e));
    }
    let mut prev: Vec<Option<(usize, EdgeId)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(a) = stack.pop() {
        for &(b, e) in &adj[a] {
            if !seen[b] {
                seen[b] = true;
                prev[b] = Some((a, e));
                stack.push(b);
            }
        }
    }
    let mut path = Vec::new();
    let mut b = to;
    while let Some((a, e)) = prev[b] {
        path.push(e);
        b = a;
    }
    path
}
