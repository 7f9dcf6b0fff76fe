use crate::{Error, Result, WeightedGraph};

/// Simple undirected graph without weights, as fed to the reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

fn check_base(base: &BaseGraph) -> Result<()> {
    if base.edges.is_empty() {
        return Err(Error::Disconnected);
    }
    // WeightedGraph::new re-validates endpoints and connectivity
    WeightedGraph::new(
        base.vertex_count,
        base.edges.iter().map(|&(u, v)| (u, v, 0, 1, None)),
    )
    .map(|_| ())
}

/// k-cut gadget: original edges get weight 0; each original edge `uv` gains
/// a clique of `clique_size` fresh vertices, every one joined to `u` and
/// `v`, all by weight-1 edges. Every cost is one and original edges keep
/// ids `0..m`.
///
/// Cheapest schemes never touch gadget edges once `clique_size` exceeds the
/// budget in play, so lifting original edges alone must raise the MST.
pub fn gen_kcut_gadget(base: &BaseGraph, clique_size: usize) -> Result<WeightedGraph> {
    if clique_size < 2 {
        return Err(Error::InvalidArgument(
            "clique size must be at least 2".into(),
        ));
    }
    check_base(base)?;
    let n = base.vertex_count;
    let mut edges: Vec<(usize, usize, u64, u64, Option<u64>)> = base
        .edges
        .iter()
        .map(|&(u, v)| (u, v, 0, 1, None))
        .collect();
    for (i, &(u, v)) in base.edges.iter().enumerate() {
        let first = n + i * clique_size;
        for a in first..first + clique_size {
            for b in a + 1..first + clique_size {
                edges.push((a, b, 1, 1, None));
            }
            edges.push((a, u, 1, 1, None));
            edges.push((a, v, 1, 1, None));
        }
    }
    WeightedGraph::new(n + base.edges.len() * clique_size, edges)
}

/// Capped instance whose budget sweep recovers minimum k-cuts: zero
/// weights, unit costs, caps of one.
pub fn gen_mmstu_instance(base: &BaseGraph) -> Result<WeightedGraph> {
    check_base(base)?;
    WeightedGraph::new(
        base.vertex_count,
        base.edges.iter().map(|&(u, v)| (u, v, 0, 1, Some(1))),
    )
}
