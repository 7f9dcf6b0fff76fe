//! Exhaustive upgrade search for flow and path networks. Flow values come
//! from enumerating every source-sink cut and path lengths from
//! Floyd-Warshall, independently of the min-cost flow solvers.

use crate::flows::FlowNetwork;
use crate::{Error, Result};

/// Upgrade vector with the objective it reaches and its cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteUpgrade {
    pub upgrades: Vec<u64>,
    pub value: u64,
    pub cost: u64,
}

const ASSIGNMENT_LIMIT: u128 = 50_000_000;
const CUT_VERTEX_LIMIT: usize = 16;

fn min_cut(net: &FlowNetwork, capacity: &[u64]) -> u64 {
    let n = net.vertex_count();
    let (s, t) = (net.source(), net.sink());
    let others: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
    let mut best = u64::MAX;
    for mask in 0u64..(1 << others.len()) {
        let mut side = vec![false; n];
        side[s] = true;
        for (b, &v) in others.iter().enumerate() {
            side[v] = mask >> b & 1 == 1;
        }
        let cut = net
            .arcs()
            .iter()
            .zip(capacity)
            .filter(|(a, _)| side[a.from] && !side[a.to])
            .map(|(_, c)| c)
            .sum();
        best = best.min(cut);
    }
    best
}

fn floyd(net: &FlowNetwork, length: &[u64]) -> Option<u64> {
    let n = net.vertex_count();
    let mut d = vec![vec![None::<u64>; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for (a, &len) in net.arcs().iter().zip(length) {
        let cur = &mut d[a.from][a.to];
        *cur = Some(cur.map_or(len, |c| c.min(len)));
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d[net.source()][net.sink()]
}

/// Best (highest value, then cheapest, then lexicographically smallest)
/// upgrade vector with cost at most `budget`.
fn search(net: &FlowNetwork, budget: u64, value: impl Fn(&[u64]) -> u64) -> Result<BruteUpgrade> {
    let bounds: Vec<u64> = net
        .arcs()
        .iter()
        .map(|a| (budget / a.cost).min(a.cap.unwrap_or(u64::MAX)))
        .collect();
    let count: u128 = bounds.iter().map(|&b| b as u128 + 1).product();
    if count > ASSIGNMENT_LIMIT {
        return Err(Error::SizeGuard(format!(
            "{count} upgrade vectors exceed the search limit"
        )));
    }
    let base: Vec<u64> = net.arcs().iter().map(|a| a.base).collect();
    let mut best: Option<BruteUpgrade> = None;
    let mut x = vec![0u64; bounds.len()];
    loop {
        let cost: u64 = net.arcs().iter().zip(&x).map(|(a, x)| a.cost * x).sum();
        if cost <= budget {
            let upgraded: Vec<u64> = base.iter().zip(&x).map(|(b, x)| b + x).collect();
            let v = value(&upgraded);
            let better = best.as_ref().is_none_or(|b| {
                (v, std::cmp::Reverse(cost)) > (b.value, std::cmp::Reverse(b.cost))
            });
            if better {
                best = Some(BruteUpgrade {
                    upgrades: x.clone(),
                    value: v,
                    cost,
                });
            }
        }
        // odometer in lexicographic order, last coordinate fastest
        let mut i = x.len();
        loop {
            if i == 0 {
                return Ok(best.expect("the zero vector is affordable"));
            }
            i -= 1;
            if x[i] < bounds[i] {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
    }
}

/// Exhaustive budgeted maximum-flow upgrade.
pub fn brute_mmf(net: &FlowNetwork, budget: u64) -> Result<BruteUpgrade> {
    if net.vertex_count() > CUT_VERTEX_LIMIT {
        return Err(Error::SizeGuard(format!(
            "{} vertices exceed the cut enumeration limit",
            net.vertex_count()
        )));
    }
    search(net, budget, |cap| min_cut(net, cap))
}

/// Exhaustive budgeted shortest-path lengthening.
pub fn brute_msp(net: &FlowNetwork, budget: u64) -> Result<BruteUpgrade> {
    let base: Vec<u64> = net.arcs().iter().map(|a| a.base).collect();
    floyd(net, &base).ok_or(Error::SinkUnreachable)?;
    search(net, budget, |len| {
        floyd(net, len).expect("sink stays reachable")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flows::Arc;

    #[test]
    fn tiny_networks() {
        let net = FlowNetwork::new(
            3,
            0,
            2,
            vec![
                Arc {
                    from: 0,
                    to: 1,
                    base: 1,
                    cost: 1,
                    cap: None,
                },
                Arc {
                    from: 1,
                    to: 2,
                    base: 2,
                    cost: 1,
                    cap: None,
                },
            ],
        )
        .unwrap();
        let mmf = brute_mmf(&net, 1).unwrap();
        assert_eq!((mmf.upgrades, mmf.value, mmf.cost), (vec![1, 0], 2, 1));
        let msp = brute_msp(&net, 2).unwrap();
        assert_eq!((msp.value, msp.cost), (5, 2));
        assert_eq!(
            msp.upgrades,
            vec![0, 2],
            "lexicographically smallest among ties"
        );
    }
}
