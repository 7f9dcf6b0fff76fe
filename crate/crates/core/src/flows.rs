//! Budgeted upgrading of a maximum flow and lengthening of a shortest path,
//! reduced to integral min-cost flows.

use crate::{Error, Result};

/// Arc of a [`FlowNetwork`]. `base` is a capacity for flow upgrading and a
/// length for path lengthening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub base: u64,
    pub cost: u64,
    /// Maximum upgrade; `None` is unbounded.
    pub cap: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    vertex_count: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(vertex_count: usize, source: usize, sink: usize, arcs: Vec<Arc>) -> Result<Self> {
        if source == sink {
            return Err(Error::InvalidArgument("source and sink must differ".into()));
        }
        for vertex in [source, sink] {
            if vertex >= vertex_count {
                return Err(Error::EndpointOutOfRange {
                    edge: usize::MAX,
                    vertex,
                    vertex_count,
                });
            }
        }
        for (i, a) in arcs.iter().enumerate() {
            for vertex in [a.from, a.to] {
                if vertex >= vertex_count {
                    return Err(Error::EndpointOutOfRange {
                        edge: i,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if a.from == a.to {
                return Err(Error::SelfLoop { edge: i });
            }
            if a.cost == 0 {
                return Err(Error::ZeroCost { edge: i });
            }
        }
        Ok(FlowNetwork {
            vertex_count,
            source,
            sink,
            arcs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Same network with `extra[i]` added to each arc's base value.
    pub fn upgraded(&self, extra: &[u64]) -> FlowNetwork {
        let arcs = self
            .arcs
            .iter()
            .zip(extra)
            .map(|(a, x)| Arc {
                base: a.base + x,
                ..a.clone()
            })
            .collect();
        FlowNetwork {
            arcs,
            ..self.clone()
        }
    }
}

const INF: i64 = 1 << 50;

/// Residual graph; arc `2i` is the i-th added arc and `2i + 1` its reverse.
struct Residual {
    head: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
    out: Vec<Vec<usize>>,
}

impl Residual {
    fn new(n: usize) -> Self {
        Residual {
            head: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
            out: vec![Vec::new(); n],
        }
    }

    fn add(&mut self, u: usize, v: usize, cap: i64, cost: i64) -> usize {
        let id = self.head.len();
        self.head.extend([v, u]);
        self.cap.extend([cap, 0]);
        self.cost.extend([cost, -cost]);
        self.out[u].push(id);
        self.out[v].push(id + 1);
        id
    }

    fn tail(&self, arc: usize) -> usize {
        self.head[arc ^ 1]
    }

    fn flow(&self, arc: usize) -> i64 {
        self.cap[arc ^ 1]
    }

    /// Bellman-Ford distances from `s` over arcs with residual capacity.
    fn distances(&self, s: usize) -> (Vec<Option<i64>>, Vec<usize>) {
        let n = self.out.len();
        let mut dist: Vec<Option<i64>> = vec![None; n];
        let mut prev = vec![usize::MAX; n];
        dist[s] = Some(0);
        for _ in 0..n {
            let mut changed = false;
            for u in 0..n {
                let Some(du) = dist[u] else { continue };
                for &a in &self.out[u] {
                    if self.cap[a] <= 0 {
                        continue;
                    }
                    let v = self.head[a];
                    let nd = du + self.cost[a];
                    if dist[v].is_none_or(|dv| nd < dv) {
                        dist[v] = Some(nd);
                        prev[v] = a;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (dist, prev)
    }

    /// Potentials with non-negative reduced cost on every residual arc;
    /// requires no negative residual cycle.
    fn potentials(&self) -> Vec<i64> {
        let n = self.out.len();
        let mut pi = vec![0i64; n];
        for _ in 0..n {
            let mut changed = false;
            for u in 0..n {
                for &a in &self.out[u] {
                    let v = self.head[a];
                    if self.cap[a] > 0 && pi[u] + self.cost[a] < pi[v] {
                        pi[v] = pi[u] + self.cost[a];
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        pi
    }

    fn path(&self, prev: &[usize], s: usize, t: usize) -> Vec<usize> {
        let mut arcs = Vec::new();
        let mut v = t;
        while v != s {
            let a = prev[v];
            arcs.push(a);
            v = self.tail(a);
        }
        arcs
    }

    fn push(&mut self, path: &[usize], amount: i64) {
        for &a in path {
            self.cap[a] -= amount;
            self.cap[a ^ 1] += amount;
        }
    }

    /// Edmonds-Karp on the current residual graph.
    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let n = self.out.len();
        let mut total = 0;
        loop {
            let mut prev = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &a in &self.out[u] {
                    let v = self.head[a];
                    if self.cap[a] > 0 && !seen[v] {
                        seen[v] = true;
                        prev[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let path = self.path(&prev, s, t);
            let b = path.iter().map(|&a| self.cap[a]).min().unwrap();
            self.push(&path, b);
            total += b;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: u64,
    /// Flow on each arc.
    pub flow: Vec<u64>,
}

/// Integral maximum flow with arc capacities `base`.
pub fn max_flow(net: &FlowNetwork) -> MaxFlow {
    let mut r = Residual::new(net.vertex_count);
    let ids: Vec<usize> = net
        .arcs
        .iter()
        .map(|a| r.add(a.from, a.to, a.base as i64, 0))
        .collect();
    let value = r.max_flow(net.source, net.sink) as u64;
    MaxFlow {
        value,
        flow: ids.iter().map(|&a| r.flow(a) as u64).collect(),
    }
}

/// Arc of a min-cost flow problem; `capacity: None` is unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostArc {
    pub from: usize,
    pub to: usize,
    pub capacity: Option<u64>,
    pub cost: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCostFlow {
    pub flow: Vec<u64>,
    pub cost: u64,
}

/// Cheapest integral flow of value `demand` from `source` to `sink`, by
/// successive shortest paths.
pub fn min_cost_flow(
    vertex_count: usize,
    arcs: &[CostArc],
    source: usize,
    sink: usize,
    demand: u64,
) -> Result<MinCostFlow> {
    let mut r = Residual::new(vertex_count);
    let ids: Vec<usize> = arcs
        .iter()
        .map(|a| {
            r.add(
                a.from,
                a.to,
                a.capacity.map_or(INF, |c| c as i64),
                a.cost as i64,
            )
        })
        .collect();
    let mut sent: i64 = 0;
    let mut cost: i64 = 0;
    while sent < demand as i64 {
        let (dist, prev) = r.distances(source);
        let Some(d) = dist[sink] else {
            return Err(Error::InfeasibleDemand {
                demand,
                max_flow: sent as u64,
            });
        };
        let path = r.path(&prev, source, sink);
        let b = path
            .iter()
            .map(|&a| r.cap[a])
            .min()
            .unwrap()
            .min(demand as i64 - sent);
        r.push(&path, b);
        sent += b;
        cost += b * d;
    }
    Ok(MinCostFlow {
        flow: ids.iter().map(|&a| r.flow(a) as u64).collect(),
        cost: cost as u64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MmfUpgrade {
    pub upgrades: Vec<u64>,
    pub flow_value: u64,
    pub cost: u64,
}

/// Paid copy of each arc next to its free copy; an unbounded cap is
/// replaced by the most the budget could buy.
fn doubled(net: &FlowNetwork, budget: u64) -> Vec<CostArc> {
    net.arcs
        .iter()
        .flat_map(|a| {
            let paid = a.cap.unwrap_or(budget / a.cost).min(budget / a.cost);
            [
                CostArc {
                    from: a.from,
                    to: a.to,
                    capacity: Some(a.base),
                    cost: 0,
                },
                CostArc {
                    from: a.from,
                    to: a.to,
                    capacity: Some(paid),
                    cost: a.cost,
                },
            ]
        })
        .collect()
}

/// Integral capacity upgrades of total cost at most `budget` maximising the
/// maximum flow.
pub fn mmf_upgrade(net: &FlowNetwork, budget: u64) -> MmfUpgrade {
    let f0 = max_flow(net).value;
    let arcs = doubled(net, budget);
    let attempt = |f: u64| {
        min_cost_flow(net.vertex_count, &arcs, net.source, net.sink, f)
            .ok()
            .filter(|m| m.cost <= budget)
    };
    // cheapest cost is non-decreasing in the flow value: binary search the
    // largest affordable value; every unit of extra flow costs at least one
    let (mut lo, mut hi) = (f0, f0 + budget);
    let mut best = min_cost_flow(net.vertex_count, &arcs, net.source, net.sink, f0)
        .expect("base flow is feasible");
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match attempt(mid) {
            Some(m) => {
                lo = mid;
                best = m;
            }
            None => hi = mid - 1,
        }
    }
    let upgrades: Vec<u64> = (0..net.arcs.len()).map(|i| best.flow[2 * i + 1]).collect();
    let flow_value = max_flow(&net.upgraded(&upgrades)).value;
    MmfUpgrade {
        cost: best.cost,
        upgrades,
        flow_value,
    }
}

/// Shortest `source`-`sink` distance under the given arc lengths.
pub fn shortest_path(net: &FlowNetwork, lengths: &[u64]) -> Option<u64> {
    let mut dist: Vec<Option<u64>> = vec![None; net.vertex_count];
    dist[net.source] = Some(0);
    for _ in 0..net.vertex_count {
        let mut changed = false;
        for (a, &len) in net.arcs.iter().zip(lengths) {
            if let Some(du) = dist[a.from] {
                if dist[a.to].is_none_or(|dv| du + len < dv) {
                    dist[a.to] = Some(du + len);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist[net.sink]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MspUpgrade {
    pub upgrades: Vec<u64>,
    pub length: u64,
    pub cost: u64,
}

/// Cheapest integral lengthening making every path at least `target` long,
/// or `None` if caps make it impossible.
///
/// Dual flow: each arc carries up to `c(e)` units at cost `w(e)` and, when
/// capped, any further units at cost `w(e) + u(e)`. Each augmenting unit of
/// path cost `d < target` contributes `target - d`. Closing the flow with a
/// sink-to-source arc of cost `-target` leaves a residual graph without
/// negative cycles; any feasible potential `π` on it is dual optimal and
/// gives the lengthening `x(uv) = max(0, π(v) - π(u) - w(uv))`.
pub fn min_lengthening(net: &FlowNetwork, target: u64) -> Option<(u64, Vec<u64>)> {
    let mut r = Residual::new(net.vertex_count);
    for a in &net.arcs {
        r.add(a.from, a.to, a.cost as i64, a.base as i64);
        if let Some(u) = a.cap {
            r.add(a.from, a.to, INF, (a.base + u) as i64);
        }
    }
    let l = target as i64;
    let mut gain: i64 = 0;
    let mut flow: i64 = 0;
    loop {
        let (dist, prev) = r.distances(net.source);
        match dist[net.sink] {
            Some(d) if d < l => {
                let path = r.path(&prev, net.source, net.sink);
                let b = path.iter().map(|&a| r.cap[a]).min().unwrap();
                if b >= INF / 2 {
                    return None;
                }
                r.push(&path, b);
                flow += b;
                gain += b * (l - d);
            }
            _ => break,
        }
    }
    if gain == 0 {
        return Some((0, vec![0; net.arcs.len()]));
    }
    let back = r.add(net.sink, net.source, INF, -l);
    r.push(&[back], flow);
    let pi = r.potentials();
    let x: Vec<u64> = net
        .arcs
        .iter()
        .map(|a| (pi[a.to] - pi[a.from] - a.base as i64).max(0) as u64)
        .collect();
    debug_assert_eq!(
        net.arcs
            .iter()
            .zip(&x)
            .map(|(a, x)| a.cost * x)
            .sum::<u64>(),
        gain as u64
    );
    Some((gain as u64, x))
}

/// Integral lengthenings of total cost at most `budget` maximising the
/// shortest `source`-`sink` path.
pub fn msp_upgrade(net: &FlowNetwork, budget: u64) -> Result<MspUpgrade> {
    let base: Vec<u64> = net.arcs.iter().map(|a| a.base).collect();
    let d0 = shortest_path(net, &base).ok_or(Error::SinkUnreachable)?;
    let attempt = |l: u64| min_lengthening(net, l).filter(|(c, _)| *c <= budget);
    // each unit of lengthening costs at least one
    let (mut lo, mut hi) = (d0, d0 + budget);
    let mut best = (0, vec![0; net.arcs.len()]);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match attempt(mid) {
            Some(found) => {
                lo = mid;
                best = found;
            }
            None => hi = mid - 1,
        }
    }
    let lengths: Vec<u64> = base.iter().zip(&best.1).map(|(b, x)| b + x).collect();
    let length = shortest_path(net, &lengths).expect("lengthening keeps reachability");
    Ok(MspUpgrade {
        upgrades: best.1,
        length,
        cost: best.0,
    })
}
