use crate::oracle::BaseGraph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Connected simple graphs on `2..=max_vertices` vertices with at most
/// `max_edges` edges, one per isomorphism class, in a fixed order.
pub fn connected_graphs(max_vertices: usize, max_edges: usize) -> Vec<BaseGraph> {
    let mut out = Vec::new();
    for n in 2..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let index = |u: usize, v: usize| {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            pairs.iter().position(|&p| p == (a, b)).unwrap()
        };
        let perms = permutations(n);
        // image of each pair index under each permutation
        let maps: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
            .collect();
        let mut seen = std::collections::HashSet::new();
        let total = pairs.len();
        for mask in 0u64..(1u64 << total) {
            let m = mask.count_ones() as usize;
            if m < n - 1 || m > max_edges {
                continue;
            }
            let edges: Vec<(usize, usize)> = (0..total)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            if !connected(n, &edges) {
                continue;
            }
            let canon = maps
                .iter()
                .map(|map| {
                    (0..total)
                        .filter(|&i| mask >> i & 1 == 1)
                        .fold(0u64, |acc, i| acc | 1 << map[i])
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                let edges = (0..total)
                    .filter(|&i| canon >> i & 1 == 1)
                    .map(|i| pairs[i])
                    .collect();
                out.push(BaseGraph {
                    vertex_count: n,
                    edges,
                });
            }
        }
    }
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut count = n;
    for &(u, v) in edges {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count == 1
}

/// Every set of at most `max_arcs` arcs on `n` labelled vertices, without
/// self-loops or parallel arcs, as arc lists.
pub fn digraphs(n: usize, max_arcs: usize) -> Vec<Vec<(usize, usize)>> {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    fn go(
        arcs: &[(usize, usize)],
        i: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == arcs.len() {
            out.push(cur.clone());
            return;
        }
        go(arcs, i + 1, left, cur, out);
        if left > 0 {
            cur.push(arcs[i]);
            go(arcs, i + 1, left - 1, cur, out);
            cur.pop();
        }
    }
    go(&arcs, 0, max_arcs, &mut Vec::new(), &mut out);
    out
}
