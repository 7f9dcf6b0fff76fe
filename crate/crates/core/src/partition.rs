//! Set-partition enumeration by restricted growth strings.
//!
//! A labelling `a` of `0..n` is a restricted growth string when `a[0] = 0`
//! and `a[i] <= 1 + max(a[..i])`; these are in bijection with partitions.

/// Calls `visit(labels, block_count)` for every partition of `0..n` whose
/// block count lies in `min_blocks..=max_blocks`.
pub fn for_each_partition<F>(n: usize, min_blocks: usize, max_blocks: usize, mut visit: F)
where
    F: FnMut(&[usize], usize),
{
    if n == 0 {
        if min_blocks == 0 {
            visit(&[], 0);
        }
        return;
    }
    let max_blocks = max_blocks.min(n);
    if min_blocks > max_blocks {
        return;
    }
    let mut labels = vec![0usize; n];
    // prefix_max[i] = max(labels[..=i])
    let mut prefix_max = vec![0usize; n];
    recurse(
        1,
        &mut labels,
        &mut prefix_max,
        min_blocks,
        max_blocks,
        &mut visit,
    );
}

fn recurse<F>(
    i: usize,
    labels: &mut [usize],
    prefix_max: &mut [usize],
    min_blocks: usize,
    max_blocks: usize,
    visit: &mut F,
) where
    F: FnMut(&[usize], usize),
{
    let n = labels.len();
    let used = prefix_max[i - 1] + 1;
    if i == n {
        if used >= min_blocks {
            visit(labels, used);
        }
        return;
    }
    // not enough positions left to open the required blocks
    if used + (n - i) < min_blocks {
        return;
    }
    let top = if used < max_blocks { used } else { used - 1 };
    for label in 0..=top {
        labels[i] = label;
        prefix_max[i] = prefix_max[i - 1].max(label);
        recurse(i + 1, labels, prefix_max, min_blocks, max_blocks, visit);
    }
}

/// Blocks of a labelling as ascending vertex lists, ordered by smallest member.
pub fn blocks(labels: &[usize], block_count: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); block_count];
    for (v, &b) in labels.iter().enumerate() {
        out[b].push(v);
    }
    out
}
