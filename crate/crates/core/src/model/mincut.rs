//! Global minimum cut of a small weighted undirected graph (Stoer-Wagner).
//!
//! Runs on a dense adjacency matrix in `O(n^3)`, which is plenty for the
//! assembly sizes handled here.

/// A minimum cut: its total crossing weight and the vertices of one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub weight: u64,
    pub side: Vec<usize>,
}

/// Global minimum cut of the graph on `n` vertices given by `edges`
/// (`(u, v, w)` triples, parallel edges summed). Returns `None` for fewer than
/// two vertices, where no cut exists.
pub fn stoer_wagner(n: usize, edges: &[(usize, usize, u64)]) -> Option<MinCut> {
    if n < 2 {
        return None;
    }
    let mut w = vec![vec![0u64; n]; n];
    for &(u, v, wt) in edges {
        if u != v {
            w[u][v] += wt;
            w[v][u] += wt;
        }
    }
    let mut groups: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<MinCut> = None;

    let mut attach = vec![0u64; n];
    let mut added = vec![false; n];
    while active.len() > 1 {
        for &v in &active {
            attach[v] = 0;
            added[v] = false;
        }
        let mut prev = active[0];
        let mut last = active[0];
        let mut cut_of_phase = 0;
        for _ in 0..active.len() {
            // most tightly connected vertex not yet added; ties go to the
            // earliest in `active` so the result is reproducible
            let mut pick = None;
            for &v in &active {
                if !added[v] && pick.is_none_or(|p: usize| attach[v] > attach[p]) {
                    pick = Some(v);
                }
            }
            let v = pick.expect("an unadded vertex remains");
            added[v] = true;
            prev = last;
            last = v;
            cut_of_phase = attach[v];
            for &u in &active {
                if !added[u] {
                    attach[u] += w[v][u];
                }
            }
        }

        if best.as_ref().is_none_or(|b| cut_of_phase < b.weight) {
            let mut side = groups[last].clone();
            side.sort_unstable();
            best = Some(MinCut { weight: cut_of_phase, side });
        }

        // merge `last` into `prev`
        for &u in &active {
            if u != prev && u != last {
                w[prev][u] += w[last][u];
                w[u][prev] = w[prev][u];
            }
        }
        let moved = std::mem::take(&mut groups[last]);
        groups[prev].extend(moved);
        active.retain(|&u| u != last);
    }
    best
}
