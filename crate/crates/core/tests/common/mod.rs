#![allow(dead_code)]

use randmis::exact::brute_force_mis;
use randmis::{Graph, GraphSpec};

pub fn gen(n: usize, p: f64, seed: u64) -> Graph {
    Graph::generate(&GraphSpec::new(n, p, seed)).unwrap()
}

/// Independence number by subset counting; independent of every solver in the crate.
pub fn alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "oracle is for small graphs");
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| {
                s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !g.has_edge(u, v))
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn alpha_brute(g: &Graph) -> usize {
    brute_force_mis(g, 24).unwrap().len()
}

/// Independence number by enumerating independent sets with a size bound.
/// Works past 64 vertices, unlike the crate's enumeration oracles.
pub fn alpha_search(g: &Graph) -> usize {
    fn rec(g: &Graph, cand: &[usize], size: usize, best: &mut usize) {
        *best = (*best).max(size);
        for (i, &v) in cand.iter().enumerate() {
            if size + cand.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&u| !g.has_edge(u, v))
                .collect();
            rec(g, &next, size + 1, best);
        }
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let mut best = 0;
    rec(g, &all, 0, &mut best);
    best
}
