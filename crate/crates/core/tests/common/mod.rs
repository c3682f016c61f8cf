#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shiftlab_core::specfile::parse_spec;
use shiftlab_core::{Matrix, MultiGraph, SearchBudget, TorusConfig};
use std::path::PathBuf;

pub const FIXTURES: [&str; 7] = [
    "three_symbols",
    "golden_mean",
    "single_orbit",
    "two_components",
    "transpose_pair",
    "pruned_products",
    "identity_chaining",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.spec"))
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn fixture(name: &str) -> MultiGraph {
    parse_spec(&fixture_text(name))
        .unwrap()
        .to_graph(&SearchBudget::default())
        .unwrap()
}

pub fn m(rows: &[&[u64]]) -> Matrix {
    Matrix::from_rows(rows).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Matrix {
    let mut a = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(density) {
                a.set(i, j, 1);
            }
        }
    }
    a
}

/// `count` graphs on 1..=max_symbols vertices from a fixed seed.
pub fn random_graphs(seed: u64, count: usize, max_symbols: usize) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_symbols);
            let density = rng.gen_range(0.25..0.75);
            let h = random_matrix(&mut rng, n, density);
            let v = random_matrix(&mut rng, n, density);
            MultiGraph::from_hv(h, v).unwrap()
        })
        .collect()
}

/// Every valid torus with the given periods, by brute force over
/// every assignment (no pruning), for cross-checking the backtracking search.
pub fn brute_force_tori(g: &MultiGraph, periods: [usize; 2]) -> Vec<TorusConfig> {
    let n = g.len();
    let cells = periods[0] * periods[1];
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut v = vec![0; cells];
        for k in (0..cells).rev() {
            v[k] = c % n;
            c /= n;
        }
        let t = TorusConfig::new(periods.to_vec(), v).unwrap();
        let ok = (0..periods[1]).all(|y| {
            (0..periods[0]).all(|x| {
                let a = t.get(&[x, y]);
                g.h().nonzero(a, t.get(&[(x + 1) % periods[0], y]))
                    && g.v().nonzero(a, t.get(&[x, (y + 1) % periods[1]]))
            })
        });
        if ok {
            out.push(t);
        }
    }
    out
}

pub fn budget(max_cells: u64) -> SearchBudget {
    SearchBudget {
        max_cells,
        max_nodes: 5_000_000,
    }
}
