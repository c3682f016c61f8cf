//! Exhaustive oracles and the constructive periodicity procedures.
//!
//! The oracles never claim more than they have checked: a torus found by
//! [`torus_search`] is a periodic point, an empty rectangle count proves the
//! shift empty, and [`block_growth`] only ever reports evidence.

use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};

use crate::analysis::{matrix_predicates, zero_pattern_test, VerdictStatus};
use crate::error::{Result, ShiftError};
use crate::graph::{trim_with_indices, MultiGraph};
use crate::matrix::Matrix;
use crate::pattern::{cell_count, strides, unravel, RectBlock, Symbol, TorusConfig};

/// Limits on exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest number of cells in a searched torus or block.
    pub max_cells: u64,
    /// Largest number of backtracking nodes (or comparable work units).
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_cells: 64,
            max_nodes: 1_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OracleStatus {
    NonemptyWitness,
    EmptyCertificate,
    /// Deterministic propagation from a seed hit two different symbols in one
    /// cell, so the seed occurs in no configuration.
    Contradiction,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub status: OracleStatus,
    pub witness: Option<TorusConfig>,
    /// `n` such that no admissible `n x n` block exists.
    pub certificate_size: Option<usize>,
    pub detail: String,
}

impl OracleVerdict {
    fn unknown(detail: impl Into<String>) -> Self {
        OracleVerdict {
            status: OracleStatus::Unknown,
            witness: None,
            certificate_size: None,
            detail: detail.into(),
        }
    }
}

fn budget_error(what: &'static str, limit: u64, progress: u64) -> ShiftError {
    ShiftError::Budget {
        what,
        limit,
        progress,
    }
}

fn require_2d(g: &MultiGraph) -> Result<()> {
    if g.dim() != 2 {
        return Err(ShiftError::UnsupportedDimension(g.dim()));
    }
    Ok(())
}

/// Backtracking over cells in storage order with forward checks on every axis.
struct GridSearch<'a> {
    g: &'a MultiGraph,
    extents: Vec<usize>,
    stride: Vec<usize>,
    coords: Vec<Vec<usize>>,
    wrap: bool,
    cells: Vec<Symbol>,
    nodes: u64,
    budget: SearchBudget,
}

impl<'a> GridSearch<'a> {
    fn new(
        g: &'a MultiGraph,
        extents: &[usize],
        wrap: bool,
        budget: &SearchBudget,
    ) -> Result<Self> {
        if extents.len() != g.dim() || extents.contains(&0) {
            return Err(ShiftError::spec(format!(
                "extents {extents:?} invalid for a {}-axis graph",
                g.dim()
            )));
        }
        let total = cell_count(extents);
        if total as u64 > budget.max_cells {
            return Err(budget_error("cells", budget.max_cells, 0));
        }
        Ok(GridSearch {
            g,
            extents: extents.to_vec(),
            stride: strides(extents),
            coords: (0..total).map(|i| unravel(i, extents)).collect(),
            wrap,
            cells: vec![0; total],
            nodes: 0,
            budget: *budget,
        })
    }

    fn fits(&self, pos: usize, s: Symbol) -> bool {
        let c = &self.coords[pos];
        (0..self.extents.len()).all(|axis| {
            let p = self.extents[axis];
            if c[axis] > 0 && !self.g.allows(axis, self.cells[pos - self.stride[axis]], s) {
                return false;
            }
            if self.wrap && c[axis] == p - 1 {
                let first = if p == 1 {
                    s
                } else {
                    self.cells[pos - (p - 1) * self.stride[axis]]
                };
                if !self.g.allows(axis, s, first) {
                    return false;
                }
            }
            true
        })
    }

    /// Visits complete assignments in lexicographic order; `visit` returns
    /// `false` to stop.
    fn run(
        &mut self,
        pos: usize,
        visit: &mut dyn FnMut(&[Symbol]) -> bool,
        found: &mut u64,
    ) -> Result<bool> {
        if pos == self.cells.len() {
            *found += 1;
            return Ok(visit(&self.cells));
        }
        for s in 0..self.g.len() {
            self.nodes += 1;
            if self.nodes > self.budget.max_nodes {
                return Err(budget_error("search nodes", self.budget.max_nodes, *found));
            }
            if self.fits(pos, s) {
                self.cells[pos] = s;
                if !self.run(pos + 1, visit, found)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn grid_search(
    g: &MultiGraph,
    extents: &[usize],
    wrap: bool,
    budget: &SearchBudget,
    limit: Option<usize>,
) -> Result<Vec<Vec<Symbol>>> {
    let mut search = GridSearch::new(g, extents, wrap, budget)?;
    let mut out = Vec::new();
    let mut found = 0;
    search.run(
        0,
        &mut |cells| {
            out.push(cells.to_vec());
            limit.is_none_or(|l| out.len() < l)
        },
        &mut found,
    )?;
    Ok(out)
}

/// All valid tori with the given periods, in lexicographic order of cells.
pub fn torus_search(
    g: &MultiGraph,
    periods: &[usize],
    budget: &SearchBudget,
) -> Result<Vec<TorusConfig>> {
    torus_search_limited(g, periods, budget, None)
}

/// Like [`torus_search`] but stops after `limit` tori.
pub fn torus_search_limited(
    g: &MultiGraph,
    periods: &[usize],
    budget: &SearchBudget,
    limit: Option<usize>,
) -> Result<Vec<TorusConfig>> {
    grid_search(g, periods, true, budget, limit)?
        .into_iter()
        .map(|cells| TorusConfig::new(periods.to_vec(), cells))
        .collect()
}

/// Some admissible (non-wrapping) block of the given extents, if any.
pub fn find_block(
    g: &MultiGraph,
    extents: &[usize],
    budget: &SearchBudget,
) -> Result<Option<RectBlock>> {
    Ok(grid_search(g, extents, false, budget, Some(1))?
        .pop()
        .map(|cells| RectBlock::new(extents.to_vec(), cells).expect("extents match")))
}

/// All admissible (non-wrapping) blocks of the given extents.
pub fn enumerate_graph_blocks(
    g: &MultiGraph,
    extents: &[usize],
    budget: &SearchBudget,
) -> Result<Vec<RectBlock>> {
    grid_search(g, extents, false, budget, None)?
        .into_iter()
        .map(|cells| RectBlock::new(extents.to_vec(), cells))
        .collect()
}

/// Period vectors in `[1, n]^d` with largest entry exactly `n`, in storage order.
fn shell(n: usize, d: usize) -> Vec<Vec<usize>> {
    (0..n.pow(d as u32))
        .map(|k| {
            unravel(k, &vec![n; d])
                .into_iter()
                .map(|c| c + 1)
                .collect::<Vec<_>>()
        })
        .filter(|v: &Vec<usize>| v.iter().max() == Some(&n))
        .collect()
}

/// Semi-decision for emptiness: a torus witness with all periods at most
/// `n_max`, or a cube size `n <= n_max` admitting no block at all.
pub fn bounded_emptiness(g: &MultiGraph, n_max: usize, budget: &SearchBudget) -> OracleVerdict {
    let d = g.dim();
    for n in 1..=n_max.max(1) {
        for periods in shell(n, d) {
            if cell_count(&periods) as u64 > budget.max_cells {
                continue;
            }
            match torus_search_limited(g, &periods, budget, Some(1)) {
                Ok(mut found) => {
                    if let Some(t) = found.pop() {
                        return OracleVerdict {
                            status: OracleStatus::NonemptyWitness,
                            detail: format!("valid torus with periods {periods:?}"),
                            witness: Some(t),
                            certificate_size: None,
                        };
                    }
                }
                Err(e) => return OracleVerdict::unknown(e.to_string()),
            }
        }
        let cube = vec![n; d];
        if cell_count(&cube) as u64 > budget.max_cells {
            return OracleVerdict::unknown(format!("cube of side {n} exceeds the cell budget"));
        }
        match find_block(g, &cube, budget) {
            Ok(None) => {
                return OracleVerdict {
                    status: OracleStatus::EmptyCertificate,
                    witness: None,
                    certificate_size: Some(n),
                    detail: format!("no admissible block of side {n}"),
                }
            }
            Ok(Some(_)) => {}
            Err(e) => return OracleVerdict::unknown(e.to_string()),
        }
    }
    OracleVerdict::unknown(format!("no witness or certificate up to size {n_max}"))
}

/// Counts of admissible `n x n` blocks for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Growth {
    pub counts: Vec<u128>,
    /// The sequence stopped early because the budget ran out.
    pub truncated: bool,
    /// Every count exceeds the previous one. Evidence of infiniteness, not proof.
    pub strictly_increasing: bool,
}

/// Valid horizontal words of length `m`, optionally closed cyclically.
fn horizontal_words(
    g: &MultiGraph,
    m: usize,
    cyclic: bool,
    limit: u64,
) -> Option<Vec<Vec<Symbol>>> {
    let n = g.len();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(m);
    fn rec(
        g: &MultiGraph,
        n: usize,
        m: usize,
        cyclic: bool,
        limit: u64,
        word: &mut Vec<Symbol>,
        out: &mut Vec<Vec<Symbol>>,
    ) -> bool {
        if word.len() == m {
            if !cyclic || g.allows(0, word[m - 1], word[0]) {
                out.push(word.clone());
                if out.len() as u64 > limit {
                    return false;
                }
            }
            return true;
        }
        for s in 0..n {
            if word.last().is_none_or(|&p| g.allows(0, p, s)) {
                word.push(s);
                let ok = rec(g, n, m, cyclic, limit, word, out);
                word.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    rec(g, n, m, cyclic, limit, &mut word, &mut out).then_some(out)
}

fn rows_compatible(g: &MultiGraph, below: &[Symbol], above: &[Symbol]) -> bool {
    below.iter().zip(above).all(|(&a, &b)| g.allows(1, a, b))
}

pub fn block_growth(g: &MultiGraph, n_max: usize, budget: &SearchBudget) -> Result<Growth> {
    require_2d(g)?;
    let mut counts = Vec::new();
    let mut truncated = false;
    for n in 1..=n_max {
        let Some(rows) = horizontal_words(g, n, false, budget.max_nodes) else {
            truncated = true;
            break;
        };
        let r = rows.len() as u64;
        if r.saturating_mul(r) > budget.max_nodes.saturating_mul(10) {
            truncated = true;
            break;
        }
        let succ: Vec<Vec<usize>> = rows
            .iter()
            .map(|a| {
                (0..rows.len())
                    .filter(|&j| rows_compatible(g, a, &rows[j]))
                    .collect()
            })
            .collect();
        let mut ways = vec![1u128; rows.len()];
        for _ in 1..n {
            let mut next = vec![0u128; rows.len()];
            for (i, w) in ways.iter().enumerate() {
                for &j in &succ[i] {
                    next[j] += w;
                }
            }
            ways = next;
        }
        counts.push(ways.iter().sum());
    }
    let strictly_increasing = counts.len() >= 2 && counts.windows(2).all(|w| w[1] > w[0]);
    Ok(Growth {
        counts,
        truncated,
        strictly_increasing,
    })
}

/// The graph of `m`-periodic rows linked by vertical compatibility, trimmed to
/// rows lying on bi-infinite walks.
struct RowGraph {
    rows: Vec<Vec<Symbol>>,
    succ: Vec<Vec<usize>>,
}

impl RowGraph {
    fn build(g: &MultiGraph, m: usize, budget: &SearchBudget) -> Result<RowGraph> {
        let rows = horizontal_words(g, m, true, budget.max_nodes)
            .ok_or_else(|| budget_error("periodic rows", budget.max_nodes, budget.max_nodes))?;
        let r = rows.len() as u64;
        if r.saturating_mul(r) > budget.max_nodes.saturating_mul(10) {
            return Err(budget_error("row pairs", budget.max_nodes, r));
        }
        let mut alive = vec![true; rows.len()];
        let all_succ: Vec<Vec<usize>> = rows
            .iter()
            .map(|a| {
                (0..rows.len())
                    .filter(|&j| rows_compatible(g, a, &rows[j]))
                    .collect()
            })
            .collect();
        loop {
            let mut has_in = vec![false; rows.len()];
            for (i, s) in all_succ.iter().enumerate() {
                if alive[i] {
                    for &j in s {
                        has_in[j] = true;
                    }
                }
            }
            let mut changed = false;
            for i in 0..rows.len() {
                if alive[i] && (!has_in[i] || !all_succ[i].iter().any(|&j| alive[j])) {
                    alive[i] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let keep: Vec<usize> = (0..rows.len()).filter(|&i| alive[i]).collect();
        let mut new_index = vec![usize::MAX; rows.len()];
        for (k, &i) in keep.iter().enumerate() {
            new_index[i] = k;
        }
        let succ = keep
            .iter()
            .map(|&i| {
                all_succ[i]
                    .iter()
                    .filter(|&&j| alive[j])
                    .map(|&j| new_index[j])
                    .collect()
            })
            .collect();
        Ok(RowGraph {
            rows: keep.iter().map(|&i| rows[i].clone()).collect(),
            succ,
        })
    }

    /// Shortest walk `start -> ... -> start`, if `start` lies on a cycle.
    fn cycle_through(&self, start: usize) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.rows.len()];
        let mut queue = VecDeque::new();
        for &j in &self.succ[start] {
            if j == start {
                return Some(vec![start, start]);
            }
            if prev[j] == usize::MAX {
                prev[j] = start;
                queue.push_back(j);
            }
        }
        while let Some(i) = queue.pop_front() {
            for &j in &self.succ[i] {
                if j == start {
                    let mut path = vec![i];
                    let mut cur = i;
                    while prev[cur] != start {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.push(start);
                    path.reverse();
                    path.push(start);
                    return Some(path);
                }
                if prev[j] == usize::MAX {
                    prev[j] = i;
                    queue.push_back(j);
                }
            }
        }
        None
    }
}

/// Cuts the walk of rows between the first two occurrences of a repeated row
/// and returns that slab as a torus, validated against `g`.
pub fn cut_repeated_row(g: &MultiGraph, walk: &[Vec<Symbol>]) -> Result<TorusConfig> {
    let width = walk.first().map_or(0, Vec::len);
    if width == 0 || walk.iter().any(|r| r.len() != width) {
        return Err(ShiftError::spec(
            "walk rows must be non-empty and of equal width",
        ));
    }
    for v in 1..walk.len() {
        if let Some(u) = walk[..v].iter().position(|r| *r == walk[v]) {
            let rows: Vec<&[Symbol]> = walk[u..v].iter().map(Vec::as_slice).collect();
            let t = TorusConfig::from_rows_bottom_up(&rows)?;
            if !g.admits_torus(&t) {
                return Err(ShiftError::Construction(format!(
                    "slab between heights {u} and {v} is not a valid torus"
                )));
            }
            return Ok(t);
        }
    }
    Err(ShiftError::InputTooShort(format!(
        "no row repeats within a walk of {} rows",
        walk.len()
    )))
}

/// A torus of width `m` exists iff the graph of `m`-periodic rows has a cycle.
/// Returns the cycle cut into a torus.
pub fn horizontal_periodic_exists(
    g: &MultiGraph,
    m: usize,
    budget: &SearchBudget,
) -> Result<Option<TorusConfig>> {
    require_2d(g)?;
    if m == 0 {
        return Err(ShiftError::spec("strip width must be positive"));
    }
    let rg = RowGraph::build(g, m, budget)?;
    if rg.rows.is_empty() {
        return Ok(None);
    }
    // every surviving row has a surviving successor, so this walk repeats
    let mut walk = vec![0usize];
    let mut seen = vec![false; rg.rows.len()];
    seen[0] = true;
    loop {
        let next = rg.succ[*walk.last().unwrap()][0];
        walk.push(next);
        if seen[next] {
            break;
        }
        seen[next] = true;
    }
    let rows: Vec<Vec<Symbol>> = walk.iter().map(|&i| rg.rows[i].clone()).collect();
    cut_repeated_row(g, &rows).map(Some)
}

/// Axis-swapped twin of [`horizontal_periodic_exists`]: a torus of height `n`.
pub fn vertical_periodic_exists(
    g: &MultiGraph,
    n: usize,
    budget: &SearchBudget,
) -> Result<Option<TorusConfig>> {
    require_2d(g)?;
    Ok(horizontal_periodic_exists(&g.swapped(), n, budget)?.map(|t| t.transposed()))
}

/// Splits the bottom strip of height `n` of an `(m, n)`-periodic torus into
/// consecutive `m x n` blocks `B_0, B_1, ...`, stopping just before `B_0`
/// recurs.
pub fn run_from_periodic_torus(t: &TorusConfig, m: usize, n: usize) -> Result<Vec<RectBlock>> {
    if t.dim() != 2 || m == 0 || n == 0 {
        return Err(ShiftError::spec(
            "need a two-dimensional torus and positive m, n",
        ));
    }
    if crate::pattern::translate(t, &[m as i64, n as i64]) != *t {
        return Err(ShiftError::Precondition(format!(
            "({m}, {n}) is not a period of the torus"
        )));
    }
    let first = t.window(&[0, 0], &[m, n]);
    let mut run = vec![first.clone()];
    for k in 1.. {
        let b = t.window(&[(k * m) as i64, 0], &[m, n]);
        if b == first {
            break;
        }
        run.push(b);
    }
    Ok(run)
}

/// Places `B_{(k - j + i + 1) mod (k + 1)}` at block position `(i, j)` of a
/// `(k+1) x (k+1)` grid and closes it into a torus. Every seam is validated.
pub fn diagonal_arrangement(g: &MultiGraph, blocks: &[RectBlock]) -> Result<TorusConfig> {
    require_2d(g)?;
    let first = blocks
        .first()
        .ok_or_else(|| ShiftError::spec("diagonal arrangement needs at least one block"))?;
    if first.dim() != 2 || blocks.iter().any(|b| b.extents() != first.extents()) {
        return Err(ShiftError::spec(
            "blocks must be two-dimensional with equal extents",
        ));
    }
    let (m, n) = (first.extents()[0], first.extents()[1]);
    let k1 = blocks.len();
    let (w, h) = (k1 * m, k1 * n);
    let mut cells = vec![0; w * h];
    for j in 0..k1 {
        for i in 0..k1 {
            let b = &blocks[(k1 - 1 + k1 - j + i + 1) % k1];
            for y in 0..n {
                for x in 0..m {
                    cells[(j * n + y) * w + i * m + x] = b.get(&[x, y]);
                }
            }
        }
    }
    let t = TorusConfig::new(vec![w, h], cells)?;
    for y in 0..h {
        for x in 0..w {
            let a = t.get(&[x, y]);
            let right = t.get(&[(x + 1) % w, y]);
            if !g.allows(0, a, right) {
                return Err(ShiftError::Construction(format!(
                    "horizontal seam fails between cells ({x}, {y}) and ({}, {y})",
                    (x + 1) % w
                )));
            }
            let up = t.get(&[x, (y + 1) % h]);
            if !g.allows(1, a, up) {
                return Err(ShiftError::Construction(format!(
                    "vertical seam fails between cells ({x}, {y}) and ({x}, {})",
                    (y + 1) % h
                )));
            }
        }
    }
    Ok(t)
}

/// Least period of a word under rotation.
fn least_rotation_period(word: &[Symbol]) -> usize {
    let m = word.len();
    (1..=m)
        .find(|&p| m.is_multiple_of(p) && (0..m).all(|i| word[i] == word[(i + p) % m]))
        .unwrap_or(m)
}

/// Builds a torus of width `m` for a graph meeting a zero-pattern criterion:
/// an `m`-periodic row is extended upward until a row repeats and the slab
/// between the repeats is closed into a torus. Rows whose least period is `m`
/// are tried first so the horizontal period is as large as the graph allows.
pub fn arbitrary_period_construct(
    g: &MultiGraph,
    m: usize,
    budget: &SearchBudget,
) -> Result<TorusConfig> {
    require_2d(g)?;
    if m == 0 {
        return Err(ShiftError::spec("width must be positive"));
    }
    let (trimmed, keep) = trim_with_indices(g);
    let verdict = zero_pattern_test(&trimmed)?;
    if verdict.status != VerdictStatus::Nonempty {
        return Err(ShiftError::Precondition(
            "no zero-pattern criterion holds for this graph".into(),
        ));
    }
    let rg = RowGraph::build(&trimmed, m, budget)?;
    let mut order: Vec<usize> = (0..rg.rows.len()).collect();
    order.sort_by_key(|&i| (least_rotation_period(&rg.rows[i]) != m, i));
    let mut work = 0u64;
    for start in order {
        work += rg.rows.len() as u64;
        if work > budget.max_nodes {
            return Err(budget_error("extension search", budget.max_nodes, work));
        }
        if let Some(path) = rg.cycle_through(start) {
            let walk: Vec<Vec<Symbol>> = path
                .iter()
                .map(|&i| rg.rows[i].iter().map(|&s| keep[s]).collect())
                .collect();
            return cut_repeated_row(g, &walk);
        }
    }
    Err(ShiftError::Construction(format!(
        "no {m}-periodic row extends to a periodic strip"
    )))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Pair of permutation matrices generating the given finite union of periodic
/// orbits. Vertices are the distinct `m x n` windows of the orbit, where
/// `(m, n)` is the least common multiple of the torus periods; the windows are
/// returned in vertex order.
pub fn permutation_generators_from_orbit(
    orbit: &[TorusConfig],
) -> Result<(MultiGraph, Vec<RectBlock>)> {
    if orbit.is_empty() {
        return Err(ShiftError::spec("orbit must contain at least one torus"));
    }
    if orbit.iter().any(|t| t.dim() != 2) {
        return Err(ShiftError::spec("orbit tori must be two-dimensional"));
    }
    let m = orbit.iter().fold(1, |acc, t| lcm(acc, t.periods()[0]));
    let n = orbit.iter().fold(1, |acc, t| lcm(acc, t.periods()[1]));
    let window_at = |t: &TorusConfig, x: usize, y: usize| t.window(&[x as i64, y as i64], &[m, n]);
    let mut set = BTreeSet::new();
    for t in orbit {
        for y in 0..t.periods()[1] {
            for x in 0..t.periods()[0] {
                set.insert(window_at(t, x, y));
            }
        }
    }
    let windows: Vec<RectBlock> = set.into_iter().collect();
    let index = |b: &RectBlock| windows.binary_search(b).expect("window collected");
    let k = windows.len();
    let mut h = Matrix::zeros(k);
    let mut v = Matrix::zeros(k);
    for t in orbit {
        for y in 0..t.periods()[1] {
            for x in 0..t.periods()[0] {
                let here = index(&window_at(t, x, y));
                h.set(here, index(&window_at(t, x + 1, y)), 1);
                v.set(here, index(&window_at(t, x, y + 1)), 1);
            }
        }
    }
    let labels: Vec<String> = (0..k).map(|i| format!("w{i}")).collect();
    Ok((MultiGraph::new(labels, vec![h, v])?, windows))
}

fn successor(m: &Matrix, i: usize) -> usize {
    (0..m.size())
        .find(|&j| m.nonzero(i, j))
        .expect("permutation row")
}

fn cycle_len(m: &Matrix, s: usize) -> usize {
    let mut cur = successor(m, s);
    let mut len = 1;
    while cur != s {
        cur = successor(m, cur);
        len += 1;
    }
    len
}

/// Fills the plane outward from `seed` using the unique horizontal and
/// vertical successors of a permutation pair.
pub fn propagate_permutation(
    g: &MultiGraph,
    seed: Symbol,
    budget: &SearchBudget,
) -> Result<OracleVerdict> {
    require_2d(g)?;
    if seed >= g.len() {
        return Err(ShiftError::Precondition(format!(
            "seed {seed} is not a vertex"
        )));
    }
    if !matrix_predicates(g.h()).is_permutation || !matrix_predicates(g.v()).is_permutation {
        return Err(ShiftError::Precondition(
            "propagation needs both axis matrices to be permutations".into(),
        ));
    }
    let (h, v) = (g.h(), g.v());
    let mut reach = BTreeSet::from([seed]);
    let mut stack = vec![seed];
    while let Some(s) = stack.pop() {
        for t in [successor(h, s), successor(v, s)] {
            if reach.insert(t) {
                stack.push(t);
            }
        }
    }
    let p1 = reach.iter().fold(1, |acc, &s| lcm(acc, cycle_len(h, s)));
    let p2 = reach.iter().fold(1, |acc, &s| lcm(acc, cycle_len(v, s)));
    if (p1 as u64).saturating_mul(p2 as u64) > budget.max_nodes {
        return Err(budget_error("propagation cells", budget.max_nodes, 0));
    }
    let mut cells = vec![0; p1 * p2];
    for y in 0..p2 {
        for x in 0..p1 {
            let value = match (x, y) {
                (0, 0) => seed,
                (_, 0) => successor(h, cells[x - 1]),
                (0, _) => successor(v, cells[(y - 1) * p1]),
                _ => {
                    let from_left = successor(h, cells[y * p1 + x - 1]);
                    let from_below = successor(v, cells[(y - 1) * p1 + x]);
                    if from_left != from_below {
                        return Ok(OracleVerdict {
                            status: OracleStatus::Contradiction,
                            witness: None,
                            certificate_size: None,
                            detail: format!(
                                "cell ({x}, {y}) receives {} from the left and {} from below",
                                g.labels()[from_left],
                                g.labels()[from_below]
                            ),
                        });
                    }
                    from_left
                }
            };
            cells[y * p1 + x] = value;
        }
    }
    let t = TorusConfig::new(vec![p1, p2], cells)?;
    if !g.admits_torus(&t) {
        return Ok(OracleVerdict {
            status: OracleStatus::Contradiction,
            witness: None,
            certificate_size: None,
            detail: "propagated torus does not close up".into(),
        });
    }
    Ok(OracleVerdict {
        status: OracleStatus::NonemptyWitness,
        detail: format!(
            "propagation from {} closes into a {p1}x{p2} torus",
            g.labels()[seed]
        ),
        witness: Some(t),
        certificate_size: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u64]]) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    fn golden() -> MultiGraph {
        let h = m(&[&[1, 1], &[1, 0]]);
        MultiGraph::from_hv(h.clone(), h).unwrap()
    }

    fn single_orbit() -> MultiGraph {
        MultiGraph::from_hv(
            m(&[&[1, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
            m(&[&[0, 1, 1], &[1, 0, 0], &[1, 0, 0]]),
        )
        .unwrap()
    }

    fn two_components_g2() -> MultiGraph {
        MultiGraph::from_hv(
            m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]),
            m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
        )
        .unwrap()
    }

    fn two_components_g1() -> MultiGraph {
        MultiGraph::from_hv(
            m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]),
            m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn torus_counts() {
        let b = SearchBudget::default();
        assert_eq!(torus_search(&golden(), &[2, 2], &b).unwrap().len(), 7);
        assert_eq!(torus_search(&single_orbit(), &[4, 2], &b).unwrap().len(), 4);
        assert!(torus_search(&single_orbit(), &[1, 1], &b)
            .unwrap()
            .is_empty());
        let tight = SearchBudget {
            max_cells: 4,
            max_nodes: 100,
        };
        assert!(torus_search(&golden(), &[3, 2], &tight)
            .unwrap_err()
            .is_budget());
    }

    #[test]
    fn torus_search_is_sorted() {
        let found = torus_search(&golden(), &[3, 2], &SearchBudget::default()).unwrap();
        assert!(found.windows(2).all(|w| w[0].cells() < w[1].cells()));
        assert!(found.iter().all(|t| golden().admits_torus(t)));
    }

    #[test]
    fn bounded_emptiness_examples() {
        let b = SearchBudget::default();
        let v = bounded_emptiness(&golden(), 4, &b);
        assert_eq!(v.status, OracleStatus::NonemptyWitness);
        assert_eq!(v.witness.unwrap(), TorusConfig::constant(vec![1, 1], 0));
        let v = bounded_emptiness(&two_components_g2(), 6, &b);
        assert_eq!(v.status, OracleStatus::EmptyCertificate);
        assert_eq!(v.certificate_size, Some(2));
        let v = bounded_emptiness(&MultiGraph::empty(2), 3, &b);
        assert_eq!(v.certificate_size, Some(1));
    }

    #[test]
    fn growth_examples() {
        let b = SearchBudget::default();
        let g = block_growth(&single_orbit(), 6, &b).unwrap();
        assert_eq!(g.counts, vec![3, 4, 4, 4, 4, 4]);
        assert!(!g.strictly_increasing);
        let one = MultiGraph::from_hv(Matrix::ones(1), Matrix::ones(1)).unwrap();
        assert_eq!(block_growth(&one, 4, &b).unwrap().counts, vec![1; 4]);
        assert_eq!(
            block_growth(&golden(), 5, &b).unwrap().counts,
            vec![2, 7, 63, 1234, 55447]
        );
    }

    #[test]
    fn horizontal_periodicity() {
        let b = SearchBudget::default();
        let t = horizontal_periodic_exists(&golden(), 1, &b)
            .unwrap()
            .unwrap();
        assert_eq!(t, TorusConfig::constant(vec![1, 1], 0));
        let t = horizontal_periodic_exists(&single_orbit(), 4, &b)
            .unwrap()
            .unwrap();
        assert_eq!(t.periods(), &[4, 2]);
        for w in 1..=4 {
            assert!(horizontal_periodic_exists(&two_components_g2(), w, &b)
                .unwrap()
                .is_none());
        }
        let t = vertical_periodic_exists(&single_orbit(), 2, &b)
            .unwrap()
            .unwrap();
        assert_eq!(t.periods()[1], 2);
        assert!(single_orbit().admits_torus(&t));
    }

    #[test]
    fn cut_examples() {
        let g = golden();
        let t = cut_repeated_row(&g, &[vec![0], vec![0]]).unwrap();
        assert_eq!(t, TorusConfig::constant(vec![1, 1], 0));
        assert!(matches!(
            cut_repeated_row(&g, &[vec![0, 1], vec![1, 0]]),
            Err(ShiftError::InputTooShort(_))
        ));
        let a = vec![1, 2, 0, 0];
        let b2 = vec![0, 0, 1, 2];
        let t = cut_repeated_row(&single_orbit(), &[a.clone(), b2.clone(), a.clone()]).unwrap();
        assert_eq!(t, TorusConfig::from_rows_bottom_up(&[&a, &b2]).unwrap());
        let t = cut_repeated_row(&g, &[vec![0, 0, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(t.periods(), &[3, 1]);
    }

    #[test]
    fn diagonal_examples() {
        let g = golden();
        let zero = RectBlock::new(vec![1, 1], vec![0]).unwrap();
        let t = diagonal_arrangement(&g, std::slice::from_ref(&zero)).unwrap();
        assert_eq!(t, TorusConfig::constant(vec![1, 1], 0));
        let t = diagonal_arrangement(&g, &[zero.clone(), zero]).unwrap();
        assert_eq!(t, TorusConfig::constant(vec![2, 2], 0));

        let printed = TorusConfig::from_rows_bottom_up(&[&[1, 2, 0, 0], &[0, 0, 1, 2]]).unwrap();
        let run = run_from_periodic_torus(&printed, 2, 1).unwrap();
        assert_eq!(run.len(), 2);
        let t = diagonal_arrangement(&single_orbit(), &run).unwrap();
        assert_eq!(t, printed);

        let one = RectBlock::new(vec![1, 1], vec![1]).unwrap();
        let err = diagonal_arrangement(&g, &[one]).unwrap_err();
        assert!(matches!(err, ShiftError::Construction(_)));
    }

    #[test]
    fn arbitrary_period_examples() {
        let b = SearchBudget::default();
        let t = arbitrary_period_construct(&golden(), 2, &b).unwrap();
        assert!(golden().admits_torus(&t));
        assert_eq!(t.minimized().periods()[0], 2);
        let full = MultiGraph::from_hv(Matrix::ones(2), Matrix::ones(2)).unwrap();
        let t = arbitrary_period_construct(&full, 3, &b).unwrap();
        assert_eq!(t.periods()[0], 3);
        assert!(full.admits_torus(&t));
        assert!(matches!(
            arbitrary_period_construct(&two_components_g2(), 2, &b),
            Err(ShiftError::Precondition(_))
        ));
    }

    #[test]
    fn orbit_generators() {
        let printed = TorusConfig::from_rows_bottom_up(&[&[1, 2, 0, 0], &[0, 0, 1, 2]]).unwrap();
        let orbit = torus_search(&single_orbit(), &[4, 2], &SearchBudget::default()).unwrap();
        assert!(orbit.contains(&printed));
        let (g, windows) = permutation_generators_from_orbit(&orbit).unwrap();
        assert_eq!(windows.len(), 4);
        assert!(matrix_predicates(g.h()).is_permutation);
        assert!(matrix_predicates(g.v()).is_permutation);
        assert_eq!(g.h().mul(g.v()), g.v().mul(g.h()));

        let single = TorusConfig::constant(vec![1, 1], 0);
        let (g, _) = permutation_generators_from_orbit(&[single]).unwrap();
        assert_eq!(g.h(), &Matrix::identity(1));
        assert_eq!(g.v(), &Matrix::identity(1));
    }

    #[test]
    fn propagation() {
        let b = SearchBudget::default();
        let v = propagate_permutation(&two_components_g1(), 0, &b).unwrap();
        assert_eq!(v.status, OracleStatus::NonemptyWitness);
        assert_eq!(v.witness.unwrap().periods(), &[3, 3]);
        let v = propagate_permutation(&two_components_g2(), 0, &b).unwrap();
        assert_eq!(v.status, OracleStatus::Contradiction);
        let one = MultiGraph::from_hv(Matrix::ones(1), Matrix::ones(1)).unwrap();
        let v = propagate_permutation(&one, 0, &b).unwrap();
        assert_eq!(v.witness.unwrap(), TorusConfig::constant(vec![1, 1], 0));
        assert!(matches!(
            propagate_permutation(&golden(), 0, &b),
            Err(ShiftError::Precondition(_))
        ));
    }
}
