//! Alphabets, patterns, rectangular blocks and torus configurations.
//!
//! Everything here is a finite object: infinite configurations are only ever
//! represented through their periodic versions ([`TorusConfig`]).

use serde::Serialize;
use std::collections::BTreeMap;

use crate::dynamics::SearchBudget;
use crate::error::{Result, ShiftError};

/// Ordinal of a symbol within its [`Alphabet`].
pub type Symbol = usize;

/// An ordered set of distinct symbol names. Ordinals follow declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Alphabet {
    symbols: Vec<String>,
    #[serde(skip)]
    index: BTreeMap<String, Symbol>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(ShiftError::spec("alphabet must not be empty"));
        }
        let mut index = BTreeMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s == "." || s.contains('#') || s.chars().any(char::is_whitespace) {
                return Err(ShiftError::spec(format!("invalid symbol name {s:?}")));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(ShiftError::spec(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    /// The alphabet `0, 1, ..., n-1`.
    pub fn numeric(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string())).expect("numeric names are valid")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.symbols[s]
    }

    pub fn ordinal(&self, name: &str) -> Option<Symbol> {
        self.index.get(name).copied()
    }
}

/// Storage strides for a dense array with axis 0 varying fastest.
pub(crate) fn strides(extents: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(extents.len());
    let mut acc = 1;
    for &e in extents {
        out.push(acc);
        acc *= e;
    }
    out
}

pub(crate) fn unravel(mut index: usize, extents: &[usize]) -> Vec<usize> {
    extents
        .iter()
        .map(|&e| {
            let c = index % e;
            index /= e;
            c
        })
        .collect()
}

pub(crate) fn cell_count(extents: &[usize]) -> usize {
    extents.iter().product()
}

/// A finite pattern over an arbitrary support, normalised so the coordinatewise
/// minimum of the support is the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralPattern {
    dim: usize,
    cells: BTreeMap<Vec<i64>, Symbol>,
}

impl GeneralPattern {
    pub fn new(dim: usize, cells: impl IntoIterator<Item = (Vec<i64>, Symbol)>) -> Result<Self> {
        let raw: Vec<(Vec<i64>, Symbol)> = cells.into_iter().collect();
        if raw.is_empty() {
            return Err(ShiftError::spec("pattern support must be non-empty"));
        }
        if let Some((v, _)) = raw.iter().find(|(v, _)| v.len() != dim) {
            return Err(ShiftError::spec(format!(
                "pattern cell {v:?} does not have dimension {dim}"
            )));
        }
        let min: Vec<i64> = (0..dim)
            .map(|i| raw.iter().map(|(v, _)| v[i]).min().unwrap())
            .collect();
        let mut out = BTreeMap::new();
        for (v, s) in raw {
            let key: Vec<i64> = v.iter().zip(&min).map(|(a, m)| a - m).collect();
            if let Some(prev) = out.insert(key.clone(), s) {
                if prev != s {
                    return Err(ShiftError::spec(format!(
                        "pattern assigns two symbols to cell {key:?}"
                    )));
                }
            }
        }
        Ok(GeneralPattern { dim, cells: out })
    }

    /// A word laid along one axis (0-based), starting at the origin.
    pub fn along_axis(dim: usize, axis: usize, word: &[Symbol]) -> Result<Self> {
        if axis >= dim {
            return Err(ShiftError::spec(format!(
                "axis {axis} out of range for dimension {dim}"
            )));
        }
        Self::new(
            dim,
            word.iter().enumerate().map(|(k, &s)| {
                let mut v = vec![0i64; dim];
                v[axis] = k as i64;
                (v, s)
            }),
        )
    }

    /// Two-dimensional word read left to right.
    pub fn horizontal(word: &[Symbol]) -> Self {
        Self::along_axis(2, 0, word).expect("non-empty word")
    }

    /// Two-dimensional word read bottom to top.
    pub fn vertical(word: &[Symbol]) -> Self {
        Self::along_axis(2, 1, word).expect("non-empty word")
    }

    pub fn from_block(block: &RectBlock) -> Self {
        let dim = block.dim();
        Self::new(
            dim,
            (0..block.cells.len()).map(|i| {
                let c = unravel(i, &block.extents);
                (c.iter().map(|&x| x as i64).collect(), block.cells[i])
            }),
        )
        .expect("blocks are non-empty")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> impl Iterator<Item = (&[i64], Symbol)> {
        self.cells.iter().map(|(v, &s)| (v.as_slice(), s))
    }

    pub fn support(&self) -> impl Iterator<Item = &[i64]> {
        self.cells.keys().map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn symbol_at(&self, v: &[i64]) -> Option<Symbol> {
        self.cells.get(v).copied()
    }

    /// Bounding-box extents of the support.
    pub fn extents(&self) -> Vec<usize> {
        (0..self.dim)
            .map(|i| self.cells.keys().map(|v| v[i]).max().unwrap() as usize + 1)
            .collect()
    }

    /// `Some((axis, first, second))` when the pattern is two cells adjacent
    /// along one axis.
    pub fn as_domino(&self) -> Option<(usize, Symbol, Symbol)> {
        if self.cells.len() != 2 {
            return None;
        }
        let ext = self.extents();
        let axis = ext.iter().position(|&e| e == 2)?;
        if ext.iter().enumerate().any(|(i, &e)| i != axis && e != 1) {
            return None;
        }
        let mut it = self.cells.values();
        // BTreeMap order on coordinate vectors puts the origin first.
        let a = *it.next()?;
        let b = *it.next()?;
        Some((axis, a, b))
    }

    /// The pattern as a full rectangle, when its support fills its bounding box.
    pub fn as_block(&self) -> Option<RectBlock> {
        let ext = self.extents();
        if cell_count(&ext) != self.cells.len() {
            return None;
        }
        let st = strides(&ext);
        let mut cells = vec![0; self.cells.len()];
        for (v, &s) in &self.cells {
            let idx: usize = v.iter().zip(&st).map(|(&c, &k)| c as usize * k).sum();
            cells[idx] = s;
        }
        Some(RectBlock {
            extents: ext,
            cells,
        })
    }
}

/// A finite rectangular pattern with its origin at the bottom-left corner.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RectBlock {
    extents: Vec<usize>,
    cells: Vec<Symbol>,
}

impl RectBlock {
    pub fn new(extents: Vec<usize>, cells: Vec<Symbol>) -> Result<Self> {
        if extents.is_empty() || extents.contains(&0) {
            return Err(ShiftError::spec("block extents must be positive"));
        }
        if cells.len() != cell_count(&extents) {
            return Err(ShiftError::spec(format!(
                "block of extents {extents:?} needs {} cells, got {}",
                cell_count(&extents),
                cells.len()
            )));
        }
        Ok(RectBlock { extents, cells })
    }

    /// Two-dimensional block from rows listed bottom row first.
    pub fn from_rows_bottom_up(rows: &[&[Symbol]]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return Err(ShiftError::spec("ragged block rows"));
        }
        Self::new(vec![width, rows.len()], rows.concat())
    }

    pub fn dim(&self) -> usize {
        self.extents.len()
    }

    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    pub fn get(&self, coords: &[usize]) -> Symbol {
        let st = strides(&self.extents);
        self.cells[coords.iter().zip(&st).map(|(c, k)| c * k).sum::<usize>()]
    }

    /// Symbol at signed coordinates, `None` outside the block.
    pub fn get_signed(&self, coords: &[i64]) -> Option<Symbol> {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (&c, &e) in coords.iter().zip(&self.extents) {
            if c < 0 || c as usize >= e {
                return None;
            }
            idx += c as usize * stride;
            stride *= e;
        }
        Some(self.cells[idx])
    }

    /// Sub-rectangle starting at `origin`.
    pub fn sub_block(&self, origin: &[usize], extents: &[usize]) -> RectBlock {
        let n = cell_count(extents);
        let cells = (0..n)
            .map(|i| {
                let local = unravel(i, extents);
                let c: Vec<usize> = local.iter().zip(origin).map(|(a, b)| a + b).collect();
                self.get(&c)
            })
            .collect();
        RectBlock {
            extents: extents.to_vec(),
            cells,
        }
    }

    /// Rows of a two-dimensional block, bottom row first.
    pub fn rows_bottom_up(&self) -> Vec<Vec<Symbol>> {
        let w = self.extents[0];
        self.cells.chunks(w).map(<[Symbol]>::to_vec).collect()
    }
}

/// A fully periodic configuration stored on its fundamental domain
/// `[0,p_1) x ... x [0,p_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusConfig {
    periods: Vec<usize>,
    cells: Vec<Symbol>,
}

impl TorusConfig {
    pub fn new(periods: Vec<usize>, cells: Vec<Symbol>) -> Result<Self> {
        let b = RectBlock::new(periods, cells)?;
        Ok(TorusConfig {
            periods: b.extents,
            cells: b.cells,
        })
    }

    /// Two-dimensional torus from rows listed bottom row first.
    pub fn from_rows_bottom_up(rows: &[&[Symbol]]) -> Result<Self> {
        let b = RectBlock::from_rows_bottom_up(rows)?;
        Ok(TorusConfig {
            periods: b.extents,
            cells: b.cells,
        })
    }

    pub fn constant(periods: Vec<usize>, symbol: Symbol) -> Self {
        let n = cell_count(&periods);
        TorusConfig {
            periods,
            cells: vec![symbol; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.periods.len()
    }

    pub fn periods(&self) -> &[usize] {
        &self.periods
    }

    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    pub fn get(&self, coords: &[usize]) -> Symbol {
        let mut idx = 0;
        let mut stride = 1;
        for (&c, &p) in coords.iter().zip(&self.periods) {
            idx += (c % p) * stride;
            stride *= p;
        }
        self.cells[idx]
    }

    pub fn get_wrapped(&self, coords: &[i64]) -> Symbol {
        let mut idx = 0;
        let mut stride = 1;
        for (&c, &p) in coords.iter().zip(&self.periods) {
            idx += c.rem_euclid(p as i64) as usize * stride;
            stride *= p;
        }
        self.cells[idx]
    }

    /// The rectangle of the periodic configuration with bottom-left corner at
    /// `origin`, read with wraparound.
    pub fn window(&self, origin: &[i64], extents: &[usize]) -> RectBlock {
        let n = cell_count(extents);
        let cells = (0..n)
            .map(|i| {
                let local = unravel(i, extents);
                let c: Vec<i64> = local
                    .iter()
                    .zip(origin)
                    .map(|(&a, &b)| a as i64 + b)
                    .collect();
                self.get_wrapped(&c)
            })
            .collect();
        RectBlock {
            extents: extents.to_vec(),
            cells,
        }
    }

    pub fn as_block(&self) -> RectBlock {
        RectBlock {
            extents: self.periods.clone(),
            cells: self.cells.clone(),
        }
    }

    /// Re-expresses the same periodic configuration on a larger fundamental
    /// domain; every new period must be a multiple of the old one.
    pub fn unfold(&self, periods: &[usize]) -> Result<TorusConfig> {
        if periods.len() != self.dim()
            || periods
                .iter()
                .zip(&self.periods)
                .any(|(&n, &o)| n == 0 || n % o != 0)
        {
            return Err(ShiftError::spec(format!(
                "periods {periods:?} are not multiples of {:?}",
                self.periods
            )));
        }
        let b = self.window(&vec![0; self.dim()], periods);
        Ok(TorusConfig {
            periods: b.extents,
            cells: b.cells,
        })
    }

    /// Exchanges the two axes of a two-dimensional torus.
    pub fn transposed(&self) -> TorusConfig {
        assert_eq!(self.dim(), 2, "transpose needs two axes");
        let (w, h) = (self.periods[0], self.periods[1]);
        let mut cells = Vec::with_capacity(w * h);
        for x in 0..w {
            for y in 0..h {
                cells.push(self.get(&[x, y]));
            }
        }
        TorusConfig {
            periods: vec![h, w],
            cells,
        }
    }

    /// Smallest torus describing the same configuration: each axis period is
    /// reduced to the least `p` with `p * e_i` in the period lattice.
    pub fn minimized(&self) -> TorusConfig {
        let mut periods = self.periods.clone();
        for axis in 0..self.dim() {
            let full = self.periods[axis];
            for p in 1..=full {
                if !full.is_multiple_of(p) {
                    continue;
                }
                let mut a = vec![0i64; self.dim()];
                a[axis] = p as i64;
                if translate(self, &a) == *self {
                    periods[axis] = p;
                    break;
                }
            }
        }
        let b = self.window(&vec![0; self.dim()], &periods);
        TorusConfig {
            periods: b.extents,
            cells: b.cells,
        }
    }

    /// Rows of a two-dimensional torus, bottom row first.
    pub fn rows_bottom_up(&self) -> Vec<Vec<Symbol>> {
        self.as_block().rows_bottom_up()
    }

    pub fn uses_symbol(&self, s: Symbol) -> bool {
        self.cells.contains(&s)
    }
}

/// Generators of the lattice of translation vectors fixing a torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodLattice {
    periods: Vec<usize>,
    /// Periods inside the fundamental domain, in storage order.
    fundamental: Vec<Vec<i64>>,
    generators: Vec<Vec<i64>>,
}

impl PeriodLattice {
    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn fundamental(&self) -> &[Vec<i64>] {
        &self.fundamental
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let reduced: Vec<i64> = v
            .iter()
            .zip(&self.periods)
            .map(|(&c, &p)| c.rem_euclid(p as i64))
            .collect();
        self.fundamental.contains(&reduced)
    }
}

/// True iff every cell of `pattern`, shifted by `offset`, lies in `block` and
/// matches it.
pub fn occurs_at(pattern: &GeneralPattern, block: &RectBlock, offset: &[i64]) -> bool {
    if pattern.dim() != block.dim() || offset.len() != block.dim() {
        return false;
    }
    pattern.cells().all(|(v, s)| {
        let c: Vec<i64> = v.iter().zip(offset).map(|(a, b)| a + b).collect();
        block.get_signed(&c) == Some(s)
    })
}

fn check_block_against(block: &RectBlock, spec: &ShiftSpec) -> Result<()> {
    if block.dim() != spec.dimension {
        return Err(ShiftError::spec(format!(
            "block has dimension {}, spec has {}",
            block.dim(),
            spec.dimension
        )));
    }
    if let Some(&s) = block.cells().iter().find(|&&s| s >= spec.alphabet.len()) {
        return Err(ShiftError::spec(format!(
            "block uses symbol ordinal {s} outside the alphabet"
        )));
    }
    Ok(())
}

/// Enumerates the offsets at which a pattern of the given extents fits inside
/// a block, in storage order.
fn placements(outer: &[usize], inner: &[usize]) -> Vec<Vec<i64>> {
    if inner.iter().zip(outer).any(|(i, o)| i > o) {
        return Vec::new();
    }
    let room: Vec<usize> = outer.iter().zip(inner).map(|(o, i)| o - i + 1).collect();
    (0..cell_count(&room))
        .map(|k| unravel(k, &room).into_iter().map(|c| c as i64).collect())
        .collect()
}

/// True iff no forbidden pattern of `spec` occurs anywhere inside `block`.
pub fn is_locally_admissible(block: &RectBlock, spec: &ShiftSpec) -> Result<bool> {
    check_block_against(block, spec)?;
    for p in &spec.forbidden {
        for off in placements(block.extents(), &p.extents()) {
            if occurs_at(p, block, &off) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All locally admissible blocks of the given extents, in lexicographic order
/// of their cell arrays.
pub fn enumerate_admissible_blocks(
    spec: &ShiftSpec,
    extents: &[usize],
    budget: &SearchBudget,
) -> Result<Vec<RectBlock>> {
    if extents.len() != spec.dimension || extents.contains(&0) {
        return Err(ShiftError::spec(format!(
            "extents {extents:?} invalid for dimension {}",
            spec.dimension
        )));
    }
    let total = cell_count(extents);
    if total as u64 > budget.max_cells {
        return Err(ShiftError::Budget {
            what: "block cells",
            limit: budget.max_cells,
            progress: 0,
        });
    }
    let st = strides(extents);
    // For every cell, the placements that become fully assigned at that cell.
    let mut checks: Vec<Vec<(usize, Vec<i64>)>> = vec![Vec::new(); total];
    for (pi, p) in spec.forbidden.iter().enumerate() {
        for off in placements(extents, &p.extents()) {
            let last = p
                .support()
                .map(|v| {
                    v.iter()
                        .zip(&off)
                        .zip(&st)
                        .map(|((a, b), k)| (a + b) as usize * k)
                        .sum::<usize>()
                })
                .max()
                .unwrap();
            checks[last].push((pi, off));
        }
    }
    let n = spec.alphabet.len();
    let mut cells = vec![0usize; total];
    let mut out = Vec::new();
    let mut nodes = 0u64;
    enumerate_rec(
        spec, extents, &st, &checks, n, 0, &mut cells, &mut out, &mut nodes, budget,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    spec: &ShiftSpec,
    extents: &[usize],
    st: &[usize],
    checks: &[Vec<(usize, Vec<i64>)>],
    n: usize,
    pos: usize,
    cells: &mut [Symbol],
    out: &mut Vec<RectBlock>,
    nodes: &mut u64,
    budget: &SearchBudget,
) -> Result<()> {
    if pos == cells.len() {
        out.push(RectBlock {
            extents: extents.to_vec(),
            cells: cells.to_vec(),
        });
        return Ok(());
    }
    for s in 0..n {
        *nodes += 1;
        if *nodes > budget.max_nodes {
            return Err(ShiftError::Budget {
                what: "search nodes",
                limit: budget.max_nodes,
                progress: out.len() as u64,
            });
        }
        cells[pos] = s;
        let ok = checks[pos].iter().all(|(pi, off)| {
            !spec.forbidden[*pi].cells().all(|(v, sym)| {
                let idx: usize = v
                    .iter()
                    .zip(off)
                    .zip(st)
                    .map(|((a, b), k)| (a + b) as usize * k)
                    .sum();
                cells[idx] == sym
            })
        });
        if ok {
            enumerate_rec(
                spec,
                extents,
                st,
                checks,
                n,
                pos + 1,
                cells,
                out,
                nodes,
                budget,
            )?;
        }
    }
    Ok(())
}

/// `sigma_a`: the configuration `v -> config(v + a)`.
pub fn translate(config: &TorusConfig, a: &[i64]) -> TorusConfig {
    let n = config.cells.len();
    let cells = (0..n)
        .map(|i| {
            let c = unravel(i, &config.periods);
            let shifted: Vec<i64> = c.iter().zip(a).map(|(&x, &d)| x as i64 + d).collect();
            config.get_wrapped(&shifted)
        })
        .collect();
    TorusConfig {
        periods: config.periods.clone(),
        cells,
    }
}

/// All periods in the fundamental domain together with the axis periods.
pub fn period_lattice(config: &TorusConfig) -> PeriodLattice {
    let d = config.dim();
    let fundamental: Vec<Vec<i64>> = (0..config.cells.len())
        .map(|i| {
            unravel(i, &config.periods)
                .into_iter()
                .map(|c| c as i64)
                .collect::<Vec<_>>()
        })
        .filter(|v| translate(config, v) == *config)
        .collect();
    let mut generators = fundamental.clone();
    for axis in 0..d {
        let mut e = vec![0i64; d];
        e[axis] = config.periods[axis] as i64;
        generators.push(e);
    }
    PeriodLattice {
        periods: config.periods.clone(),
        fundamental,
        generators,
    }
}

/// A shift of finite type: dimension, alphabet and forbidden patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSpec {
    pub(crate) dimension: usize,
    pub(crate) alphabet: Alphabet,
    pub(crate) forbidden: Vec<GeneralPattern>,
}

impl ShiftSpec {
    pub fn new(
        dimension: usize,
        alphabet: Alphabet,
        forbidden: Vec<GeneralPattern>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(ShiftError::spec("dimension must be positive"));
        }
        for p in &forbidden {
            if p.dim() != dimension {
                return Err(ShiftError::spec(format!(
                    "forbidden pattern of dimension {} in a {dimension}-dimensional spec",
                    p.dim()
                )));
            }
            if let Some((_, s)) = p.cells().find(|(_, s)| *s >= alphabet.len()) {
                return Err(ShiftError::spec(format!(
                    "forbidden pattern uses symbol ordinal {s} outside the alphabet"
                )));
            }
        }
        Ok(ShiftSpec {
            dimension,
            alphabet,
            forbidden,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn forbidden(&self) -> &[GeneralPattern] {
        &self.forbidden
    }

    /// Every forbidden pattern is a domino along some axis.
    pub fn is_one_step(&self) -> bool {
        self.forbidden.iter().all(|p| p.as_domino().is_some())
    }

    /// Sorted, deduplicated forbidden list.
    pub fn normalized(&self) -> ShiftSpec {
        let mut forbidden = self.forbidden.clone();
        forbidden.sort();
        forbidden.dedup();
        ShiftSpec {
            dimension: self.dimension,
            alphabet: self.alphabet.clone(),
            forbidden,
        }
    }

    /// Coordinatewise maximum of the forbidden patterns' bounding boxes
    /// (all ones when nothing is forbidden).
    pub fn max_pattern_extents(&self) -> Vec<usize> {
        (0..self.dimension)
            .map(|i| {
                self.forbidden
                    .iter()
                    .map(|p| p.extents()[i])
                    .max()
                    .unwrap_or(1)
            })
            .collect()
    }

    /// True iff no forbidden pattern occurs anywhere in the periodic
    /// configuration (placements read with wraparound).
    pub fn admits_torus(&self, config: &TorusConfig) -> bool {
        if config.dim() != self.dimension
            || config.cells().iter().any(|&s| s >= self.alphabet.len())
        {
            return false;
        }
        let origins: Vec<Vec<i64>> = (0..config.cells.len())
            .map(|i| {
                unravel(i, &config.periods)
                    .into_iter()
                    .map(|c| c as i64)
                    .collect()
            })
            .collect();
        self.forbidden.iter().all(|p| {
            origins.iter().all(|o| {
                !p.cells().all(|(v, s)| {
                    let c: Vec<i64> = v.iter().zip(o).map(|(a, b)| a + b).collect();
                    config.get_wrapped(&c) == s
                })
            })
        })
    }
}
