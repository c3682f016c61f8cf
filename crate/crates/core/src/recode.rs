//! Higher-block codes and one-step recoding of arbitrary forbidden sets.
//!
//! A spec with forbidden patterns fitting inside a window `P` is recoded over
//! the alphabet of admissible `P`-blocks. Two block symbols may sit next to
//! each other along an axis iff they overlap progressively there and their
//! union is admissible, so the recoded spec is one-step and conjugate to the
//! original through [`beta_apply`] / [`beta_inverse`].

use std::collections::{BTreeSet, HashMap};

use crate::dynamics::SearchBudget;
use crate::error::{Result, ShiftError};
use crate::pattern::{
    cell_count, enumerate_admissible_blocks, is_locally_admissible, unravel, Alphabet,
    GeneralPattern, RectBlock, ShiftSpec, TorusConfig,
};

/// The block alphabet of a higher-block recoding.
#[derive(Clone, Debug)]
pub struct BlockAlphabetCoding {
    window: Vec<usize>,
    base_spec: ShiftSpec,
    block_symbols: Vec<RectBlock>,
    forward_index: HashMap<RectBlock, usize>,
}

impl BlockAlphabetCoding {
    pub fn window(&self) -> &[usize] {
        &self.window
    }

    pub fn base_spec(&self) -> &ShiftSpec {
        &self.base_spec
    }

    pub fn block_symbols(&self) -> &[RectBlock] {
        &self.block_symbols
    }

    pub fn len(&self) -> usize {
        self.block_symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_symbols.is_empty()
    }

    pub fn ordinal(&self, block: &RectBlock) -> Option<usize> {
        self.forward_index.get(block).copied()
    }

    /// Name used for block symbol `i` in the recoded alphabet.
    pub fn symbol_name(i: usize) -> String {
        format!("b{i}")
    }
}

/// Removes the first (`first = true`) or last slice of a block along `axis`.
fn drop_slice(b: &RectBlock, axis: usize, first: bool) -> Option<RectBlock> {
    let ext = b.extents();
    if ext[axis] == 1 {
        return None;
    }
    let mut origin = vec![0; ext.len()];
    if first {
        origin[axis] = 1;
    }
    let mut sub = ext.to_vec();
    sub[axis] -= 1;
    Some(b.sub_block(&origin, &sub))
}

/// True iff `c`, placed one step after `b` along `axis` (0-based), agrees with
/// `b` on their overlap.
pub fn overlap_progressive(b: &RectBlock, c: &RectBlock, axis: usize) -> Result<bool> {
    if b.extents() != c.extents() {
        return Err(ShiftError::spec(
            "overlap test needs blocks of equal extents",
        ));
    }
    if axis >= b.dim() {
        return Err(ShiftError::spec(format!(
            "axis {axis} out of range for dimension {}",
            b.dim()
        )));
    }
    Ok(drop_slice(b, axis, true) == drop_slice(c, axis, false))
}

/// Union of `b` and `c` with `c` one step after `b` along `axis`. The caller
/// guarantees the two overlap progressively.
fn union_along(b: &RectBlock, c: &RectBlock, axis: usize) -> RectBlock {
    let ext = b.extents();
    let mut big = ext.to_vec();
    big[axis] += 1;
    let cells = (0..cell_count(&big))
        .map(|i| {
            let mut coord = unravel(i, &big);
            if coord[axis] == 0 {
                b.get(&coord)
            } else {
                coord[axis] -= 1;
                c.get(&coord)
            }
        })
        .collect();
    RectBlock::new(big, cells).expect("extents match cells")
}

/// Replaces every forbidden pattern by all `target`-extent rectangles that
/// contain it.
pub fn uniformize_forbidden(
    spec: &ShiftSpec,
    target: &[usize],
    budget: &SearchBudget,
) -> Result<ShiftSpec> {
    if target.len() != spec.dimension() || target.contains(&0) {
        return Err(ShiftError::spec(format!(
            "invalid target extents {target:?}"
        )));
    }
    let n = spec.alphabet().len();
    let total = cell_count(target);
    let mut out = BTreeSet::new();
    let mut work = 0u64;
    for p in spec.forbidden() {
        let pe = p.extents();
        if pe.iter().zip(target).any(|(a, b)| a > b) {
            return Err(ShiftError::spec(format!(
                "forbidden pattern of extents {pe:?} does not fit in {target:?}"
            )));
        }
        let room: Vec<usize> = target.iter().zip(&pe).map(|(t, e)| t - e + 1).collect();
        for k in 0..cell_count(&room) {
            let off: Vec<i64> = unravel(k, &room).into_iter().map(|c| c as i64).collect();
            // fixed cells from the pattern, free cells enumerated as an odometer
            let mut fixed = vec![None; total];
            for (v, s) in p.cells() {
                let idx = v
                    .iter()
                    .zip(&off)
                    .rev()
                    .zip(target.iter().rev())
                    .fold(0usize, |acc, ((a, b), &t)| acc * t + (a + b) as usize);
                fixed[idx] = Some(s);
            }
            let free: Vec<usize> = (0..total).filter(|&i| fixed[i].is_none()).collect();
            let combos = (n as u64)
                .checked_pow(free.len() as u32)
                .unwrap_or(u64::MAX);
            work = work.saturating_add(combos);
            if work > budget.max_nodes {
                return Err(ShiftError::Budget {
                    what: "uniformized patterns",
                    limit: budget.max_nodes,
                    progress: out.len() as u64,
                });
            }
            for mut code in 0..combos {
                let mut cells: Vec<usize> = fixed.iter().map(|c| c.unwrap_or(0)).collect();
                for &i in &free {
                    cells[i] = (code % n as u64) as usize;
                    code /= n as u64;
                }
                out.insert(RectBlock::new(target.to_vec(), cells)?);
            }
        }
    }
    let forbidden = out.iter().map(GeneralPattern::from_block).collect();
    ShiftSpec::new(spec.dimension(), spec.alphabet().clone(), forbidden)
}

/// One-step spec over the alphabet of admissible `window` blocks, plus the
/// coding relating it to `spec`.
pub fn higher_block_spec(
    spec: &ShiftSpec,
    window: &[usize],
    budget: &SearchBudget,
) -> Result<(ShiftSpec, BlockAlphabetCoding)> {
    let uniform = uniformize_forbidden(spec, window, budget)?;
    let blocks = enumerate_admissible_blocks(&uniform, window, budget)?;
    let n = blocks.len();
    let d = spec.dimension();
    let pairs = (n as u64).saturating_mul(n as u64).saturating_mul(d as u64);
    if pairs > budget.max_nodes {
        return Err(ShiftError::Budget {
            what: "block alphabet pairs",
            limit: budget.max_nodes,
            progress: n as u64,
        });
    }
    if n == 0 {
        return Err(ShiftError::spec(format!(
            "no admissible blocks of extents {window:?}: the shift is empty"
        )));
    }
    let mut forbidden = Vec::new();
    for axis in 0..d {
        for (a, ba) in blocks.iter().enumerate() {
            for (b, bb) in blocks.iter().enumerate() {
                let ok = overlap_progressive(ba, bb, axis)?
                    && is_locally_admissible(&union_along(ba, bb, axis), &uniform)?;
                if !ok {
                    forbidden.push(GeneralPattern::along_axis(d, axis, &[a, b])?);
                }
            }
        }
    }
    let alphabet = Alphabet::new((0..n).map(BlockAlphabetCoding::symbol_name))?;
    let forward_index = blocks
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let coding = BlockAlphabetCoding {
        window: window.to_vec(),
        base_spec: spec.clone(),
        block_symbols: blocks,
        forward_index,
    };
    Ok((ShiftSpec::new(d, alphabet, forbidden)?, coding))
}

/// Replaces each cell by the ordinal of the window block whose bottom-left
/// corner sits there.
pub fn beta_apply(config: &TorusConfig, coding: &BlockAlphabetCoding) -> Result<TorusConfig> {
    let window = coding.window();
    if config.dim() != window.len() {
        return Err(ShiftError::spec("torus and window dimensions differ"));
    }
    if config.periods().iter().zip(window).any(|(p, w)| p < w) {
        return Err(ShiftError::spec(format!(
            "torus periods {:?} are smaller than the window {window:?}",
            config.periods()
        )));
    }
    if !coding.base_spec().admits_torus(config) {
        return Err(ShiftError::Consistency(
            "configuration contains a forbidden pattern".into(),
        ));
    }
    let cells = (0..config.cells().len())
        .map(|i| {
            let origin: Vec<i64> = unravel(i, config.periods())
                .into_iter()
                .map(|c| c as i64)
                .collect();
            let w = config.window(&origin, window);
            coding.ordinal(&w).ok_or_else(|| {
                ShiftError::Consistency(format!("window at {origin:?} is not a block symbol"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TorusConfig::new(config.periods().to_vec(), cells)
}

/// Reads back the bottom-left symbol of every block, checking that adjacent
/// blocks overlap progressively.
pub fn beta_inverse(config: &TorusConfig, coding: &BlockAlphabetCoding) -> Result<TorusConfig> {
    let n = coding.len();
    if let Some(&s) = config.cells().iter().find(|&&s| s >= n) {
        return Err(ShiftError::Consistency(format!(
            "block symbol {s} out of range"
        )));
    }
    let periods = config.periods();
    for i in 0..config.cells().len() {
        let c = unravel(i, periods);
        let here = &coding.block_symbols()[config.cells()[i]];
        for axis in 0..config.dim() {
            let mut next = c.clone();
            next[axis] = (next[axis] + 1) % periods[axis];
            let there = &coding.block_symbols()[config.get(&next)];
            if !overlap_progressive(here, there, axis)? {
                return Err(ShiftError::Consistency(format!(
                    "blocks at {c:?} and {next:?} do not overlap along axis {axis}"
                )));
            }
        }
    }
    let cells = config
        .cells()
        .iter()
        .map(|&s| coding.block_symbols()[s].cells()[0])
        .collect();
    TorusConfig::new(periods.to_vec(), cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::period_lattice;

    fn golden_mean() -> ShiftSpec {
        ShiftSpec::new(
            2,
            Alphabet::numeric(2),
            vec![
                GeneralPattern::horizontal(&[1, 1]),
                GeneralPattern::vertical(&[1, 1]),
            ],
        )
        .unwrap()
    }

    fn blk(w: usize, h: usize, cells: &[usize]) -> RectBlock {
        RectBlock::new(vec![w, h], cells.to_vec()).unwrap()
    }

    #[test]
    fn overlap_examples() {
        assert!(overlap_progressive(&blk(2, 1, &[0, 1]), &blk(2, 1, &[1, 0]), 0).unwrap());
        assert!(!overlap_progressive(&blk(2, 1, &[0, 1]), &blk(2, 1, &[0, 1]), 0).unwrap());
        let constant = blk(2, 2, &[1, 1, 1, 1]);
        assert!(overlap_progressive(&constant, &constant, 1).unwrap());
        assert!(overlap_progressive(&constant, &constant, 2).is_err());
        assert!(overlap_progressive(&constant, &blk(2, 1, &[1, 1]), 0).is_err());
    }

    #[test]
    fn uniformize_golden_mean() {
        let budget = SearchBudget::default();
        let u = uniformize_forbidden(&golden_mean(), &[2, 2], &budget).unwrap();
        assert_eq!(u.forbidden().len(), 9);
        let empty = ShiftSpec::new(2, Alphabet::numeric(2), vec![]).unwrap();
        assert!(uniformize_forbidden(&empty, &[3, 3], &budget)
            .unwrap()
            .forbidden()
            .is_empty());
        let full = ShiftSpec::new(
            2,
            Alphabet::numeric(2),
            vec![GeneralPattern::from_block(&blk(2, 2, &[1, 0, 0, 1]))],
        )
        .unwrap();
        assert_eq!(uniformize_forbidden(&full, &[2, 2], &budget).unwrap(), full);
        assert!(uniformize_forbidden(&full, &[1, 2], &budget).is_err());
    }

    #[test]
    fn one_symbol_full_shift() {
        let spec = ShiftSpec::new(2, Alphabet::numeric(1), vec![]).unwrap();
        let (hb, coding) = higher_block_spec(&spec, &[2, 2], &SearchBudget::default()).unwrap();
        assert_eq!(coding.len(), 1);
        assert!(hb.forbidden().is_empty());
    }

    #[test]
    fn golden_mean_recoding_is_one_step() {
        let (hb, coding) =
            higher_block_spec(&golden_mean(), &[2, 2], &SearchBudget::default()).unwrap();
        assert_eq!(coding.len(), 7);
        assert!(hb
            .forbidden()
            .iter()
            .all(|p| p.len() == 2 && p.as_domino().is_some()));
    }

    #[test]
    fn beta_round_trips() {
        let (_, coding) =
            higher_block_spec(&golden_mean(), &[2, 2], &SearchBudget::default()).unwrap();
        let zeros = TorusConfig::constant(vec![2, 2], 0);
        let rec = beta_apply(&zeros, &coding).unwrap();
        assert!(rec.cells().iter().all(|&s| s == rec.cells()[0]));
        assert_eq!(beta_inverse(&rec, &coding).unwrap(), zeros);

        let diag = TorusConfig::from_rows_bottom_up(&[&[1, 0], &[0, 1]]).unwrap();
        let rec = beta_apply(&diag, &coding).unwrap();
        assert_eq!(beta_inverse(&rec, &coding).unwrap(), diag);
        assert_eq!(period_lattice(&rec), period_lattice(&diag));
    }

    #[test]
    fn beta_rejects_bad_input() {
        let (_, coding) =
            higher_block_spec(&golden_mean(), &[2, 2], &SearchBudget::default()).unwrap();
        let small = TorusConfig::constant(vec![1, 2], 0);
        assert!(matches!(
            beta_apply(&small, &coding),
            Err(ShiftError::Spec(_))
        ));
        let ones = TorusConfig::constant(vec![2, 2], 1);
        assert!(matches!(
            beta_apply(&ones, &coding),
            Err(ShiftError::Consistency(_))
        ));
        // two different block symbols side by side that do not overlap
        let all0 = coding.ordinal(&blk(2, 2, &[0, 0, 0, 0])).unwrap();
        let corner = coding.ordinal(&blk(2, 2, &[1, 0, 0, 0])).unwrap();
        let bad = TorusConfig::new(vec![2, 1], vec![all0, corner]).unwrap();
        assert!(matches!(
            beta_inverse(&bad, &coding),
            Err(ShiftError::Consistency(_))
        ));
    }
}
