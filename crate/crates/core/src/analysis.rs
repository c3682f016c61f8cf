//! Matrix criteria for two-dimensional graphs.
//!
//! Every test returns a [`Verdict`]. A test whose hypotheses fail says
//! `Inconclusive` and names the failing hypothesis; only [`analyze`] combines
//! verdicts, and it falls back to the exhaustive oracle when nothing fires.

use serde::Serialize;

use crate::dynamics::{
    arbitrary_period_construct, bounded_emptiness, propagate_permutation, OracleStatus,
    SearchBudget,
};
use crate::error::{Result, ShiftError};
use crate::graph::{component_indices, trim_with_indices, MultiGraph};
use crate::matrix::Matrix;
use crate::pattern::{Symbol, TorusConfig};

/// Products of the horizontal matrix `H` and the vertical matrix `V`.
///
/// `hv[i][j]` counts cells `k` with `i` at (0,0), `k` at (1,0), `j` at (1,1);
/// `vh[i][j]` counts cells `l` with `i` at (0,0), `l` at (0,1), `j` at (1,1).
/// `hvt` and `vth` link a top-left cell to a bottom-right cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub hv: Matrix,
    pub vh: Matrix,
    pub hvt: Matrix,
    pub vth: Matrix,
    pub pruned_hv: Matrix,
    pub pruned_vh: Matrix,
}

fn require_2d(g: &MultiGraph) -> Result<()> {
    if g.dim() != 2 {
        return Err(ShiftError::UnsupportedDimension(g.dim()));
    }
    Ok(())
}

pub fn products(g: &MultiGraph) -> Result<ProductReport> {
    require_2d(g)?;
    let (h, v) = (g.h(), g.v());
    let hv = h.mul(v);
    let vh = v.mul(h);
    let (pruned_hv, pruned_vh) = prune_products(&hv, &vh)?;
    Ok(ProductReport {
        hvt: h.mul(&v.transpose()),
        vth: v.transpose().mul(h),
        hv,
        vh,
        pruned_hv,
        pruned_vh,
    })
}

/// Zeroes each entry that is zero in either matrix.
pub fn prune_products(hv: &Matrix, vh: &Matrix) -> Result<(Matrix, Matrix)> {
    if hv.size() != vh.size() {
        return Err(ShiftError::spec(format!(
            "cannot prune a {0}x{0} matrix against a {1}x{1} one",
            hv.size(),
            vh.size()
        )));
    }
    let mut a = hv.clone();
    let mut b = vh.clone();
    for i in 0..hv.size() {
        for j in 0..hv.size() {
            if !hv.nonzero(i, j) || !vh.nonzero(i, j) {
                a.set(i, j, 0);
                b.set(i, j, 0);
            }
        }
    }
    Ok((a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixPredicates {
    pub is_permutation: bool,
    pub is_irreducible: bool,
}

#[allow(clippy::needless_range_loop)]
fn reachable_from(a: &Matrix, start: usize) -> Vec<bool> {
    let n = a.size();
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&j| a.nonzero(start, j)).collect();
    for &j in &stack {
        seen[j] = true;
    }
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if a.nonzero(i, j) && !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen
}

pub fn matrix_predicates(a: &Matrix) -> MatrixPredicates {
    let n = a.size();
    let is_permutation = a.is_binary()
        && a.row_sums().iter().all(|&s| s == 1)
        && a.col_sums().iter().all(|&s| s == 1);
    let is_irreducible = n > 0 && (0..n).all(|i| reachable_from(a, i).iter().all(|&r| r));
    MatrixPredicates {
        is_permutation,
        is_irreducible,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum VerdictStatus {
    Nonempty,
    Empty,
    FiniteSufficient,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub criterion: String,
    pub status: VerdictStatus,
    pub witness: Option<TorusConfig>,
    pub detail: String,
}

impl Verdict {
    fn new(criterion: &str, status: VerdictStatus, detail: impl Into<String>) -> Self {
        Verdict {
            criterion: criterion.into(),
            status,
            witness: None,
            detail: detail.into(),
        }
    }
}

/// Irreducible permutation pairs: non-empty exactly when `HV = VH`.
pub fn perm_commute_test(g: &MultiGraph) -> Result<Verdict> {
    const NAME: &str = "perm_commute";
    require_2d(g)?;
    let (ph, pv) = (matrix_predicates(g.h()), matrix_predicates(g.v()));
    let failing = match (ph, pv) {
        (h, _) if !h.is_permutation => Some("H is not a permutation matrix"),
        (_, v) if !v.is_permutation => Some("V is not a permutation matrix"),
        (h, _) if !h.is_irreducible => Some("H is not irreducible"),
        (_, v) if !v.is_irreducible => Some("V is not irreducible"),
        _ => None,
    };
    if let Some(reason) = failing {
        return Ok(Verdict::new(NAME, VerdictStatus::Inconclusive, reason));
    }
    if g.h().mul(g.v()) != g.v().mul(g.h()) {
        return Ok(Verdict::new(
            NAME,
            VerdictStatus::Empty,
            "HV differs from VH",
        ));
    }
    let propagated = propagate_permutation(g, 0, &SearchBudget::default())?;
    let mut v = Verdict::new(NAME, VerdictStatus::Nonempty, "HV equals VH");
    v.witness = propagated.witness;
    Ok(v)
}

fn zero_pattern_core(name: &str, left: &Matrix, right: &Matrix, names: (&str, &str)) -> Verdict {
    let (l, r) = names;
    let variant = if left.same_zero_pattern(right) {
        format!("{l} and {r} have the same zero pattern")
    } else if left.support_within(right) {
        format!("every nonzero entry of {l} is nonzero in {r}")
    } else if right.support_within(left) {
        format!("every nonzero entry of {r} is nonzero in {l}")
    } else {
        return Verdict::new(
            name,
            VerdictStatus::Inconclusive,
            format!("{l} and {r} each have a nonzero entry where the other is zero"),
        );
    };
    Verdict::new(
        name,
        VerdictStatus::Nonempty,
        format!("{variant}; periodic points of every horizontal period exist (see arbitrary_period_construct)"),
    )
}

/// Trims and reports an empty result when nothing survives.
fn trimmed_or_empty(g: &MultiGraph, name: &str) -> std::result::Result<MultiGraph, Verdict> {
    let t = trim_with_indices(g).0;
    if t.is_empty() {
        Err(Verdict::new(
            name,
            VerdictStatus::Empty,
            "no vertex survives trimming",
        ))
    } else {
        Ok(t)
    }
}

/// Non-empty when the supports of `HV` and `VH` are equal or nested.
pub fn zero_pattern_test(g: &MultiGraph) -> Result<Verdict> {
    const NAME: &str = "zero_pattern";
    require_2d(g)?;
    let t = match trimmed_or_empty(g, NAME) {
        Ok(t) => t,
        Err(v) => return Ok(v),
    };
    Ok(zero_pattern_core(
        NAME,
        &t.h().mul(t.v()),
        &t.v().mul(t.h()),
        ("HV", "VH"),
    ))
}

/// The zero-pattern test on `HV^T` and `V^T H`.
pub fn transpose_variant_test(g: &MultiGraph) -> Result<Verdict> {
    const NAME: &str = "transpose_variant";
    require_2d(g)?;
    let t = match trimmed_or_empty(g, NAME) {
        Ok(t) => t,
        Err(v) => return Ok(v),
    };
    let vt = t.v().transpose();
    Ok(zero_pattern_core(
        NAME,
        &t.h().mul(&vt),
        &vt.mul(t.h()),
        ("HV^T", "V^T H"),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TriominoKind {
    /// `a1` at (0,0), `a2` at (1,0), `a3` at (1,1).
    LowerRight,
    /// `x` at (0,0), `y` at (0,1), `z` at (1,1).
    UpperLeft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triomino {
    pub kind: TriominoKind,
    pub cells: [Symbol; 3],
}

impl Triomino {
    /// The symbols at (0,0) and (1,1).
    pub fn corners(&self) -> (Symbol, Symbol) {
        (self.cells[0], self.cells[2])
    }
}

/// Completable triominoes, their chaining matrices and the E-pair relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EPairTables {
    pub a1: Vec<Triomino>,
    pub a2: Vec<Triomino>,
    pub m_matrix: Matrix,
    pub n_matrix: Matrix,
    /// `(i, j)` with `a1[i]` and `a2[j]` sharing both corners, sorted.
    pub epair: Vec<(usize, usize)>,
}

impl EPairTables {
    /// Indices into `a2` of the E-pairs of `a1[i]`.
    pub fn epairs_of_a1(&self, i: usize) -> Vec<usize> {
        self.epair
            .iter()
            .filter(|p| p.0 == i)
            .map(|p| p.1)
            .collect()
    }

    /// Indices into `a1` of the E-pairs of `a2[j]`.
    pub fn epairs_of_a2(&self, j: usize) -> Vec<usize> {
        self.epair
            .iter()
            .filter(|p| p.1 == j)
            .map(|p| p.0)
            .collect()
    }
}

pub fn build_epair_tables(g: &MultiGraph) -> Result<EPairTables> {
    require_2d(g)?;
    let n = g.len();
    let (h, v) = (g.h(), g.v());
    let mut a1 = Vec::new();
    let mut a2 = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // (a, b, c) read as a1 a2 a3 of a lower-right shape
                if h.nonzero(a, b)
                    && v.nonzero(b, c)
                    && (0..n).any(|d| v.nonzero(a, d) && h.nonzero(d, c))
                {
                    a1.push(Triomino {
                        kind: TriominoKind::LowerRight,
                        cells: [a, b, c],
                    });
                }
                // (a, b, c) read as x y z of an upper-left shape
                if v.nonzero(a, b)
                    && h.nonzero(b, c)
                    && (0..n).any(|w| h.nonzero(a, w) && v.nonzero(w, c))
                {
                    a2.push(Triomino {
                        kind: TriominoKind::UpperLeft,
                        cells: [a, b, c],
                    });
                }
            }
        }
    }
    let in_a1 = |t: [Symbol; 3]| a1.binary_search_by(|p| p.cells.cmp(&t)).is_ok();
    let in_a2 = |t: [Symbol; 3]| a2.binary_search_by(|p| p.cells.cmp(&t)).is_ok();

    let mut m_matrix = Matrix::zeros(a1.len());
    for (i, x) in a1.iter().enumerate() {
        for (j, y) in a1.iter().enumerate() {
            let [_, a2_, a3] = x.cells;
            if y.cells[0] == a3 && in_a2([a2_, a3, y.cells[1]]) {
                m_matrix.set(i, j, 1);
            }
        }
    }
    let mut n_matrix = Matrix::zeros(a2.len());
    for (i, r) in a2.iter().enumerate() {
        for (j, s) in a2.iter().enumerate() {
            let [_, b2, b3] = r.cells;
            if s.cells[0] == b3 && in_a1([b2, b3, s.cells[1]]) {
                n_matrix.set(i, j, 1);
            }
        }
    }
    let mut epair = Vec::new();
    for (i, x) in a1.iter().enumerate() {
        for (j, y) in a2.iter().enumerate() {
            if x.corners() == y.corners() {
                epair.push((i, j));
            }
        }
    }
    Ok(EPairTables {
        a1,
        a2,
        m_matrix,
        n_matrix,
        epair,
    })
}

/// Whether the vertex shift of a 0/1 matrix contains a bi-infinite walk.
fn has_cycle(a: &Matrix) -> bool {
    (0..a.size()).any(|i| reachable_from(a, i)[i])
}

/// Every chain step of one matrix lifts through E-pairs to the other.
fn lifts(
    step: &Matrix,
    other: &Matrix,
    pairs_of: &dyn Fn(usize) -> Vec<usize>,
) -> Option<(usize, usize, usize)> {
    for i in 0..step.size() {
        for j in 0..step.size() {
            if !step.nonzero(i, j) {
                continue;
            }
            let targets = pairs_of(j);
            for i1 in pairs_of(i) {
                if !targets.iter().any(|&j1| other.nonzero(i1, j1)) {
                    return Some((i, j, i1));
                }
            }
        }
    }
    None
}

/// Non-empty when the vertex shifts of `M` and `N` both contain a cycle and
/// every `M` step lifts through E-pairs to an `N` step (or the reverse).
pub fn epair_nonempty_test(g: &MultiGraph) -> Result<Verdict> {
    const NAME: &str = "epair";
    let t = build_epair_tables(g)?;
    if !has_cycle(&t.m_matrix) || !has_cycle(&t.n_matrix) {
        return Ok(Verdict::new(
            NAME,
            VerdictStatus::Inconclusive,
            "the sequence space of M or of N is empty",
        ));
    }
    let m_first = lifts(&t.m_matrix, &t.n_matrix, &|i| t.epairs_of_a1(i));
    if m_first.is_none() {
        return Ok(Verdict::new(
            NAME,
            VerdictStatus::Nonempty,
            "every M step lifts to an N step through E-pairs (M and N read as one-dimensional vertex shifts)",
        ));
    }
    let n_first = lifts(&t.n_matrix, &t.m_matrix, &|j| t.epairs_of_a2(j));
    if n_first.is_none() {
        return Ok(Verdict::new(
            NAME,
            VerdictStatus::Nonempty,
            "every N step lifts to an M step through E-pairs (M and N read as one-dimensional vertex shifts)",
        ));
    }
    let (i, j, i1) = m_first.unwrap();
    Ok(Verdict::new(
        NAME,
        VerdictStatus::Inconclusive,
        format!("M step {i} -> {j} has E-pair {i1} with no N step to an E-pair of {j}, and the swapped condition fails too"),
    ))
}

/// Sufficient condition for finiteness: `M`, `N` permutations and unique E-pairs.
pub fn mn_finiteness_test(g: &MultiGraph) -> Result<Verdict> {
    const NAME: &str = "mn_finiteness";
    let t = build_epair_tables(g)?;
    if !matrix_predicates(&t.m_matrix).is_permutation
        || !matrix_predicates(&t.n_matrix).is_permutation
    {
        return Ok(Verdict::new(
            NAME,
            VerdictStatus::Inconclusive,
            "M and N are not both permutation matrices",
        ));
    }
    let unique = (0..t.a1.len()).all(|i| t.epairs_of_a1(i).len() == 1)
        && (0..t.a2.len()).all(|j| t.epairs_of_a2(j).len() == 1);
    if !unique {
        return Ok(Verdict::new(
            NAME,
            VerdictStatus::Inconclusive,
            "some triomino has more than one E-pair (its 2x2 completion is not unique)",
        ));
    }
    Ok(Verdict::new(
        NAME,
        VerdictStatus::FiniteSufficient,
        "M and N are permutation matrices and every triomino has a unique E-pair",
    ))
}

fn permutation_finite_test(g: &MultiGraph) -> Verdict {
    const NAME: &str = "permutation_pair";
    if matrix_predicates(g.h()).is_permutation && matrix_predicates(g.v()).is_permutation {
        Verdict::new(
            NAME,
            VerdictStatus::FiniteSufficient,
            "H and V are permutation matrices",
        )
    } else {
        Verdict::new(
            NAME,
            VerdictStatus::Inconclusive,
            "H or V is not a permutation matrix",
        )
    }
}

/// Propagation from every seed of a permutation pair: a witness from any seed
/// proves non-emptiness, contradictions from all seeds prove emptiness.
fn permutation_propagation_test(g: &MultiGraph, budget: &SearchBudget) -> Result<Verdict> {
    const NAME: &str = "permutation_propagation";
    if !matrix_predicates(g.h()).is_permutation || !matrix_predicates(g.v()).is_permutation {
        return Ok(Verdict::new(
            NAME,
            VerdictStatus::Inconclusive,
            "H or V is not a permutation matrix",
        ));
    }
    let mut details = Vec::new();
    for seed in 0..g.len() {
        let r = propagate_permutation(g, seed, budget)?;
        if r.status == OracleStatus::NonemptyWitness {
            let mut v = Verdict::new(NAME, VerdictStatus::Nonempty, r.detail);
            v.witness = r.witness;
            return Ok(v);
        }
        details.push(format!("seed {}: {}", g.labels()[seed], r.detail));
    }
    Ok(Verdict::new(NAME, VerdictStatus::Empty, details.join("; ")))
}

fn oracle_test(g: &MultiGraph, n_max: usize, budget: &SearchBudget) -> Verdict {
    const NAME: &str = "oracle";
    let r = bounded_emptiness(g, n_max, budget);
    let status = match r.status {
        OracleStatus::NonemptyWitness => VerdictStatus::Nonempty,
        OracleStatus::EmptyCertificate => VerdictStatus::Empty,
        _ => VerdictStatus::Inconclusive,
    };
    let mut v = Verdict::new(NAME, status, r.detail);
    v.witness = r.witness;
    v
}

/// Analysis of one connected component of the trimmed graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentAnalysis {
    /// Labels of the component's vertices, in the order used by its matrices.
    pub vertices: Vec<String>,
    pub h: Matrix,
    pub v: Matrix,
    pub predicates: [MatrixPredicates; 2],
    pub products: ProductReport,
    pub epairs: EPairTables,
    /// Non-emptiness verdicts, in a fixed order. Witnesses use global symbols.
    pub verdicts: Vec<Verdict>,
    pub finiteness_verdicts: Vec<Verdict>,
    pub nonempty: VerdictStatus,
    pub finite: VerdictStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    /// Labels removed by trimming.
    pub trimmed: Vec<String>,
    pub components: Vec<ComponentAnalysis>,
    pub nonempty: VerdictStatus,
    pub finite: VerdictStatus,
    pub notes: Vec<String>,
}

/// Largest cube side the oracle inspects inside [`analyze`].
pub const ORACLE_SIDE: usize = 6;

fn combine(verdicts: &[Verdict]) -> Result<VerdictStatus> {
    let has = |s| verdicts.iter().any(|v| v.status == s);
    match (has(VerdictStatus::Nonempty), has(VerdictStatus::Empty)) {
        (true, true) => Err(ShiftError::Consistency(format!(
            "criteria disagree: {}",
            verdicts
                .iter()
                .map(|v| format!("{}={:?}", v.criterion, v.status))
                .collect::<Vec<_>>()
                .join(", ")
        ))),
        (true, false) => Ok(VerdictStatus::Nonempty),
        (false, true) => Ok(VerdictStatus::Empty),
        _ => Ok(VerdictStatus::Inconclusive),
    }
}

fn relabel(t: &TorusConfig, global: &[usize]) -> TorusConfig {
    TorusConfig::new(
        t.periods().to_vec(),
        t.cells().iter().map(|&s| global[s]).collect(),
    )
    .expect("same shape")
}

fn analyze_component(
    sub: &MultiGraph,
    global: &[usize],
    budget: &SearchBudget,
) -> Result<ComponentAnalysis> {
    let mut verdicts = vec![
        perm_commute_test(sub)?,
        permutation_propagation_test(sub, budget)?,
    ];
    let mut zero = zero_pattern_test(sub)?;
    if zero.status == VerdictStatus::Nonempty {
        zero.witness = arbitrary_period_construct(sub, 1, budget).ok();
    }
    verdicts.push(zero);
    verdicts.push(transpose_variant_test(sub)?);
    verdicts.push(epair_nonempty_test(sub)?);
    verdicts.push(oracle_test(sub, ORACLE_SIDE, budget));
    for v in &mut verdicts {
        if let Some(w) = &v.witness {
            if !sub.admits_torus(w) {
                return Err(ShiftError::Consistency(format!(
                    "{} produced an invalid witness",
                    v.criterion
                )));
            }
            v.witness = Some(relabel(w, global));
        }
    }
    let nonempty = combine(&verdicts)?;
    let finiteness_verdicts = vec![mn_finiteness_test(sub)?, permutation_finite_test(sub)];
    let finite = if nonempty == VerdictStatus::Empty
        || finiteness_verdicts
            .iter()
            .any(|v| v.status == VerdictStatus::FiniteSufficient)
    {
        VerdictStatus::FiniteSufficient
    } else {
        VerdictStatus::Inconclusive
    };
    Ok(ComponentAnalysis {
        vertices: sub.labels().to_vec(),
        h: sub.h().clone(),
        v: sub.v().clone(),
        predicates: [matrix_predicates(sub.h()), matrix_predicates(sub.v())],
        products: products(sub)?,
        epairs: build_epair_tables(sub)?,
        verdicts,
        finiteness_verdicts,
        nonempty,
        finite,
    })
}

/// Trims, splits into components and runs every criterion on each component.
pub fn analyze(g: &MultiGraph, budget: &SearchBudget) -> Result<Analysis> {
    require_2d(g)?;
    let (t, keep) = trim_with_indices(g);
    let trimmed = (0..g.len())
        .filter(|i| !keep.contains(i))
        .map(|i| g.labels()[i].clone())
        .collect();
    let mut components = Vec::new();
    for comp in component_indices(&t) {
        let global: Vec<usize> = comp.iter().map(|&i| keep[i]).collect();
        components.push(analyze_component(&t.induced(&comp), &global, budget)?);
    }
    let statuses: Vec<VerdictStatus> = components.iter().map(|c| c.nonempty).collect();
    let nonempty = if statuses.contains(&VerdictStatus::Nonempty) {
        VerdictStatus::Nonempty
    } else if statuses.iter().all(|&s| s == VerdictStatus::Empty) {
        VerdictStatus::Empty
    } else {
        VerdictStatus::Inconclusive
    };
    let finite = if components
        .iter()
        .all(|c| c.finite == VerdictStatus::FiniteSufficient)
    {
        VerdictStatus::FiniteSufficient
    } else {
        VerdictStatus::Inconclusive
    };
    Ok(Analysis {
        trimmed,
        components,
        nonempty,
        finite,
        notes: vec![
            "vertices without an incoming or outgoing edge on some axis are removed before analysis".into(),
            "the E-pair test reads the sequence spaces of M and N as one-dimensional vertex shifts".into(),
            format!("the oracle searches tori and blocks of side at most {ORACLE_SIDE}"),
        ],
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

    fn transpose_pair() -> MultiGraph {
        MultiGraph::with_labels(
            ["1", "2", "3"],
            vec![
                m(&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]),
                m(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]]),
            ],
        )
        .unwrap()
    }

    fn two_components() -> MultiGraph {
        let mut h = Matrix::zeros(6);
        let mut v = Matrix::zeros(6);
        for (a, b) in [(0, 2), (1, 0), (2, 1), (3, 5), (4, 3), (5, 4)] {
            h.set(a, b, 1);
        }
        for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 5), (4, 4), (5, 3)] {
            v.set(a, b, 1);
        }
        MultiGraph::from_hv(h, v).unwrap()
    }

    #[test]
    fn products_of_identity() {
        let i = Matrix::identity(3);
        let p = products(&MultiGraph::from_hv(i.clone(), i.clone()).unwrap()).unwrap();
        for x in [&p.hv, &p.vh, &p.hvt, &p.vth] {
            assert_eq!(x, &i);
        }
        assert!(matches!(
            products(&MultiGraph::empty(3)),
            Err(ShiftError::UnsupportedDimension(3))
        ));
    }

    #[test]
    fn transpose_pair_products() {
        let p = products(&transpose_pair()).unwrap();
        assert_eq!(p.hv, m(&[&[1, 0, 1], &[0, 1, 0], &[1, 0, 2]]));
        assert_eq!(p.vh, m(&[&[1, 1, 0], &[1, 2, 0], &[0, 0, 1]]));
        assert_eq!(p.pruned_hv, m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]));
        assert_eq!(p.pruned_vh, m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]));
        assert!(prune_products(&Matrix::zeros(2), &Matrix::zeros(3)).is_err());
    }

    #[test]
    fn predicates() {
        let p = matrix_predicates(&Matrix::identity(3));
        assert!(p.is_permutation && !p.is_irreducible);
        assert!(matrix_predicates(two_components().h()).is_permutation);
        assert!(!matrix_predicates(&m(&[&[1, 1, 0], &[0, 0, 1], &[1, 0, 0]])).is_permutation);
        assert!(matrix_predicates(&m(&[&[0, 1], &[1, 0]])).is_irreducible);
    }

    #[test]
    fn zero_pattern_examples() {
        assert_eq!(
            zero_pattern_test(&golden()).unwrap().status,
            VerdictStatus::Nonempty
        );
        assert_eq!(
            zero_pattern_test(&transpose_pair()).unwrap().status,
            VerdictStatus::Inconclusive
        );
        assert_eq!(
            transpose_variant_test(&transpose_pair()).unwrap().status,
            VerdictStatus::Nonempty
        );
        assert_eq!(
            transpose_variant_test(&golden()).unwrap().status,
            VerdictStatus::Nonempty
        );
        let full = MultiGraph::from_hv(Matrix::ones(3), Matrix::ones(3)).unwrap();
        assert_eq!(
            zero_pattern_test(&full).unwrap().status,
            VerdictStatus::Nonempty
        );
        assert_eq!(
            zero_pattern_test(&MultiGraph::empty(2)).unwrap().status,
            VerdictStatus::Empty
        );
    }

    #[test]
    fn perm_commute_examples() {
        let g1 = two_components().induced(&[0, 1, 2]);
        let g2 = two_components().induced(&[3, 4, 5]);
        let v = perm_commute_test(&g1).unwrap();
        assert_eq!(v.status, VerdictStatus::Nonempty);
        assert!(g1.admits_torus(v.witness.as_ref().unwrap()));
        assert_eq!(
            perm_commute_test(&g2).unwrap().status,
            VerdictStatus::Inconclusive
        );
        let i = Matrix::identity(2);
        let id = MultiGraph::from_hv(i.clone(), i).unwrap();
        assert_eq!(
            perm_commute_test(&id).unwrap().status,
            VerdictStatus::Inconclusive
        );
    }

    #[test]
    fn epair_examples() {
        assert_eq!(
            epair_nonempty_test(&golden()).unwrap().status,
            VerdictStatus::Nonempty
        );
        let t = build_epair_tables(&MultiGraph::empty(2)).unwrap();
        assert!(t.a1.is_empty() && t.a2.is_empty());
        assert_eq!(
            epair_nonempty_test(&MultiGraph::empty(2)).unwrap().status,
            VerdictStatus::Inconclusive
        );
        let one = MultiGraph::from_hv(Matrix::ones(1), Matrix::ones(1)).unwrap();
        assert_eq!(
            mn_finiteness_test(&one).unwrap().status,
            VerdictStatus::FiniteSufficient
        );
    }

    #[test]
    fn analyze_two_components() {
        let a = analyze(&two_components(), &SearchBudget::default()).unwrap();
        assert_eq!(a.nonempty, VerdictStatus::Nonempty);
        assert_eq!(a.components.len(), 2);
        assert_eq!(a.components[0].nonempty, VerdictStatus::Nonempty);
        assert_eq!(a.components[1].nonempty, VerdictStatus::Empty);
        assert_eq!(a.finite, VerdictStatus::FiniteSufficient);
        let empty = analyze(&MultiGraph::empty(2), &SearchBudget::default()).unwrap();
        assert_eq!(empty.nonempty, VerdictStatus::Empty);
    }
}
