//! Multigraph presentations `G = (H_1, ..., H_d)` of one-step shifts.

use serde::Serialize;

use crate::dynamics::SearchBudget;
use crate::error::{Result, ShiftError};
use crate::matrix::Matrix;
use crate::pattern::{Alphabet, GeneralPattern, ShiftSpec, Symbol};
use crate::recode::{higher_block_spec, BlockAlphabetCoding};

/// A common vertex set with one 0/1 adjacency matrix per axis. Entry `(i, j)`
/// of axis `k` is 1 when vertex `j` may follow vertex `i` along that axis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiGraph {
    vertex_labels: Vec<String>,
    axes: Vec<Matrix>,
}

impl MultiGraph {
    pub fn new(vertex_labels: Vec<String>, axes: Vec<Matrix>) -> Result<Self> {
        if axes.is_empty() {
            return Err(ShiftError::spec("a multigraph needs at least one axis"));
        }
        let n = vertex_labels.len();
        for (k, m) in axes.iter().enumerate() {
            if m.size() != n {
                return Err(ShiftError::spec(format!(
                    "axis {k} matrix has size {}, expected {n}",
                    m.size()
                )));
            }
            if !m.is_binary() {
                return Err(ShiftError::spec(format!(
                    "axis {k} matrix has entries outside {{0,1}}"
                )));
            }
        }
        if n > 0 {
            Alphabet::new(vertex_labels.iter().cloned())?;
        }
        Ok(MultiGraph {
            vertex_labels,
            axes,
        })
    }

    /// Two-dimensional graph over the numeric labels `0..n`.
    pub fn from_hv(h: Matrix, v: Matrix) -> Result<Self> {
        let labels = (0..h.size()).map(|i| i.to_string()).collect();
        Self::new(labels, vec![h, v])
    }

    pub fn with_labels<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        axes: Vec<Matrix>,
    ) -> Result<Self> {
        Self::new(labels.into_iter().map(Into::into).collect(), axes)
    }

    pub fn empty(dim: usize) -> Self {
        MultiGraph {
            vertex_labels: Vec::new(),
            axes: vec![Matrix::zeros(0); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn len(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn axis(&self, k: usize) -> &Matrix {
        &self.axes[k]
    }

    pub fn axes(&self) -> &[Matrix] {
        &self.axes
    }

    /// Horizontal matrix of a two-dimensional graph.
    pub fn h(&self) -> &Matrix {
        &self.axes[0]
    }

    /// Vertical matrix of a two-dimensional graph.
    pub fn v(&self) -> &Matrix {
        &self.axes[1]
    }

    #[inline]
    pub fn allows(&self, axis: usize, from: Symbol, to: Symbol) -> bool {
        self.axes[axis].nonzero(from, to)
    }

    pub fn alphabet(&self) -> Option<Alphabet> {
        if self.is_empty() {
            None
        } else {
            Alphabet::new(self.vertex_labels.iter().cloned()).ok()
        }
    }

    /// Subgraph induced on `indices`, keeping their order.
    pub fn induced(&self, indices: &[usize]) -> MultiGraph {
        MultiGraph {
            vertex_labels: indices
                .iter()
                .map(|&i| self.vertex_labels[i].clone())
                .collect(),
            axes: self.axes.iter().map(|m| m.submatrix(indices)).collect(),
        }
    }

    /// The same graph with its two axes exchanged.
    pub fn swapped(&self) -> MultiGraph {
        assert_eq!(self.dim(), 2, "axis swap needs two axes");
        MultiGraph {
            vertex_labels: self.vertex_labels.clone(),
            axes: vec![self.axes[1].clone(), self.axes[0].clone()],
        }
    }

    /// Checks every adjacency of a torus, wraparound included.
    pub fn admits_torus(&self, t: &crate::pattern::TorusConfig) -> bool {
        if t.dim() != self.dim() || t.cells().iter().any(|&s| s >= self.len()) {
            return false;
        }
        let periods = t.periods();
        (0..t.cells().len()).all(|i| {
            let c = crate::pattern::unravel(i, periods);
            let a = t.cells()[i];
            (0..self.dim()).all(|axis| {
                let mut next = c.clone();
                next[axis] = (next[axis] + 1) % periods[axis];
                self.allows(axis, a, t.get(&next))
            })
        })
    }
}

/// Graph of a one-step spec: axis-`k` entry `(a, b)` is 1 unless the domino
/// `a` then `b` along axis `k` is forbidden.
pub fn graph_from_one_step(spec: &ShiftSpec) -> Result<MultiGraph> {
    let n = spec.alphabet().len();
    let mut axes = vec![Matrix::ones(n); spec.dimension()];
    for p in spec.forbidden() {
        let (axis, a, b) = p.as_domino().ok_or_else(|| {
            ShiftError::spec("spec is not one-step: recode it with a higher-block window first")
        })?;
        axes[axis].set(a, b, 0);
    }
    MultiGraph::new(spec.alphabet().symbols().to_vec(), axes)
}

/// One-step spec forbidding exactly the zero entries of each axis matrix.
pub fn spec_from_graph(g: &MultiGraph) -> Result<ShiftSpec> {
    let alphabet = g
        .alphabet()
        .ok_or_else(|| ShiftError::spec("an empty graph has no alphabet"))?;
    let d = g.dim();
    let mut forbidden = Vec::new();
    for axis in 0..d {
        let m = g.axis(axis);
        for i in 0..g.len() {
            for j in 0..g.len() {
                if !m.nonzero(i, j) {
                    forbidden.push(GeneralPattern::along_axis(d, axis, &[i, j])?);
                }
            }
        }
    }
    ShiftSpec::new(d, alphabet, forbidden)
}

/// Repeatedly deletes vertices with a zero row or zero column in any axis.
/// Returns the trimmed graph and the surviving original indices.
pub fn trim_with_indices(g: &MultiGraph) -> (MultiGraph, Vec<usize>) {
    let mut keep: Vec<usize> = (0..g.len()).collect();
    loop {
        let next: Vec<usize> = keep
            .iter()
            .copied()
            .filter(|&i| {
                g.axes().iter().all(|m| {
                    keep.iter().any(|&j| m.nonzero(i, j)) && keep.iter().any(|&j| m.nonzero(j, i))
                })
            })
            .collect();
        if next.len() == keep.len() {
            break;
        }
        keep = next;
    }
    (g.induced(&keep), keep)
}

pub fn trim(g: &MultiGraph) -> MultiGraph {
    trim_with_indices(g).0
}

/// Recode an arbitrary spec to a one-step higher-block spec and return its graph.
pub fn one_step_graph_for_sft(
    spec: &ShiftSpec,
    window: &[usize],
    budget: &SearchBudget,
) -> Result<(MultiGraph, BlockAlphabetCoding)> {
    let (one_step, coding) = higher_block_spec(spec, window, budget)?;
    Ok((graph_from_one_step(&one_step)?, coding))
}

/// Connected components of the undirected union of all axes, as lists of
/// original vertex indices in increasing order. Components are ordered by
/// their smallest vertex.
#[allow(clippy::needless_range_loop)]
pub fn component_indices(g: &MultiGraph) -> Vec<Vec<usize>> {
    let n = g.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if comp[j] == usize::MAX
                    && g.axes().iter().any(|m| m.nonzero(i, j) || m.nonzero(j, i))
                {
                    comp[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn decompose_components(g: &MultiGraph) -> Vec<MultiGraph> {
    component_indices(g)
        .iter()
        .map(|idx| g.induced(idx))
        .collect()
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

    #[test]
    fn golden_mean_round_trip() {
        let spec = ShiftSpec::new(
            2,
            Alphabet::numeric(2),
            vec![
                GeneralPattern::horizontal(&[1, 1]),
                GeneralPattern::vertical(&[1, 1]),
            ],
        )
        .unwrap();
        let g = graph_from_one_step(&spec).unwrap();
        assert_eq!(g, golden());
        assert_eq!(spec_from_graph(&g).unwrap(), spec);
    }

    #[test]
    fn three_symbols_horizontal_row_of_e() {
        let a = Alphabet::new(["e", "f", "g"]).unwrap();
        let (e, f, g) = (0, 1, 2);
        let forb = vec![
            GeneralPattern::horizontal(&[f, f]),
            GeneralPattern::horizontal(&[g, g]),
            GeneralPattern::horizontal(&[f, e]),
            GeneralPattern::horizontal(&[e, g]),
            GeneralPattern::vertical(&[f, f]),
            GeneralPattern::vertical(&[e, e]),
            GeneralPattern::vertical(&[g, g]),
            GeneralPattern::vertical(&[f, e]),
            GeneralPattern::vertical(&[e, g]),
        ];
        let gr = graph_from_one_step(&ShiftSpec::new(2, a, forb).unwrap()).unwrap();
        assert_eq!(gr.h().row(e), &[1, 1, 0]);
        assert_eq!(
            gr.h().rows(),
            vec![vec![1, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]
        );
        assert_eq!(
            gr.v().rows(),
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]
        );
    }

    #[test]
    fn non_one_step_rejected() {
        let spec = ShiftSpec::new(
            2,
            Alphabet::numeric(2),
            vec![GeneralPattern::horizontal(&[1, 0, 1])],
        )
        .unwrap();
        assert!(matches!(
            graph_from_one_step(&spec),
            Err(ShiftError::Spec(_))
        ));
    }

    #[test]
    fn free_shift_is_all_ones() {
        let spec = ShiftSpec::new(2, Alphabet::numeric(3), vec![]).unwrap();
        let g = graph_from_one_step(&spec).unwrap();
        assert_eq!(g.h(), &Matrix::ones(3));
        assert_eq!(g.v(), &Matrix::ones(3));
        let back = spec_from_graph(&MultiGraph::from_hv(Matrix::ones(2), Matrix::ones(2)).unwrap())
            .unwrap();
        assert!(back.forbidden().is_empty());
    }

    #[test]
    fn single_orbit_domino_count() {
        let h = m(&[&[1, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let v = m(&[&[0, 1, 1], &[1, 0, 0], &[1, 0, 0]]);
        let spec = spec_from_graph(&MultiGraph::from_hv(h, v).unwrap()).unwrap();
        let horiz = spec
            .forbidden()
            .iter()
            .filter(|p| p.as_domino().unwrap().0 == 0)
            .count();
        let vert = spec.forbidden().len() - horiz;
        assert_eq!((horiz, vert), (5, 5));
    }

    #[test]
    fn trim_examples() {
        // vertex 2 has no outgoing horizontal edge
        let h = m(&[&[1, 1, 0], &[1, 1, 1], &[0, 0, 0]]);
        let v = Matrix::ones(3);
        let t = trim(&MultiGraph::from_hv(h, v).unwrap());
        assert_eq!(t.labels(), &["0", "1"]);
        assert_eq!(trim(&golden()), golden());
        // chain 0 -> 1 with no cycle cascades to nothing
        let chain = m(&[&[0, 1], &[0, 0]]);
        let t = trim(&MultiGraph::from_hv(chain, Matrix::ones(2)).unwrap());
        assert!(t.is_empty());
    }

    #[test]
    fn components_of_two_components() {
        let h = m(&[
            &[0, 0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
        ]);
        let v = m(&[
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 1, 0, 0],
        ]);
        let g = MultiGraph::from_hv(h, v).unwrap();
        let parts = decompose_components(&g);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].labels(), &["0", "1", "2"]);
        assert_eq!(parts[1].labels(), &["3", "4", "5"]);
        assert_eq!(
            parts[0].h().rows(),
            vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]
        );
        assert_eq!(
            parts[1].v().rows(),
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }

    #[test]
    fn disjoint_golden_copies() {
        let mut h = Matrix::zeros(4);
        for (i, j) in [(0, 0), (0, 1), (1, 0), (2, 2), (2, 3), (3, 2)] {
            h.set(i, j, 1);
        }
        let g = MultiGraph::from_hv(h.clone(), h).unwrap();
        let parts = decompose_components(&g);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].axes(), parts[1].axes());
        assert_eq!(decompose_components(&golden()).len(), 1);
    }
}
