//! The line-oriented spec file format.
//!
//! ```text
//! # golden mean
//! dim 2
//! symbols 0 1
//! forbid h 1 1        # left to right
//! forbid v 1 1        # bottom to top
//! forbid rect 2 2     # followed by 2 rows, top row first; '.' is a wildcard
//! 1 .
//! . 1
//! hmatrix             # followed by one 0/1 row per symbol
//! 1 1
//! 1 0
//! vmatrix
//! 1 1
//! 1 0
//! ```

use std::fmt::Write as _;

use crate::dynamics::SearchBudget;
use crate::error::{Result, ShiftError};
use crate::graph::{graph_from_one_step, one_step_graph_for_sft, MultiGraph};
use crate::matrix::Matrix;
use crate::pattern::{Alphabet, GeneralPattern, RectBlock, ShiftSpec, Symbol, TorusConfig};

/// A parsed spec file: forbidden patterns, matrices, or both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub dim: usize,
    pub alphabet: Alphabet,
    pub spec: Option<ShiftSpec>,
    pub graph: Option<MultiGraph>,
}

impl SpecFile {
    /// The graph to analyse: the matrices when present, otherwise the graph of
    /// the patterns (recoded with a window covering every pattern when the
    /// patterns are not all dominoes).
    pub fn to_graph(&self, budget: &SearchBudget) -> Result<MultiGraph> {
        if let Some(g) = &self.graph {
            return Ok(g.clone());
        }
        let spec = self.shift_spec();
        if spec.is_one_step() {
            graph_from_one_step(&spec)
        } else {
            let window = spec.max_pattern_extents();
            Ok(one_step_graph_for_sft(&spec, &window, budget)?.0)
        }
    }

    /// The pattern spec, or the forbidden-domino spec of the matrices.
    pub fn shift_spec(&self) -> ShiftSpec {
        match (&self.spec, &self.graph) {
            (Some(s), _) => s.clone(),
            (None, Some(g)) => crate::graph::spec_from_graph(g).expect("graph has symbols"),
            (None, None) => {
                ShiftSpec::new(self.dim, self.alphabet.clone(), Vec::new()).expect("valid")
            }
        }
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> ShiftError {
    ShiftError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with 1-based columns, comments stripped.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &body[s..]));
    }
    out.into_iter()
        .map(|(byte, t)| (body[..byte].chars().count() + 1, t))
        .collect()
}

struct Parser<'a> {
    lines: Vec<(usize, Vec<(usize, &'a str)>)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn next_line(&mut self) -> Option<(usize, Vec<(usize, &'a str)>)> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l
    }
}

fn parse_usize(line: usize, (col, tok): (usize, &str), what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, col, format!("expected {what}, found '{tok}'")))
}

pub fn parse_spec(text: &str) -> Result<SpecFile> {
    let mut p = Parser {
        lines: text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, tokens(l)))
            .filter(|(_, t)| !t.is_empty())
            .collect(),
        pos: 0,
    };
    let mut dim: Option<usize> = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut forbidden: Vec<GeneralPattern> = Vec::new();
    let mut matrices: [Option<(usize, Matrix)>; 2] = [None, None];

    while let Some((ln, toks)) = p.next_line() {
        let (col, directive) = toks[0];
        match directive {
            "dim" => {
                if dim.is_some() {
                    return Err(parse_err(ln, col, "dimension declared twice"));
                }
                let t = *toks
                    .get(1)
                    .ok_or_else(|| parse_err(ln, col, "dim needs a value"))?;
                let d = parse_usize(ln, t, "a dimension")?;
                if d == 0 {
                    return Err(parse_err(ln, t.0, "dimension must be positive"));
                }
                if let Some(&(c, _)) = toks.get(2) {
                    return Err(parse_err(ln, c, "unexpected token after dim"));
                }
                dim = Some(d);
            }
            "symbols" => {
                if alphabet.is_some() {
                    return Err(parse_err(ln, col, "symbols declared twice"));
                }
                if toks.len() < 2 {
                    return Err(parse_err(ln, col, "symbols needs at least one name"));
                }
                for (k, &(c, name)) in toks.iter().enumerate().skip(1) {
                    if name == "." {
                        return Err(parse_err(ln, c, "'.' is reserved for wildcards"));
                    }
                    if toks[1..k].iter().any(|&(_, prev)| prev == name) {
                        return Err(parse_err(ln, c, format!("symbol '{name}' declared twice")));
                    }
                }
                alphabet = Some(
                    Alphabet::new(toks[1..].iter().map(|t| t.1))
                        .map_err(|e| parse_err(ln, col, e.to_string()))?,
                );
            }
            "forbid" => {
                let d = dim.ok_or_else(|| parse_err(ln, col, "forbid before dim"))?;
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| parse_err(ln, col, "forbid before symbols"))?;
                let &(kc, kind) = toks
                    .get(1)
                    .ok_or_else(|| parse_err(ln, col, "forbid needs h, v or rect"))?;
                match kind {
                    "h" | "v" => {
                        let axis = usize::from(kind == "v");
                        if axis >= d {
                            return Err(parse_err(
                                ln,
                                kc,
                                format!("axis '{kind}' needs dimension at least {}", axis + 1),
                            ));
                        }
                        if toks.len() < 3 {
                            return Err(parse_err(ln, kc, "forbidden word is empty"));
                        }
                        let word = toks[2..]
                            .iter()
                            .map(|&(c, s)| lookup(a, ln, c, s))
                            .collect::<Result<Vec<_>>>()?;
                        forbidden.push(GeneralPattern::along_axis(d, axis, &word)?);
                    }
                    "rect" => {
                        if d != 2 {
                            return Err(parse_err(ln, kc, "forbid rect needs dimension 2"));
                        }
                        let w = parse_usize(
                            ln,
                            *toks
                                .get(2)
                                .ok_or_else(|| parse_err(ln, kc, "rect needs a width"))?,
                            "a width",
                        )?;
                        let h = parse_usize(
                            ln,
                            *toks
                                .get(3)
                                .ok_or_else(|| parse_err(ln, kc, "rect needs a height"))?,
                            "a height",
                        )?;
                        if w == 0 || h == 0 {
                            return Err(parse_err(ln, kc, "rect extents must be positive"));
                        }
                        let mut cells = Vec::new();
                        for row in 0..h {
                            let (rl, rt) = p.next_line().ok_or_else(|| {
                                parse_err(ln, col, format!("rect needs {h} rows, found {row}"))
                            })?;
                            if rt.len() != w {
                                return Err(parse_err(
                                    rl,
                                    rt[0].0,
                                    format!("rect row has {} entries, expected {w}", rt.len()),
                                ));
                            }
                            let y = (h - 1 - row) as i64;
                            for (x, &(c, s)) in rt.iter().enumerate() {
                                if s != "." {
                                    cells.push((vec![x as i64, y], lookup(a, rl, c, s)?));
                                }
                            }
                        }
                        if cells.is_empty() {
                            return Err(parse_err(ln, col, "rect pattern has only wildcards"));
                        }
                        forbidden.push(GeneralPattern::new(2, cells)?);
                    }
                    other => {
                        return Err(parse_err(ln, kc, format!("unknown forbid kind '{other}'")))
                    }
                }
            }
            "hmatrix" | "vmatrix" => {
                let axis = usize::from(directive == "vmatrix");
                if dim != Some(2) {
                    return Err(parse_err(ln, col, "matrices need dim 2 declared first"));
                }
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| parse_err(ln, col, "matrix before symbols"))?;
                if matrices[axis].is_some() {
                    return Err(parse_err(ln, col, format!("{directive} given twice")));
                }
                if let Some(&(c, _)) = toks.get(1) {
                    return Err(parse_err(
                        ln,
                        c,
                        format!("unexpected token after {directive}"),
                    ));
                }
                let n = a.len();
                let mut m = Matrix::zeros(n);
                for i in 0..n {
                    let (rl, rt) = p.next_line().ok_or_else(|| {
                        parse_err(ln, col, format!("{directive} needs {n} rows, found {i}"))
                    })?;
                    if rt.len() != n {
                        return Err(parse_err(
                            rl,
                            rt[0].0,
                            format!("matrix row has {} entries, expected {n}", rt.len()),
                        ));
                    }
                    for (j, &(c, t)) in rt.iter().enumerate() {
                        match t {
                            "0" => {}
                            "1" => m.set(i, j, 1),
                            _ => {
                                return Err(parse_err(
                                    rl,
                                    c,
                                    format!("matrix entries must be 0 or 1, found '{t}'"),
                                ))
                            }
                        }
                    }
                }
                matrices[axis] = Some((ln, m));
            }
            other => return Err(parse_err(ln, col, format!("unknown directive '{other}'"))),
        }
    }

    let dim = dim.ok_or_else(|| parse_err(1, 1, "missing dim"))?;
    let alphabet = alphabet.ok_or_else(|| parse_err(1, 1, "missing symbols"))?;
    let matrix_line = matrices[0].as_ref().map_or(1, |m| m.0);
    let graph = match matrices {
        [None, None] => None,
        [Some((_, h)), Some((_, v))] => {
            Some(MultiGraph::new(alphabet.symbols().to_vec(), vec![h, v])?)
        }
        [Some((l, _)), None] | [None, Some((l, _))] => {
            return Err(parse_err(
                l,
                1,
                "hmatrix and vmatrix must be given together",
            ))
        }
    };
    let spec = if forbidden.is_empty() && graph.is_some() {
        None
    } else {
        Some(ShiftSpec::new(dim, alphabet.clone(), forbidden)?)
    };
    if let (Some(s), Some(g)) = (&spec, &graph) {
        let line = matrix_line;
        let from_patterns = graph_from_one_step(s).map_err(|_| {
            parse_err(
                line,
                1,
                "matrices given with patterns that are not all dominoes",
            )
        })?;
        if from_patterns != *g {
            return Err(parse_err(
                line,
                1,
                "matrices disagree with the forbidden dominoes",
            ));
        }
    }
    Ok(SpecFile {
        dim,
        alphabet,
        spec,
        graph,
    })
}

fn lookup(a: &Alphabet, line: usize, col: usize, name: &str) -> Result<Symbol> {
    a.ordinal(name)
        .ok_or_else(|| parse_err(line, col, format!("symbol '{name}' is not declared")))
}

/// Prints a spec file that parses back to the same [`SpecFile`].
pub fn print_spec(file: &SpecFile) -> String {
    let mut out = String::new();
    let names = file.alphabet.symbols();
    writeln!(out, "dim {}", file.dim).unwrap();
    writeln!(out, "symbols {}", names.join(" ")).unwrap();
    if let Some(spec) = &file.spec {
        for p in spec.forbidden() {
            let ext = p.extents();
            let axis_word = (0..file.dim).find(|&k| {
                ext.iter().enumerate().all(|(i, &e)| i == k || e == 1) && p.len() == ext[k]
            });
            match axis_word {
                Some(k) if k < 2 => {
                    let word: Vec<&str> = p.cells().map(|(_, s)| names[s].as_str()).collect();
                    writeln!(out, "forbid {} {}", ["h", "v"][k], word.join(" ")).unwrap();
                }
                _ => {
                    writeln!(out, "forbid rect {} {}", ext[0], ext[1]).unwrap();
                    for y in (0..ext[1]).rev() {
                        let row: Vec<&str> = (0..ext[0])
                            .map(|x| {
                                p.symbol_at(&[x as i64, y as i64])
                                    .map_or(".", |s| names[s].as_str())
                            })
                            .collect();
                        writeln!(out, "{}", row.join(" ")).unwrap();
                    }
                }
            }
        }
    }
    if let Some(g) = &file.graph {
        for (name, m) in [("hmatrix", g.h()), ("vmatrix", g.v())] {
            writeln!(out, "{name}").unwrap();
            for row in m.rows() {
                let r: Vec<String> = row.iter().map(u64::to_string).collect();
                writeln!(out, "{}", r.join(" ")).unwrap();
            }
        }
    }
    out
}

/// Rows top to bottom, symbols separated by single spaces, one line per row.
pub fn render_rows(rows_bottom_up: &[Vec<Symbol>], labels: &[String]) -> String {
    let mut out = String::new();
    for row in rows_bottom_up.iter().rev() {
        let r: Vec<&str> = row.iter().map(|&s| labels[s].as_str()).collect();
        out.push_str(&r.join(" "));
        out.push('\n');
    }
    out
}

/// ASCII picture of a two-dimensional torus's fundamental domain.
pub fn render_ascii(t: &TorusConfig, labels: &[String]) -> String {
    render_rows(&t.rows_bottom_up(), labels)
}

pub fn render_block(b: &RectBlock, labels: &[String]) -> String {
    render_rows(&b.rows_bottom_up(), labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOLDEN: &str = "# golden mean\ndim 2\nsymbols 0 1\nforbid h 1 1\nforbid v 1 1\n";

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn golden_file() {
        let f = parse_spec(GOLDEN).unwrap();
        assert_eq!(f.spec.as_ref().unwrap().forbidden().len(), 2);
        let g = f.to_graph(&SearchBudget::default()).unwrap();
        assert_eq!(g.h(), &Matrix::from_rows(&[[1, 1], [1, 0]]).unwrap());
    }

    #[test]
    fn matrices_file() {
        let text =
            "dim 2\nsymbols 0 1 2\nhmatrix\n0 1 0\n0 0 1\n1 1 0\nvmatrix\n1 1 0\n0 0 1\n1 1 0\n";
        let f = parse_spec(text).unwrap();
        assert!(f.spec.is_none());
        let g = f.graph.unwrap();
        assert_eq!(
            g.h().rows(),
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]
        );
        assert_eq!(
            g.v().rows(),
            vec![vec![1, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]
        );
    }

    #[test]
    fn diagnostics() {
        let err = parse_spec("dim 2\nsymbols 0 1\nforbid h 1 2\n").unwrap_err();
        assert_eq!(
            err,
            ShiftError::Parse {
                line: 3,
                column: 12,
                message: "symbol '2' is not declared".into()
            }
        );
        let err = parse_spec("dim 2\nsymbols a b\nhmatrix\n1 1\n1\n").unwrap_err();
        assert!(matches!(
            err,
            ShiftError::Parse {
                line: 5,
                column: 1,
                ..
            }
        ));
        let err = parse_spec("dim 2\nsymbols a\nfrobid h a a\n").unwrap_err();
        assert!(matches!(
            err,
            ShiftError::Parse {
                line: 3,
                column: 1,
                ..
            }
        ));
        let err =
            parse_spec("dim 2\nsymbols 0 1\nforbid h 1 1\nhmatrix\n1 1\n1 1\nvmatrix\n1 1\n1 1\n")
                .unwrap_err();
        assert!(err.to_string().contains("disagree"));
    }

    #[test]
    fn round_trip() {
        let text =
            "dim 2\nsymbols a b c\nforbid h a b\nforbid v c c c\nforbid rect 2 2\na .\n. b\n";
        let f = parse_spec(text).unwrap();
        let again = parse_spec(&print_spec(&f)).unwrap();
        assert_eq!(f, again);
        let g = parse_spec(GOLDEN).unwrap();
        assert_eq!(parse_spec(&print_spec(&g)).unwrap(), g);
    }

    #[test]
    fn rect_rows_are_top_first() {
        let f = parse_spec("dim 2\nsymbols 0 1\nforbid rect 1 2\n1\n0\n").unwrap();
        assert_eq!(
            f.spec.unwrap().forbidden()[0],
            GeneralPattern::vertical(&[0, 1])
        );
    }

    #[test]
    fn rendering() {
        let t = TorusConfig::from_rows_bottom_up(&[&[1, 2, 0, 0], &[0, 0, 1, 2]]).unwrap();
        assert_eq!(render_ascii(&t, &labels(3)), "0 0 1 2\n1 2 0 0\n");
        assert_eq!(
            render_ascii(&TorusConfig::constant(vec![1, 1], 0), &labels(1)),
            "0\n"
        );
        let d = TorusConfig::from_rows_bottom_up(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(render_ascii(&d, &labels(2)), "0 1\n1 0\n");
    }
}
