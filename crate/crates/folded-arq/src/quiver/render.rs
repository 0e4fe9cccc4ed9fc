use super::{folded_from_element, ARQuiver, FoldedARQuiver};
use crate::coxeter::TwistedCoxeter;
use crate::error::{Error, Result};
use crate::rootsys::{root_name, Automorphism};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write;

/// Anything that can be drawn on a grid of rows and ticks.
pub trait Drawable {
    fn title(&self) -> String;
    /// `(label, row, tick)` for every vertex.
    fn cells(&self) -> Vec<(String, usize, i32)>;
    fn edges(&self) -> Vec<(usize, usize)>;
}

impl Drawable for FoldedARQuiver {
    fn title(&self) -> String {
        format!("{} {}", self.diagram(), self.element)
    }

    fn cells(&self) -> Vec<(String, usize, i32)> {
        (0..self.vertices.len()).map(|k| (self.eps(k).to_string(), self.vertices[k].orbit, self.vertices[k].tick)).collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().copied().collect()
    }
}

impl Drawable for ARQuiver {
    fn title(&self) -> String {
        format!("{} [{}]", self.diagram, self.class)
    }

    fn cells(&self) -> Vec<(String, usize, i32)> {
        let fallback = self.class.heap();
        self.vertices
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let tick = v.tick.unwrap_or_else(|| -(fallback.pred[k].count_ones() as i32));
                (root_name(&self.diagram, &v.root), v.residue, tick)
            })
            .collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().copied().collect()
    }
}

/// Graphviz source with pinned positions, ticks shifted by `tick_offset`.
pub fn to_dot(q: &impl Drawable, tick_offset: i32) -> String {
    let mut out = String::new();
    writeln!(out, "digraph arq {{").unwrap();
    writeln!(out, "  label=\"{}\";", q.title()).unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (k, (label, row, tick)) in q.cells().iter().enumerate() {
        writeln!(out, "  v{} [label=\"{}\", pos=\"{},{}!\"];", k, label, tick + tick_offset, -(*row as i32)).unwrap();
    }
    for (a, b) in q.edges() {
        writeln!(out, "  v{} -> v{};", a, b).unwrap();
    }
    out.push_str("}\n");
    out
}

/// A plain grid: one line per row, one column per tick, highest tick on the left.
pub fn to_text(q: &impl Drawable, tick_offset: i32) -> String {
    let cells = q.cells();
    if cells.is_empty() {
        return String::new();
    }
    let width = cells.iter().map(|c| c.0.chars().count()).max().unwrap_or(1).max(3);
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.1).collect();
    let lo = cells.iter().map(|c| c.2).min().unwrap();
    let hi = cells.iter().map(|c| c.2).max().unwrap();
    let mut out = String::new();
    write!(out, "{:>4} ", "").unwrap();
    for t in (lo..=hi).rev() {
        write!(out, "{:>w$}", t + tick_offset, w = width + 1).unwrap();
    }
    out.push('\n');
    for r in rows {
        write!(out, "{:>4} ", r).unwrap();
        for t in (lo..=hi).rev() {
            let label = cells.iter().find(|c| c.1 == r && c.2 == t).map(|c| c.0.as_str()).unwrap_or(".");
            write!(out, "{:>w$}", label, w = width + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub root: String,
    pub coeffs: Vec<i32>,
    pub orbit: usize,
    pub tick: i32,
    pub sign: i8,
}

/// Serialized form of a folded AR-quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldedJson {
    pub diagram: String,
    pub n: usize,
    pub body: Vec<usize>,
    pub class: String,
    pub height: Vec<i32>,
    pub vertices: Vec<JsonVertex>,
    pub arrows: Vec<(usize, usize)>,
}

pub fn folded_to_json(f: &FoldedARQuiver) -> FoldedJson {
    FoldedJson {
        diagram: f.diagram().name(),
        n: f.n,
        body: f.element.body.clone(),
        class: f.class.to_string(),
        height: f.height(),
        vertices: f
            .vertices
            .iter()
            .enumerate()
            .map(|(k, v)| JsonVertex {
                root: f.eps(k).to_string(),
                coeffs: v.root.coeffs.clone(),
                orbit: v.orbit,
                tick: v.tick,
                sign: v.sign,
            })
            .collect(),
        arrows: f.arrows.iter().copied().collect(),
    }
}

/// Rebuild a folded quiver from its serialized form, checking every field
/// against the quiver recomputed from the body.
pub fn folded_from_json(j: &FoldedJson) -> Result<FoldedARQuiver> {
    let t = TwistedCoxeter::new(Automorphism::d_fold(j.n), j.body.clone())?;
    let f = folded_from_element(&t)?;
    let shift = j.height.first().zip(f.height().first()).map(|(a, b)| a - b).unwrap_or(0);
    let mut expect = folded_to_json(&f);
    for v in expect.vertices.iter_mut() {
        v.tick += shift;
    }
    expect.height.iter_mut().for_each(|h| *h += shift);
    if &expect != j {
        return Err(Error::Invalid("serialized quiver does not match its body".into()));
    }
    if shift == 0 {
        return Ok(f);
    }
    let mut vertices = f.vertices.clone();
    vertices.iter_mut().for_each(|v| v.tick += shift);
    Ok(FoldedARQuiver::assemble(f.n, f.class.clone(), f.element.clone(), vertices, f.arrows.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::all_folded;

    #[test]
    fn json_round_trip() {
        for f in all_folded(4) {
            let j = folded_to_json(&f);
            let text = serde_json::to_string(&j).unwrap();
            let back: FoldedJson = serde_json::from_str(&text).unwrap();
            let g = folded_from_json(&back).unwrap();
            assert_eq!(g.vertices, f.vertices);
            assert_eq!(g.arrows, f.arrows);
        }
    }

    #[test]
    fn tampered_json_is_rejected() {
        let f = &all_folded(3)[0];
        let mut j = folded_to_json(f);
        j.vertices.swap(0, 1);
        assert!(folded_from_json(&j).is_err());
    }

    #[test]
    fn text_grid_shape() {
        let f = &all_folded(3)[0];
        let text = to_text(f, 0);
        assert_eq!(text.lines().count(), 4);
        assert_eq!(text.matches('<').count(), 12);
        let dot = to_dot(f, 3);
        assert_eq!(dot.matches("->").count(), f.arrows.len());
    }
}
