//! AR-quivers of commutation classes and of Dynkin quivers, and the folded
//! AR-quivers of twisted adapted classes of `D_{n+1}`.

mod additive;
mod gamma;
mod labeling;
mod laws;
mod reflect;
mod render;

pub use additive::{check_additive, local_identities, AdditiveReport, AdditiveSite, LocalIdentity, LocalShape, SiteShape};
pub use gamma::{build_gamma_q, default_height, gamma_residue_counts};
pub use labeling::{
    gluing_correspondence, label_by_gluing, label_by_snakes, snakes_and_swings, FamilyKind, GluedCopy, GluedVertex, Labeling, SectionalFamily, Snake,
};
pub use laws::{coordinate_laws, CoordinateLaws};
pub use reflect::{reflect_combinatorial, reflect_folded, reflect_gamma, reflect_twisted};
pub use render::{folded_from_json, folded_to_json, to_dot, to_text, Drawable, FoldedJson, JsonVertex};

use crate::coxeter::{class_from_twisted_coxeter, twisted_coxeter_from_class, TwistedCoxeter};
use crate::error::{Error, Result};
use crate::rootsys::{eps_form, Automorphism, Diagram, EpsForm, Root};
use crate::words::{CommClass, Heap};
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub root: Root,
    pub residue: usize,
    pub tick: Option<i32>,
}

/// A combinatorial AR-quiver, optionally carrying integer ticks.
/// Arrows `(k, j)` go from vertex `k` to vertex `j`.
#[derive(Clone, Debug)]
pub struct ARQuiver {
    pub diagram: Diagram,
    pub class: CommClass,
    pub vertices: Vec<Vertex>,
    pub arrows: BTreeSet<(usize, usize)>,
}

impl ARQuiver {
    pub fn position(&self, root: &Root) -> Option<usize> {
        self.vertices.iter().position(|v| &v.root == root)
    }

    /// Arrows as pairs of roots, for comparisons independent of vertex order.
    pub fn root_arrows(&self) -> BTreeSet<(Root, Root)> {
        self.arrows.iter().map(|&(a, b)| (self.vertices[a].root.clone(), self.vertices[b].root.clone())).collect()
    }

    /// `(root, residue, tick)` triples, sorted.
    pub fn labelled_points(&self) -> Vec<(Root, usize, Option<i32>)> {
        let mut out: Vec<_> = self.vertices.iter().map(|v| (v.root.clone(), v.residue, v.tick)).collect();
        out.sort();
        out
    }

    /// Whether a path leads from `from` to `to` (or they coincide).
    pub fn has_path(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(self.arrows.iter().filter(|&&(s, _)| s == v).map(|&(_, t)| t));
        }
        false
    }

    /// `alpha` precedes or equals `beta` in the convex order of the class.
    pub fn order_leq(&self, alpha: &Root, beta: &Root) -> Option<bool> {
        let a = self.position(alpha)?;
        let b = self.position(beta)?;
        Some(self.has_path(b, a))
    }
}

/// The quiver of a reduced word: vertex `k` is `beta_k` in residue `i_k`,
/// with an arrow `k -> j` when the letters are adjacent, `j` is the last
/// occurrence of its letter before `k` and `k` the first of its letter after `j`.
pub fn build_comb_arquiver(c: &CommClass) -> ARQuiver {
    comb_from_word(c.diagram, &c.canonical)
}

pub fn comb_from_word(d: Diagram, letters: &[usize]) -> ARQuiver {
    let class = CommClass::from_reduced(d, letters);
    let roots = crate::words::root_sequence(&d, letters).expect("quivers are built from reduced words");
    let vertices: Vec<Vertex> =
        roots.into_iter().zip(letters).map(|(root, &residue)| Vertex { root, residue, tick: None }).collect();
    let mut arrows = BTreeSet::new();
    for k in 0..letters.len() {
        for j in 0..k {
            if !d.adjacent(letters[j], letters[k]) {
                continue;
            }
            let last_j = (0..k).rev().find(|&x| letters[x] == letters[j]) == Some(j);
            let first_k = (j + 1..letters.len()).find(|&x| letters[x] == letters[k]) == Some(k);
            if last_j && first_k {
                arrows.insert((k, j));
            }
        }
    }
    ARQuiver { diagram: d, class, vertices, arrows }
}

/// Number of arrows of the `A_n` quiver pointing toward 1, i.e. along the
/// path from `n` to 1.
pub fn arrows_toward_one(q: &crate::coxeter::DynkinQuiver) -> i32 {
    q.arrows.iter().filter(|&&(s, t)| t < s).count() as i32
}

/// Height function on the orbits `1..=n` of a twisted adapted class, normalized
/// so that `xi(1) = 2 a + 1` with `a` the number of arrows pointing toward 1.
pub fn twisted_height(t: &TwistedCoxeter) -> Vec<i32> {
    let n = t.diagram().n;
    let qa = crate::coxeter::DynkinQuiver::from_coxeter_word(Diagram::a(n), &crate::coxeter::project_to_a(t))
        .expect("projections are Coxeter words");
    let mut xi = vec![0i32; n];
    for k in 1..n {
        let up = qa.arrows.contains(&(k, k + 1));
        xi[k] = if up { xi[k - 1] + 1 } else { xi[k - 1] - 1 };
    }
    let shift = 2 * arrows_toward_one(&qa) + 1 - xi[0];
    xi.iter().map(|x| x + shift).collect()
}

/// Twisted AR-quiver with ticks: block `k` of the seed word sits at `xi - 2k`,
/// arrows join adjacent residues whose ticks differ by one.
pub fn coordinates_twisted(c: &CommClass) -> Result<ARQuiver> {
    let n = c.diagram.n;
    let t = twisted_coxeter_from_class(c, &Automorphism::d_fold(n))?;
    coordinates_twisted_with_height(&t, &twisted_height(&t))
}

pub fn coordinates_twisted_with_height(t: &TwistedCoxeter, xi: &[i32]) -> Result<ARQuiver> {
    let d = t.diagram();
    let n = d.n;
    let word = t.seed_word();
    let class = class_from_twisted_coxeter(t)?;
    let roots = crate::words::root_sequence(&d, &word)?;
    let vertices: Vec<Vertex> = roots
        .into_iter()
        .enumerate()
        .map(|(pos, root)| {
            let residue = word[pos];
            let block = (pos / n) as i32;
            Vertex { root, residue, tick: Some(xi[residue.min(n) - 1] - 2 * block) }
        })
        .collect();
    let arrows = tick_arrows(&d, &vertices);
    Ok(ARQuiver { diagram: d, class, vertices, arrows })
}

pub(crate) fn tick_arrows(d: &Diagram, vertices: &[Vertex]) -> BTreeSet<(usize, usize)> {
    let mut arrows = BTreeSet::new();
    for (a, va) in vertices.iter().enumerate() {
        for (b, vb) in vertices.iter().enumerate() {
            if d.adjacent(va.residue, vb.residue) && vb.tick.zip(va.tick).map(|(q, p)| q == p + 1).unwrap_or(false) {
                arrows.insert((a, b));
            }
        }
    }
    arrows
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FoldedVertex {
    pub root: Root,
    pub orbit: usize,
    pub tick: i32,
    /// `-1` exactly for vertices of residue `n + 1`.
    pub sign: i8,
}

/// The folded AR-quiver of a twisted adapted class of `D_{n+1}`.
#[derive(Clone, Debug)]
pub struct FoldedARQuiver {
    pub n: usize,
    pub class: CommClass,
    pub element: TwistedCoxeter,
    pub vertices: Vec<FoldedVertex>,
    pub arrows: BTreeSet<(usize, usize)>,
    by_root: HashMap<Root, usize>,
    by_coord: HashMap<(usize, i32), usize>,
    heap: Heap,
    heap_pos: Vec<usize>,
}

impl FoldedARQuiver {
    pub(crate) fn assemble(
        n: usize,
        class: CommClass,
        element: TwistedCoxeter,
        vertices: Vec<FoldedVertex>,
        arrows: BTreeSet<(usize, usize)>,
    ) -> Self {
        let by_root = vertices.iter().enumerate().map(|(k, v)| (v.root.clone(), k)).collect();
        let by_coord = vertices.iter().enumerate().map(|(k, v)| ((v.orbit, v.tick), k)).collect();
        let heap = class.heap();
        let class_roots = class.roots();
        let heap_pos = vertices
            .iter()
            .map(|v| class_roots.iter().position(|r| r == &v.root).expect("every root occurs in the class"))
            .collect();
        FoldedARQuiver { n, class, element, vertices, arrows, by_root, by_coord, heap, heap_pos }
    }

    pub fn diagram(&self) -> Diagram {
        Diagram::d(self.n)
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.by_root.get(root).copied()
    }

    pub fn at(&self, orbit: usize, tick: i32) -> Option<usize> {
        self.by_coord.get(&(orbit, tick)).copied()
    }

    pub fn root_at(&self, orbit: usize, tick: i32) -> Option<&Root> {
        self.at(orbit, tick).map(|k| &self.vertices[k].root)
    }

    /// Folded coordinate `(orbit, tick)` of a root.
    pub fn coord(&self, root: &Root) -> Option<(usize, i32)> {
        self.index_of(root).map(|k| (self.vertices[k].orbit, self.vertices[k].tick))
    }

    pub fn coord_of_eps(&self, s: &str) -> Result<(usize, i32)> {
        let r = crate::rootsys::parse_root(&self.diagram(), s)?;
        self.coord(&r).ok_or(Error::NotARoot(r.coeffs))
    }

    pub fn eps(&self, k: usize) -> EpsForm {
        eps_form(&self.diagram(), &self.vertices[k].root).expect("vertices carry roots")
    }

    /// `alpha` strictly precedes `beta`: a path leads from `beta` to `alpha`.
    pub fn precedes(&self, alpha: &Root, beta: &Root) -> bool {
        match (self.index_of(alpha), self.index_of(beta)) {
            (Some(a), Some(b)) => self.heap.below(self.heap_pos[a], self.heap_pos[b]),
            _ => false,
        }
    }

    pub fn order_leq(&self, alpha: &Root, beta: &Root) -> bool {
        alpha == beta || self.precedes(alpha, beta)
    }

    pub fn comparable(&self, alpha: &Root, beta: &Root) -> bool {
        self.order_leq(alpha, beta) || self.order_leq(beta, alpha)
    }

    /// Height of each orbit: its largest tick.
    pub fn height(&self) -> Vec<i32> {
        (1..=self.n)
            .map(|o| self.vertices.iter().filter(|v| v.orbit == o).map(|v| v.tick).max().expect("orbits are inhabited"))
            .collect()
    }

    /// All occupied coordinates, sorted.
    pub fn coordinates(&self) -> Vec<(usize, i32)> {
        let mut c: Vec<_> = self.vertices.iter().map(|v| (v.orbit, v.tick)).collect();
        c.sort_unstable();
        c
    }

    /// Partition into the early, central and late regions:
    /// `tick >= orbit`, `|tick| < orbit` and `tick <= -orbit`.
    pub fn region(&self, k: usize) -> Region {
        let v = &self.vertices[k];
        let i = v.orbit as i32;
        if v.tick >= i {
            Region::Right
        } else if v.tick <= -i {
            Region::Left
        } else {
            Region::Central
        }
    }

    pub fn regions(&self) -> [Vec<Root>; 3] {
        let mut out = [Vec::new(), Vec::new(), Vec::new()];
        for k in 0..self.vertices.len() {
            let slot = match self.region(k) {
                Region::Left => 0,
                Region::Central => 1,
                Region::Right => 2,
            };
            out[slot].push(self.vertices[k].root.clone());
        }
        out
    }

    /// The same quiver with different labels at the same coordinates.
    pub fn relabel(&self, labels: &HashMap<(usize, i32), Root>) -> Result<FoldedARQuiver> {
        let mut vertices = self.vertices.clone();
        for v in vertices.iter_mut() {
            v.root = labels.get(&(v.orbit, v.tick)).cloned().ok_or_else(|| Error::Invalid("missing label".into()))?;
        }
        Ok(FoldedARQuiver::assemble(self.n, self.class.clone(), self.element.clone(), vertices, self.arrows.clone()))
    }

    /// Labels keyed by coordinate.
    pub fn labels(&self) -> HashMap<(usize, i32), Root> {
        self.vertices.iter().map(|v| ((v.orbit, v.tick), v.root.clone())).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Left,
    Central,
    Right,
}

/// Fold a twisted AR-quiver: residues `n` and `n + 1` merge into orbit `n`.
pub fn fold(x: &ARQuiver) -> Result<FoldedARQuiver> {
    let n = x.diagram.n;
    let element = twisted_coxeter_from_class(&x.class, &Automorphism::d_fold(n))?;
    let vertices = x
        .vertices
        .iter()
        .map(|v| {
            Ok(FoldedVertex {
                root: v.root.clone(),
                orbit: v.residue.min(n),
                tick: v.tick.ok_or_else(|| Error::Invalid("folding needs ticks".into()))?,
                sign: if v.residue == n + 1 { -1 } else { 1 },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FoldedARQuiver::assemble(n, x.class.clone(), element, vertices, x.arrows.clone()))
}

/// Twisted coordinates followed by folding.
pub fn folded_quiver(c: &CommClass) -> Result<FoldedARQuiver> {
    fold(&coordinates_twisted(c)?)
}

pub fn folded_from_element(t: &TwistedCoxeter) -> Result<FoldedARQuiver> {
    fold(&coordinates_twisted_with_height(t, &twisted_height(t))?)
}

/// All folded quivers of `D_{n+1}`, one per twisted Coxeter element.
pub fn all_folded(n: usize) -> Vec<FoldedARQuiver> {
    crate::coxeter::enumerate_twisted_coxeter(&Automorphism::d_fold(n))
        .iter()
        .map(|t| folded_from_element(t).expect("twisted elements give folded quivers"))
        .collect()
}
