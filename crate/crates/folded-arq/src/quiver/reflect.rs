use super::{tick_arrows, ARQuiver, FoldedARQuiver, FoldedVertex, Vertex};
use crate::coxeter::{twisted_coxeter_from_class, DynkinQuiver};
use crate::error::{Error, Result};
use crate::rootsys::{reflect, star_involution, Automorphism, Kind, Root, SignedRoot};
use std::collections::BTreeSet;

fn reflected_label(x: &ARQuiver, i: usize, root: &Root) -> Result<Root> {
    match reflect(&x.diagram, i, root) {
        SignedRoot::Positive(r) => Ok(r),
        SignedRoot::Negative(_) => Err(Error::NotASink(i)),
    }
}

/// Replace the vertex `alpha_i` at `(i, p)` by a vertex at `(i*, p - shift)`
/// and apply `s_i` to every other label.
fn move_sink(x: &ARQuiver, i: usize, shift: i32) -> Result<ARQuiver> {
    if !x.class.sinks().contains(&i) {
        return Err(Error::NotASink(i));
    }
    let d = x.diagram;
    let simple = Root::simple(&d, i);
    let star = star_involution(&d)[i - 1];
    let mut vertices = Vec::with_capacity(x.vertices.len());
    let mut moved = None;
    for v in &x.vertices {
        if v.root == simple {
            let p = v.tick.ok_or_else(|| Error::Invalid("reflection by coordinates needs ticks".into()))?;
            moved = Some(Vertex { root: simple.clone(), residue: star, tick: Some(p - shift) });
        } else {
            vertices.push(Vertex { root: reflected_label(x, i, &v.root)?, residue: v.residue, tick: v.tick });
        }
    }
    vertices.push(moved.ok_or(Error::NotASink(i))?);
    let arrows = tick_arrows(&d, &vertices);
    Ok(ARQuiver { diagram: d, class: x.class.reflect_right(i), vertices, arrows })
}

/// Reflect the AR-quiver of a Dynkin quiver at a sink `i`, moving `alpha_i`
/// down by the Coxeter number to residue `i*`.
pub fn reflect_gamma(g: &ARQuiver, q: &DynkinQuiver, i: usize) -> Result<(ARQuiver, DynkinQuiver)> {
    if !q.is_sink(i) {
        return Err(Error::NotASink(i));
    }
    let h = match g.diagram.kind {
        Kind::A => g.diagram.n as i32 + 1,
        Kind::D => 2 * g.diagram.n as i32,
    };
    Ok((move_sink(g, i, h)?, q.reflect(i)))
}

/// Reflect a twisted AR-quiver of `D_{n+1}` with ticks at a sink `i`.
pub fn reflect_twisted(x: &ARQuiver, i: usize) -> Result<ARQuiver> {
    move_sink(x, i, 2 * x.diagram.n as i32 + 2)
}

/// Reflect a folded AR-quiver at a sink `i`: `alpha_i` moves `2(n + 1)` ticks
/// down within its orbit.
pub fn reflect_folded(f: &FoldedARQuiver, i: usize) -> Result<FoldedARQuiver> {
    let n = f.n;
    let d = f.diagram();
    if !f.class.sinks().contains(&i) {
        return Err(Error::NotASink(i));
    }
    let simple = Root::simple(&d, i);
    let star = star_involution(&d)[i - 1];
    let mut vertices = Vec::with_capacity(f.vertices.len());
    let mut moved = None;
    for v in &f.vertices {
        if v.root == simple {
            moved = Some(FoldedVertex {
                root: simple.clone(),
                orbit: v.orbit,
                tick: v.tick - 2 * (n as i32 + 1),
                sign: if star == n + 1 { -1 } else { 1 },
            });
        } else {
            let root = match reflect(&d, i, &v.root) {
                SignedRoot::Positive(r) => r,
                SignedRoot::Negative(_) => return Err(Error::NotASink(i)),
            };
            vertices.push(FoldedVertex { root, ..v.clone() });
        }
    }
    vertices.push(moved.ok_or(Error::NotASink(i))?);
    let mut arrows = BTreeSet::new();
    for (a, va) in vertices.iter().enumerate() {
        for (b, vb) in vertices.iter().enumerate() {
            if va.orbit.abs_diff(vb.orbit) == 1 && vb.tick == va.tick + 1 {
                arrows.insert((a, b));
            }
        }
    }
    let class = f.class.reflect_right(i);
    let element = twisted_coxeter_from_class(&class, &Automorphism::d_fold(n))?;
    Ok(FoldedARQuiver::assemble(n, class, element, vertices, arrows))
}

/// Reflect a combinatorial AR-quiver at a sink `i` without coordinates: drop
/// the vertex of `alpha_i`, add a vertex of residue `i*` with arrows to the
/// last vertex of each neighbouring residue that dominates residues `i*` and
/// its own, and relabel by `s_i`.
pub fn reflect_combinatorial(x: &ARQuiver, i: usize) -> Result<ARQuiver> {
    if !x.class.sinks().contains(&i) {
        return Err(Error::NotASink(i));
    }
    let d = x.diagram;
    let simple = Root::simple(&d, i);
    let star = star_involution(&d)[i - 1];
    let gone = x.position(&simple).ok_or(Error::NotASink(i))?;
    let keep: Vec<usize> = (0..x.vertices.len()).filter(|&k| k != gone).collect();
    let renumber = |k: usize| keep.iter().position(|&x| x == k).expect("kept vertex");
    let mut vertices: Vec<Vertex> = keep
        .iter()
        .map(|&k| {
            let v = &x.vertices[k];
            Ok(Vertex { root: reflected_label(x, i, &v.root)?, residue: v.residue, tick: None })
        })
        .collect::<Result<_>>()?;
    let mut arrows: BTreeSet<(usize, usize)> =
        x.arrows.iter().filter(|&&(a, b)| a != gone && b != gone).map(|&(a, b)| (renumber(a), renumber(b))).collect();
    let remaining = ARQuiver { diagram: d, class: x.class.clone(), vertices: vertices.clone(), arrows: arrows.clone() };
    let new = vertices.len();
    for j in d.neighbors(star) {
        let candidates: Vec<usize> = (0..new).filter(|&k| remaining.vertices[k].residue == j).collect();
        let rivals: Vec<usize> =
            (0..new).filter(|&k| remaining.vertices[k].residue == j || remaining.vertices[k].residue == star).collect();
        if let Some(&v) = candidates.iter().find(|&&v| rivals.iter().all(|&w| w == v || remaining.has_path(v, w))) {
            arrows.insert((new, v));
        }
    }
    vertices.push(Vertex { root: simple, residue: star, tick: None });
    Ok(ARQuiver { diagram: d, class: x.class.reflect_right(i), vertices, arrows })
}
