use super::{tick_arrows, ARQuiver, Vertex};
use crate::coxeter::DynkinQuiver;
use crate::rootsys::{is_positive_vec, reflect_vec, star_involution, Diagram, Kind, Root};
use std::collections::HashMap;

/// A height function for a Dynkin quiver: `xi(t) = xi(s) + 1` for every arrow
/// `s -> t`. Type `A` quivers are normalized by `xi(1) = 2 a + 1` with `a` the
/// number of arrows pointing toward 1, type `D` quivers by `xi(1) = 0`.
pub fn default_height(q: &DynkinQuiver) -> Vec<i32> {
    let d = q.diagram;
    let mut xi: Vec<Option<i32>> = vec![None; d.rank()];
    xi[0] = Some(0);
    let mut stack = vec![1usize];
    while let Some(i) = stack.pop() {
        let here = xi[i - 1].expect("visited nodes have heights");
        for &(s, t) in &q.arrows {
            let (other, value) = if s == i {
                (t, here + 1)
            } else if t == i {
                (s, here - 1)
            } else {
                continue;
            };
            if xi[other - 1].is_none() {
                xi[other - 1] = Some(value);
                stack.push(other);
            }
        }
    }
    let xi: Vec<i32> = xi.into_iter().map(|x| x.expect("diagrams are connected")).collect();
    let shift = match d.kind {
        Kind::A => 2 * super::arrows_toward_one(q) + 1 - xi[0],
        Kind::D => 0,
    };
    xi.into_iter().map(|x| x + shift).collect()
}

/// The AR-quiver of a Dynkin quiver drawn with the height function `xi`: the
/// roots `s_{c_1} ... s_{c_{k-1}} alpha_{c_k}` of the adapted Coxeter word sit at
/// `(c_k, xi(c_k))`, and each application of the Coxeter transformation moves
/// two ticks down.
pub fn build_gamma_q(q: &DynkinQuiver, xi: &[i32]) -> ARQuiver {
    let d = q.diagram;
    let c = q.coxeter_word();
    let through = |v: Vec<i32>, letters: &[usize]| letters.iter().rev().fold(v, |v, &j| reflect_vec(&d, j, &v));
    let mut placed: HashMap<Root, (usize, i32)> = HashMap::new();
    for (k, &i) in c.iter().enumerate() {
        let mut v = through(Root::simple(&d, i).coeffs, &c[..k]);
        let mut tick = xi[i - 1];
        while is_positive_vec(&v) {
            placed.insert(Root::new(v.clone()), (i, tick));
            v = through(v, &c);
            tick -= 2;
        }
    }
    let class = q.adapted_class();
    let vertices: Vec<Vertex> = class
        .roots()
        .into_iter()
        .map(|root| {
            let (residue, tick) = placed[&root];
            Vertex { root, residue, tick: Some(tick) }
        })
        .collect();
    let arrows = tick_arrows(&d, &vertices);
    ARQuiver { diagram: d, class, vertices, arrows }
}

/// `(h + a_i - b_i) / 2` for each node, with `a_i` and `b_i` the arrows on the
/// path between `i` and `i*` pointing toward `i` and toward `i*`.
pub fn gamma_residue_counts(q: &DynkinQuiver) -> Vec<usize> {
    let d: Diagram = q.diagram;
    let h = match d.kind {
        Kind::A => d.n as i32 + 1,
        Kind::D => 2 * d.n as i32,
    };
    let star = star_involution(&d);
    d.nodes()
        .map(|i| {
            let path = tree_path(&d, i, star[i - 1]);
            let mut a = 0;
            let mut b = 0;
            for w in path.windows(2) {
                if q.arrows.contains(&(w[1], w[0])) {
                    a += 1;
                } else {
                    b += 1;
                }
            }
            ((h + a - b) / 2) as usize
        })
        .collect()
}

fn tree_path(d: &Diagram, from: usize, to: usize) -> Vec<usize> {
    fn go(d: &Diagram, at: usize, to: usize, path: &mut Vec<usize>) -> bool {
        path.push(at);
        if at == to {
            return true;
        }
        for j in d.neighbors(at) {
            if !path.contains(&j) && go(d, j, to, path) {
                return true;
            }
        }
        path.pop();
        false
    }
    let mut path = Vec::new();
    go(d, from, to, &mut path);
    path
}
