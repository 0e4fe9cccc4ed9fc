use super::{gluing_correspondence, FoldedARQuiver};
use crate::error::Result;
use crate::rootsys::{eps_form, folded_multiplicity, positive_roots, root_from_eps, Automorphism, EpsForm, Root};
use serde::Serialize;
use std::collections::BTreeSet;

/// Which coordinate laws hold for one folded quiver.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoordinateLaws {
    /// `<a, +-(n+1)>` sit exactly at `(i, +-i)`.
    pub last_summand_positions: bool,
    /// `<a, b>` at `(i, k)` and `<a, -b>` at `(j, k')` have `j = n + 1 - i`
    /// and `|k - k'| = n + 1`.
    pub opposite_signs: bool,
    /// The label at `(i1 + i2, i2 - i1)` is the sum of those at `(i1, -i1)`
    /// and `(i2, i2)` when `i1 + i2 <= n`.
    pub central_sums: bool,
    /// Under the gluing, `<i, j>` with `j <= n` comes from `[i, j - 1]`.
    pub gluing_preimages: bool,
    pub central_size: bool,
    /// A non-simple root is central exactly when its folded multiplicity is 2.
    pub central_is_multiplicity_two: bool,
}

impl CoordinateLaws {
    pub fn all_hold(&self) -> bool {
        self.last_summand_positions
            && self.opposite_signs
            && self.central_sums
            && self.gluing_preimages
            && self.central_size
            && self.central_is_multiplicity_two
    }
}

pub fn coordinate_laws(f: &FoldedARQuiver) -> Result<CoordinateLaws> {
    let n = f.n;
    let n1 = n as i32 + 1;
    let d = f.diagram();
    let root = |a: i32, b: i32| root_from_eps(&d, &EpsForm::D { a, b });

    let mut last = BTreeSet::new();
    for a in 1..=n as i32 {
        for b in [-n1, n1] {
            last.insert(f.coord(&root(a, b)?));
        }
    }
    let expect: BTreeSet<_> = (1..=n).flat_map(|i| [Some((i, -(i as i32))), Some((i, i as i32))]).collect();
    let last_summand_positions = last == expect;

    let mut opposite_signs = true;
    for v in &f.vertices {
        let EpsForm::D { a, b } = eps_form(&d, &v.root)? else { continue };
        let Some((j, k)) = f.coord(&root(a, -b)?) else { return Ok(CoordinateLaws::default()) };
        opposite_signs &= j == n + 1 - v.orbit && (k - v.tick).abs() == n1;
    }

    let mut central_sums = true;
    for i1 in 1..n {
        for i2 in 1..n {
            if i1 + i2 > n {
                continue;
            }
            let (b1, b2) = (f.root_at(i1, -(i1 as i32)), f.root_at(i2, i2 as i32));
            let sum = f.root_at(i1 + i2, i2 as i32 - i1 as i32);
            central_sums &= match (b1, b2, sum) {
                (Some(x), Some(y), Some(z)) => x.add(y) == z.coeffs,
                _ => false,
            };
        }
    }

    let mut gluing_preimages = true;
    for g in gluing_correspondence(f)? {
        let EpsForm::D { a, b } = eps_form(&d, &g.label)? else { continue };
        if b > 0 && b <= n as i32 {
            let interval: Vec<i32> = (1..=n as i32).map(|k| i32::from(k >= a && k < b)).collect();
            gluing_preimages &= g.source == Root::new(interval);
        }
    }

    let [_, central, _] = f.regions();
    let central_size = central.len() == n * (n - 1) / 2;
    let fold = Automorphism::d_fold(n);
    let central_is_multiplicity_two = positive_roots(&d)
        .iter()
        .filter(|r| !r.is_simple())
        .all(|r| central.contains(r) == (folded_multiplicity(r, &fold) == 2));

    Ok(CoordinateLaws {
        last_summand_positions,
        opposite_signs,
        central_sums,
        gluing_preimages,
        central_size,
        central_is_multiplicity_two,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::all_folded;

    #[test]
    fn laws_hold_for_every_class() {
        for n in 3..=5 {
            for f in all_folded(n) {
                let laws = coordinate_laws(&f).unwrap();
                assert!(laws.all_hold(), "n={} {} {:?}", n, f.element, laws);
            }
        }
    }
}
