use super::FoldedARQuiver;
use crate::rootsys::Root;

/// Which vertices between `alpha` and `beta` enter the sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SiteShape {
    /// Vertices of the neighbouring orbits at `p - 2^{|j|-1}` lying on a path
    /// from `alpha` to `beta`.
    Literal,
    /// Every vertex of a neighbouring orbit strictly between the ticks of
    /// `alpha` and `beta`.
    Mesh,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveSite {
    pub orbit: usize,
    pub tick: i32,
    pub alpha: Root,
    pub beta: Root,
    pub between: Vec<Root>,
    pub holds: bool,
}

#[derive(Clone, Debug, Default)]
pub struct AdditiveReport {
    pub sites: Vec<AdditiveSite>,
}

impl AdditiveReport {
    pub fn failures(&self) -> impl Iterator<Item = &AdditiveSite> {
        self.sites.iter().filter(|s| !s.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.sites.iter().all(|s| s.holds)
    }
}

fn orbit_size(n: usize, i: usize) -> i32 {
    if i == n {
        2
    } else {
        1
    }
}

fn neighbours(n: usize, i: usize) -> Vec<usize> {
    (1..=n).filter(|&j| j + 1 == i || i + 1 == j).collect()
}

/// For every pair `alpha = (i, p - 2^{|i|})`, `beta = (i, p)` of the folded
/// quiver, compare `alpha + beta` with the sum of the roots between them.
pub fn check_additive(f: &FoldedARQuiver, shape: SiteShape) -> AdditiveReport {
    let n = f.n;
    let mut sites = Vec::new();
    for v in &f.vertices {
        let (i, p) = (v.orbit, v.tick);
        let Some(alpha) = f.root_at(i, p - (1 << orbit_size(n, i))) else { continue };
        let lo = p - (1 << orbit_size(n, i));
        let between: Vec<Root> = match shape {
            SiteShape::Literal => neighbours(n, i)
                .into_iter()
                .filter_map(|j| {
                    let t = p - (1 << (orbit_size(n, j) - 1));
                    let g = f.root_at(j, t)?;
                    (t > lo && t < p && f.precedes(g, alpha) && f.precedes(&v.root, g)).then(|| g.clone())
                })
                .collect(),
            SiteShape::Mesh => neighbours(n, i)
                .into_iter()
                .flat_map(|j| (lo + 1..p).filter_map(move |t| f.root_at(j, t).cloned()))
                .collect(),
        };
        let lhs = alpha.add(&v.root);
        let rhs = between.iter().fold(vec![0; lhs.len()], |acc, g| acc.iter().zip(&g.coeffs).map(|(a, b)| a + b).collect());
        sites.push(AdditiveSite {
            orbit: i,
            tick: p,
            alpha: alpha.clone(),
            beta: v.root.clone(),
            between,
            holds: lhs == rhs,
        });
    }
    AdditiveReport { sites }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalShape {
    /// `alpha = (k, t)`, `beta = (k, t + 2)` and the two neighbours at `t + 1`.
    Square,
    /// `alpha = (1, t)`, `beta = (1, t + 2)` and the single neighbour `(2, t + 1)`.
    Triangle,
    /// `alpha = (n, t)`, `beta = (n, t + 4)`, split once into the two vertices of
    /// orbit `n - 1` between them and once into `(n, t + 2)`, `(n - 2, t + 2)`.
    Hexagon,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdentity {
    pub shape: LocalShape,
    pub alpha: Root,
    pub beta: Root,
    pub splittings: Vec<Vec<Root>>,
    pub holds: bool,
}

fn sum(roots: &[&Root]) -> Vec<i32> {
    let len = roots[0].coeffs.len();
    roots.iter().fold(vec![0; len], |acc, r| acc.iter().zip(&r.coeffs).map(|(a, b)| a + b).collect())
}

/// Every square, triangle and hexagon of the folded quiver with all its
/// vertices present, and whether `alpha + beta` equals each splitting.
pub fn local_identities(f: &FoldedARQuiver) -> Vec<LocalIdentity> {
    let n = f.n;
    let mut out = Vec::new();
    let mut push = |shape, alpha: &Root, beta: &Root, splittings: Vec<Vec<&Root>>| {
        let lhs = sum(&[alpha, beta]);
        let holds = splittings.iter().all(|s| sum(s) == lhs);
        out.push(LocalIdentity {
            shape,
            alpha: alpha.clone(),
            beta: beta.clone(),
            splittings: splittings.into_iter().map(|s| s.into_iter().cloned().collect()).collect(),
            holds,
        });
    };
    for v in &f.vertices {
        let (k, t) = (v.orbit, v.tick);
        let at = |i: usize, p: i32| f.root_at(i, p);
        if k == 1 && n >= 2 {
            if let (Some(b), Some(e)) = (at(1, t + 2), at(2, t + 1)) {
                push(LocalShape::Triangle, &v.root, b, vec![vec![e]]);
            }
        }
        if k >= 2 && k < n {
            if let (Some(b), Some(g), Some(e)) = (at(k, t + 2), at(k - 1, t + 1), at(k + 1, t + 1)) {
                push(LocalShape::Square, &v.root, b, vec![vec![g, e]]);
            }
        }
        if k == n && n >= 3 {
            if let (Some(b), Some(m), Some(nu), Some(e), Some(g)) =
                (at(n, t + 4), at(n - 1, t + 1), at(n - 1, t + 3), at(n, t + 2), at(n - 2, t + 2))
            {
                push(LocalShape::Hexagon, &v.root, b, vec![vec![m, nu], vec![e, g]]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::TwistedCoxeter;
    use crate::quiver::{all_folded, folded_from_element};
    use crate::rootsys::{eps_form, parse_root, Automorphism};
    use std::collections::BTreeSet;

    #[test]
    fn mesh_sites_hold() {
        for n in 2..=6 {
            for f in all_folded(n) {
                let r = check_additive(&f, SiteShape::Mesh);
                assert!(r.all_hold(), "n={} body {:?}", n, f.element.body);
                assert_eq!(r.sites.len(), n * n - 1);
            }
        }
    }

    #[test]
    fn literal_sites_fail_only_next_to_the_fork() {
        for n in 3..=6 {
            for f in all_folded(n) {
                let r = check_additive(&f, SiteShape::Literal);
                let bad: BTreeSet<usize> = r.failures().map(|s| s.orbit).collect();
                assert!(bad.iter().all(|&o| o >= n - 1), "n={} body {:?}", n, f.element.body);
                assert!(!bad.is_empty());
            }
        }
    }

    #[test]
    fn local_shapes_hold() {
        for n in 2..=6 {
            for f in all_folded(n) {
                let ids = local_identities(&f);
                assert!(ids.iter().all(|x| x.holds), "n={} body {:?}", n, f.element.body);
                for x in ids.iter().filter(|x| x.shape == LocalShape::Square) {
                    let d = f.diagram();
                    let mut summands = BTreeSet::new();
                    for r in [&x.alpha, &x.beta] {
                        let (a, b) = eps_form(&d, r).unwrap().summands().unwrap();
                        summands.insert(a.abs());
                        summands.insert(b.abs());
                    }
                    assert_eq!(summands.len(), 4);
                }
            }
        }
    }

    #[test]
    fn identities_in_2135() {
        let t = TwistedCoxeter::new(Automorphism::d_fold(4), vec![2, 1, 3, 5]).unwrap();
        let f = folded_from_element(&t).unwrap();
        let d = f.diagram();
        let r = |s: &str| parse_root(&d, s).unwrap();
        let report = check_additive(&f, SiteShape::Mesh);
        let find = |a: &str, b: &str, rest: &[&str]| {
            let pair: BTreeSet<Root> = [r(a), r(b)].into();
            let between: BTreeSet<Root> = rest.iter().map(|s| r(s)).collect();
            report.sites.iter().any(|s| {
                [s.alpha.clone(), s.beta.clone()].into_iter().collect::<BTreeSet<_>>() == pair
                    && s.between.iter().cloned().collect::<BTreeSet<_>>() == between
            })
        };
        assert!(find("<2,4>", "<3,5>", &["<4,5>", "<2,3>"]));
        assert!(find("<2,-5>", "<4,5>", &["<2,4>"]));
        let hexagon = local_identities(&f)
            .into_iter()
            .find(|x| x.shape == LocalShape::Hexagon && x.alpha == r("<1,3>") && x.beta == r("<2,5>"))
            .unwrap();
        assert!(hexagon.holds);
        assert!(hexagon.splittings.contains(&vec![r("<1,2>"), r("<3,5>")]));
    }
}
