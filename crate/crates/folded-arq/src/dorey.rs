//! The spectral condition for three fundamental modules of `C_n^(1)` and its
//! match with minimal pairs in folded AR-quivers.

use crate::distance::{is_minimal_pair, SeqContext};
use crate::error::{Error, Result};
use crate::quiver::{all_folded, FoldedARQuiver};
use crate::rootsys::Root;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A fundamental module of index `orbit` at spectral parameter `(-q_s)^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpectralPoint {
    pub orbit: usize,
    pub exp: i32,
}

impl SpectralPoint {
    pub fn new(orbit: usize, exp: i32) -> Self {
        SpectralPoint { orbit, exp }
    }

    pub fn shifted(self, t: i32) -> Self {
        SpectralPoint { exp: self.exp + t, ..self }
    }
}

impl fmt::Display for SpectralPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.orbit, self.exp)
    }
}

impl std::str::FromStr for SpectralPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("expected orbit:exponent, got `{}`", s));
        let (o, e) = s.split_once(':').ok_or_else(bad)?;
        Ok(SpectralPoint { orbit: o.trim().parse().map_err(|_| bad())?, exp: e.trim().parse().map_err(|_| bad())? })
    }
}

/// Which index is the largest of the three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    Target,
    Left,
    Right,
}

/// The branch under which `V(j)_y (x) V(i)_x -> V(k)_z` is nonzero, with
/// `left = (i, x)`, `right = (j, y)` and `target = (k, z)`.
pub fn dorey_branch(n: usize, left: SpectralPoint, right: SpectralPoint, target: SpectralPoint) -> Option<Branch> {
    let (i, j, k) = (left.orbit as i32, right.orbit as i32, target.orbit as i32);
    let l = i.max(j).max(k);
    if i < 1 || j < 1 || k < 1 || l > n as i32 || i + j + k != 2 * l {
        return None;
    }
    let h = 2 * n as i32 + 2;
    let ratios = (right.exp - target.exp, left.exp - target.exp);
    if l == k && ratios == (-i, j) {
        Some(Branch::Target)
    } else if l == i && ratios == (i - h, j) {
        Some(Branch::Left)
    } else if l == j && ratios == (-i, h - j) {
        Some(Branch::Right)
    } else {
        None
    }
}

pub fn dorey_condition(n: usize, left: SpectralPoint, right: SpectralPoint, target: SpectralPoint) -> bool {
    dorey_branch(n, left, right, target).is_some()
}

/// The spectral point of a root: its folded coordinate.
pub fn module_of(f: &FoldedARQuiver, beta: &Root) -> Result<SpectralPoint> {
    let (orbit, exp) = f.coord(beta).ok_or_else(|| Error::NotARoot(beta.coeffs.clone()))?;
    Ok(SpectralPoint { orbit, exp })
}

/// A triple `(left, right, target)` up to a common shift of the exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShapeKey {
    pub orbits: (usize, usize, usize),
    pub right_minus_target: i32,
    pub left_minus_target: i32,
}

impl ShapeKey {
    pub fn of(left: SpectralPoint, right: SpectralPoint, target: SpectralPoint) -> Self {
        ShapeKey {
            orbits: (left.orbit, right.orbit, target.orbit),
            right_minus_target: right.exp - target.exp,
            left_minus_target: left.exp - target.exp,
        }
    }
}

/// Every solution of the spectral condition, up to common shift.
pub fn spectral_solutions(n: usize) -> BTreeSet<ShapeKey> {
    let mut out = BTreeSet::new();
    let h = 2 * n as i32 + 2;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let (a, b) = (i as i32, j as i32);
                for (r, l) in [(-a, b), (a - h, b), (-a, h - b)] {
                    let key = ShapeKey { orbits: (i, j, k), right_minus_target: r, left_minus_target: l };
                    if dorey_condition(n, SpectralPoint::new(i, l), SpectralPoint::new(j, r), SpectralPoint::new(k, 0)) {
                        out.insert(key);
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub alpha: Root,
    pub beta: Root,
    pub minimal: bool,
    pub spectral: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DoreyReport {
    pub pairs_checked: usize,
    pub minimal_pairs: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Shapes of the minimal pairs found, each ordered so that the spectral
    /// condition holds.
    pub shapes: BTreeSet<ShapeKey>,
}

impl DoreyReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For every pair of roots summing to a root, compare the minimal pair test
/// with the spectral condition in either order. With `search` set the minimal
/// pairs come from exhaustive search, otherwise from coordinates.
pub fn verify_dorey(f: &FoldedARQuiver, search: bool) -> Result<DoreyReport> {
    let ctx = search.then(|| SeqContext::new(&f.class));
    let roots: Vec<Root> = f.vertices.iter().map(|v| v.root.clone()).collect();
    let mut report = DoreyReport::default();
    for (x, a) in roots.iter().enumerate() {
        for b in &roots[x + 1..] {
            let c = Root::new(a.add(b));
            let Some((ko, kt)) = f.coord(&c) else { continue };
            let target = SpectralPoint::new(ko, kt);
            let (pa, pb) = (module_of(f, a)?, module_of(f, b)?);
            let minimal = match &ctx {
                Some(ctx) => ctx.is_minimal_pair(a, b)?,
                None => is_minimal_pair(f, a, b)?,
            };
            let forward = dorey_condition(f.n, pa, pb, target);
            let backward = dorey_condition(f.n, pb, pa, target);
            report.pairs_checked += 1;
            if minimal {
                report.minimal_pairs += 1;
            }
            if forward {
                report.shapes.insert(ShapeKey::of(pa, pb, target));
            }
            if backward {
                report.shapes.insert(ShapeKey::of(pb, pa, target));
            }
            if minimal != (forward || backward) {
                report.counterexamples.push(Counterexample { alpha: a.clone(), beta: b.clone(), minimal, spectral: forward || backward });
            }
        }
    }
    Ok(report)
}

/// Run the comparison over every class of rank `n` and check that the
/// minimal pairs realize every solution of the spectral condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoreySweep {
    pub n: usize,
    pub classes: usize,
    pub counterexamples: usize,
    /// Number of distinct shapes realized in each class.
    pub shapes_per_class: Vec<usize>,
    pub shapes_agree_across_classes: bool,
    pub missing_solutions: Vec<ShapeKey>,
}

impl DoreySweep {
    pub fn holds(&self) -> bool {
        self.counterexamples == 0 && self.missing_solutions.is_empty()
    }
}

pub fn sweep(n: usize, search: bool) -> Result<DoreySweep> {
    let mut union = BTreeSet::new();
    let mut first: Option<BTreeSet<ShapeKey>> = None;
    let mut agree = true;
    let mut counterexamples = 0;
    let mut per_class = Vec::new();
    let quivers = all_folded(n);
    for f in &quivers {
        let r = verify_dorey(f, search)?;
        counterexamples += r.counterexamples.len();
        per_class.push(r.shapes.len());
        match &first {
            None => first = Some(r.shapes.clone()),
            Some(s) => agree &= *s == r.shapes,
        }
        union.extend(r.shapes);
    }
    let missing = spectral_solutions(n).difference(&union).copied().collect();
    Ok(DoreySweep { n, classes: quivers.len(), counterexamples, shapes_per_class: per_class, shapes_agree_across_classes: agree, missing_solutions: missing })
}
