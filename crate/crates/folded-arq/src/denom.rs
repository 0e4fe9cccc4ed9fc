//! Distance polynomials read off AR-quivers and the closed-form denominator
//! formulas they reproduce for the affine types `A^(1)`, `D^(1)` and `C^(1)`.
//!
//! Every factor is `(z - sign * q_s^exp)` with `q = q_s^2`, so integer powers
//! of `q` carry even exponents.

use crate::coxeter::DynkinQuiver;
use crate::distance::{pair_geometry, SeqContext};
use crate::error::{Error, Result};
use crate::quiver::{build_gamma_q, default_height, ARQuiver, FoldedARQuiver};
use crate::rootsys::{star_involution, Diagram, Kind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub sign: i8,
    pub exp: u32,
}

impl Factor {
    /// `(z - (-q)^t)`.
    pub fn neg_q(t: u32) -> Self {
        Factor { sign: if t % 2 == 0 { 1 } else { -1 }, exp: 2 * t }
    }

    /// `(z - (-q_s)^t)`.
    pub fn neg_qs(t: u32) -> Self {
        Factor { sign: if t % 2 == 0 { 1 } else { -1 }, exp: t }
    }

    /// `(z - q^t)`.
    pub fn q(t: u32) -> Self {
        Factor { sign: 1, exp: 2 * t }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let natural = if self.exp % 2 == 0 { 1 } else { -1 };
        let op = if self.sign == natural { '-' } else { '+' };
        write!(f, "(z {} (-qs)^{})", op, self.exp)
    }
}

/// A product of linear factors, compared as a multiset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorPoly {
    pub factors: Vec<Factor>,
}

impl FactorPoly {
    pub fn new(mut factors: Vec<Factor>) -> Self {
        factors.sort();
        FactorPoly { factors }
    }

    pub fn one() -> Self {
        FactorPoly::default()
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn times(&self, other: &FactorPoly) -> FactorPoly {
        FactorPoly::new(self.factors.iter().chain(&other.factors).copied().collect())
    }

    pub fn with(&self, f: Factor) -> FactorPoly {
        self.times(&FactorPoly::new(vec![f]))
    }

    /// Read every `(-q)^t` as `(-q_s)^t`. Fails on odd exponents.
    pub fn q_to_qs(&self) -> Result<FactorPoly> {
        self.factors
            .iter()
            .map(|f| {
                if f.exp % 2 == 1 {
                    Err(Error::Invalid(format!("factor {} is not a power of q", f)))
                } else {
                    Ok(Factor { sign: f.sign, exp: f.exp / 2 })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(FactorPoly::new)
    }

    /// Multiplicity of each factor.
    pub fn counts(&self) -> BTreeMap<Factor, usize> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            *out.entry(*f).or_insert(0) += 1;
        }
        out
    }
}

impl fmt::Display for FactorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn range_check(what: &str, k: usize, l: usize, top: usize) -> Result<()> {
    if k == 0 || l == 0 || k > top || l > top {
        return Err(Error::OutOfRange(format!("{} indices ({}, {}) outside 1..={}", what, k, l, top)));
    }
    Ok(())
}

fn neg_q_run(base: usize, count: usize) -> Vec<Factor> {
    (1..=count).map(|s| Factor::neg_q((base + 2 * s) as u32)).collect()
}

/// The denominator `d_{k,l}` of `A_n^(1)`, `1 <= k, l <= n`.
pub fn denominator_a(n: usize, k: usize, l: usize) -> Result<FactorPoly> {
    range_check("A", k, l, n)?;
    let count = k.min(l).min(n + 1 - k).min(n + 1 - l);
    Ok(FactorPoly::new(neg_q_run(k.abs_diff(l), count)))
}

/// The two products of `d_{k,l}` of `D_{n+1}^(1)`; the second is empty unless
/// `k, l <= n - 1`.
pub fn denominator_d_parts(n: usize, k: usize, l: usize) -> Result<(FactorPoly, FactorPoly)> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("D_{} needs n >= 3", n + 1)));
    }
    range_check("D", k, l, n + 1)?;
    let (lo, hi) = (k.min(l), k.max(l));
    let parts = if hi <= n - 1 {
        (neg_q_run(hi - lo, lo), neg_q_run(2 * n - k - l, lo))
    } else if lo <= n - 1 {
        (neg_q_run(n - lo, lo), Vec::new())
    } else if k != l {
        ((1..=n / 2).map(|s| Factor::neg_q(4 * s as u32)).collect(), Vec::new())
    } else {
        ((1..=(n + 1) / 2).map(|s| Factor::neg_q(4 * s as u32 - 2)).collect(), Vec::new())
    };
    Ok((FactorPoly::new(parts.0), FactorPoly::new(parts.1)))
}

/// The denominator `d_{k,l}` of `D_{n+1}^(1)`, `1 <= k, l <= n + 1`.
pub fn denominator_d(n: usize, k: usize, l: usize) -> Result<FactorPoly> {
    let (a, b) = denominator_d_parts(n, k, l)?;
    Ok(a.times(&b))
}

/// The two products of `d_{k,l}` of `C_n^(1)`.
pub fn denominator_c_parts(n: usize, k: usize, l: usize) -> Result<(FactorPoly, FactorPoly)> {
    range_check("C", k, l, n)?;
    let first = (1..=k.min(l).min(n - k).min(n - l)).map(|s| Factor::neg_qs((k.abs_diff(l) + 2 * s) as u32));
    let second = (1..=k.min(l)).map(|s| Factor::neg_qs((2 * n + 2 - k - l + 2 * s) as u32));
    Ok((FactorPoly::new(first.collect()), FactorPoly::new(second.collect())))
}

/// The denominator `d_{k,l}` of `C_n^(1)`, `1 <= k, l <= n`, in `q_s` units.
pub fn denominator_c(n: usize, k: usize, l: usize) -> Result<FactorPoly> {
    let (a, b) = denominator_c_parts(n, k, l)?;
    Ok(a.times(&b))
}

/// Where folded distances come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    /// Exhaustive search over sequences.
    #[default]
    Search,
    /// The coordinate formula.
    Closed,
}

/// Pair distances of an AR-quiver with ticks, grouped by residues and gap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    /// `(k, l, t) -> gdist` for `k <= l`.
    values: BTreeMap<(usize, usize, u32), u32>,
}

impl DistanceTable {
    fn build(points: &[(crate::rootsys::Root, usize, i32)], ctx: &SeqContext) -> Result<Self> {
        let mut values: BTreeMap<(usize, usize, u32), u32> = BTreeMap::new();
        for (x, (a, ka, pa)) in points.iter().enumerate() {
            for (b, kb, pb) in &points[x + 1..] {
                if !ctx.roots_comparable(a, b) {
                    continue;
                }
                let key = ((*ka).min(*kb), (*ka).max(*kb), pa.abs_diff(*pb));
                let g = ctx.gdist_pair(a, b)?;
                if let Some(&old) = values.get(&key) {
                    if old != g {
                        return Err(Error::Invalid(format!("pairs at {:?} have distances {} and {}", key, old, g)));
                    }
                }
                values.insert(key, g);
            }
        }
        Ok(DistanceTable { values })
    }

    pub fn from_gamma(g: &ARQuiver) -> Result<Self> {
        let ctx = SeqContext::new(&g.class);
        let points: Vec<_> = g
            .vertices
            .iter()
            .map(|v| Ok((v.root.clone(), v.residue, v.tick.ok_or_else(|| Error::Invalid("quiver without ticks".into()))?)))
            .collect::<Result<_>>()?;
        Self::build(&points, &ctx)
    }

    pub fn from_folded(f: &FoldedARQuiver) -> Result<Self> {
        let ctx = SeqContext::new(&f.class);
        let points: Vec<_> = f.vertices.iter().map(|v| (v.root.clone(), v.orbit, v.tick)).collect();
        Self::build(&points, &ctx)
    }

    /// The same table with distances read from coordinates.
    pub fn from_folded_closed(f: &FoldedARQuiver) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (x, a) in f.vertices.iter().enumerate() {
            for b in &f.vertices[x + 1..] {
                let Some(g) = pair_geometry(f, &a.root, &b.root)? else { continue };
                let key = (a.orbit.min(b.orbit), a.orbit.max(b.orbit), a.tick.abs_diff(b.tick));
                let d = g.gdist(f.n);
                if values.insert(key, d).is_some_and(|old| old != d) {
                    return Err(Error::Invalid(format!("pairs at {:?} have different distances", key)));
                }
            }
        }
        Ok(DistanceTable { values })
    }

    pub fn folded(f: &FoldedARQuiver, method: Method) -> Result<Self> {
        match method {
            Method::Search => Self::from_folded(f),
            Method::Closed => Self::from_folded_closed(f),
        }
    }

    /// The common distance of pairs at residues `k, l` and gap `t`, zero when
    /// there are none.
    pub fn distance(&self, k: usize, l: usize, t: u32) -> u32 {
        self.values.get(&(k.min(l), k.max(l), t)).copied().unwrap_or(0)
    }

    pub fn gaps(&self, k: usize, l: usize) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (k, l) = (k.min(l), k.max(l));
        self.values.range((k, l, 0)..=(k, l, u32::MAX)).map(|(key, v)| (key.2, *v))
    }
}

/// The common distance at residues `k, l` and gap `t` for the AR-quiver of `q`.
pub fn gap_distance(q: &DynkinQuiver, k: usize, l: usize, t: u32) -> Result<u32> {
    let g = build_gamma_q(q, &default_height(q));
    Ok(DistanceTable::from_gamma(&g)?.distance(k, l, t))
}

fn distance_poly_from(table: &DistanceTable, rev: &DistanceTable, k: usize, l: usize) -> FactorPoly {
    let mut exps: BTreeMap<u32, u32> = BTreeMap::new();
    for (t, g) in table.gaps(k, l).chain(rev.gaps(k, l)) {
        let e = exps.entry(t).or_insert(0);
        *e = (*e).max(g);
    }
    FactorPoly::new(exps.into_iter().flat_map(|(t, m)| std::iter::repeat(Factor::neg_q(t)).take(m as usize)).collect())
}

/// Distance polynomials `D_{k,l}` of a Dynkin quiver for all residues, taking
/// at each gap the larger distance of `q` and its reverse.
pub fn distance_polys(q: &DynkinQuiver) -> Result<BTreeMap<(usize, usize), FactorPoly>> {
    let r = q.reversed();
    let a = DistanceTable::from_gamma(&build_gamma_q(q, &default_height(q)))?;
    let b = DistanceTable::from_gamma(&build_gamma_q(&r, &default_height(&r)))?;
    let mut out = BTreeMap::new();
    for k in q.diagram.nodes() {
        for l in q.diagram.nodes() {
            out.insert((k, l), distance_poly_from(&a, &b, k, l));
        }
    }
    Ok(out)
}

pub fn distance_poly(q: &DynkinQuiver, k: usize, l: usize) -> Result<FactorPoly> {
    let all = distance_polys(q)?;
    all.get(&(k, l)).cloned().ok_or_else(|| Error::OutOfRange(format!("residues ({}, {})", k, l)))
}

/// How a folded distance turns into the multiplicity of `(z - (-q_s)^t)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FoldedExponent {
    /// Half the distance, rounded up.
    #[default]
    Ceil,
    /// Half the distance, rounded down.
    Floor,
}

impl FoldedExponent {
    pub fn apply(self, o: u32) -> u32 {
        match self {
            FoldedExponent::Ceil => o.div_ceil(2),
            FoldedExponent::Floor => o / 2,
        }
    }
}

/// Folded distance polynomials `D^_{k,l}` for all orbit pairs.
pub fn folded_distance_polys(f: &FoldedARQuiver) -> Result<BTreeMap<(usize, usize), FactorPoly>> {
    folded_distance_polys_with(f, FoldedExponent::default(), Method::default())
}

pub fn folded_distance_polys_with(
    f: &FoldedARQuiver,
    rule: FoldedExponent,
    method: Method,
) -> Result<BTreeMap<(usize, usize), FactorPoly>> {
    Ok(folded_polys_from_table(&DistanceTable::folded(f, method)?, f.n, rule))
}

/// Folded distance polynomials read off a precomputed table of rank `n`.
pub fn folded_polys_from_table(table: &DistanceTable, n: usize, rule: FoldedExponent) -> BTreeMap<(usize, usize), FactorPoly> {
    let mut out = BTreeMap::new();
    for k in 1..=n {
        for l in 1..=n {
            let factors = table
                .gaps(k, l)
                .flat_map(|(t, g)| std::iter::repeat(Factor::neg_qs(t)).take(rule.apply(g) as usize))
                .collect();
            out.insert((k, l), FactorPoly::new(factors));
        }
    }
    out
}

pub fn folded_distance_poly(f: &FoldedARQuiver, k: usize, l: usize) -> Result<FactorPoly> {
    let all = folded_distance_polys(f)?;
    all.get(&(k, l)).cloned().ok_or_else(|| Error::OutOfRange(format!("orbits ({}, {})", k, l)))
}

/// Outcome of comparing a closed-form denominator with a distance polynomial
/// times its correction factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub k: usize,
    pub l: usize,
    pub expected: FactorPoly,
    pub computed: FactorPoly,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub diagram: String,
    /// Exponent of `q` in the correction factor, in units of `q`.
    pub correction: u32,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

fn closed_form(d: &Diagram, k: usize, l: usize) -> Result<FactorPoly> {
    match d.kind {
        Kind::A => denominator_a(d.n, k, l),
        Kind::D => denominator_d(d.n, k, l),
    }
}

/// Compare `d_{k,l}` with `D_{k,l} * (z - (-q)^h)^{[l = k*]}` for every
/// pair of residues, with `h` the given correction exponent.
pub fn verify_identity_ad_with(q: &DynkinQuiver, h: u32) -> Result<IdentityReport> {
    let d = q.diagram;
    let star = star_involution(&d);
    let polys = distance_polys(q)?;
    let mut checks = Vec::new();
    for ((k, l), poly) in polys {
        let computed = if star[k - 1] == l { poly.with(Factor::neg_q(h)) } else { poly };
        let expected = closed_form(&d, k, l)?;
        checks.push(IdentityCheck { k, l, holds: expected == computed, expected, computed });
    }
    Ok(IdentityReport { diagram: d.name(), correction: h, checks })
}

/// The identity with the dual Coxeter number of the diagram as correction.
pub fn verify_identity_ad(q: &DynkinQuiver) -> Result<IdentityReport> {
    verify_identity_ad_with(q, q.diagram.dual_coxeter() as u32)
}

/// Compare `d_{k,l}` of `C_n^(1)` with `D^_{k,l} * (z - q^{n+1})^{[k = l]}`.
pub fn verify_identity_c(f: &FoldedARQuiver) -> Result<IdentityReport> {
    verify_identity_c_with(f, FoldedExponent::default(), Method::default())
}

pub fn verify_identity_c_with(f: &FoldedARQuiver, rule: FoldedExponent, method: Method) -> Result<IdentityReport> {
    identity_c_from_table(&DistanceTable::folded(f, method)?, f.n, rule)
}

pub fn identity_c_from_table(table: &DistanceTable, n: usize, rule: FoldedExponent) -> Result<IdentityReport> {
    let h = n as u32 + 1;
    let mut checks = Vec::new();
    for ((k, l), poly) in folded_polys_from_table(table, n, rule) {
        let computed = if k == l { poly.with(Factor::q(h)) } else { poly };
        let expected = denominator_c(n, k, l)?;
        checks.push(IdentityCheck { k, l, holds: expected == computed, expected, computed });
    }
    Ok(IdentityReport { diagram: format!("C{}", n), correction: h, checks })
}

/// Whether the two products of `d^C_{k,l}` match `d^{A_{n-1}}_{k,l}` and the
/// second product of `d^{D_{n+2}}_{k,l}`, once `q` is read as `q_s`. The first
/// product of `d^C` is empty when `k` or `l` is `n`.
pub fn c_factor_split_holds(n: usize, k: usize, l: usize) -> Result<bool> {
    let (first, second) = denominator_c_parts(n, k, l)?;
    let a_side = if k < n && l < n { denominator_a(n - 1, k, l)?.q_to_qs()? } else { FactorPoly::one() };
    let d_second = denominator_d_parts(n + 1, k, l)?.1.q_to_qs()?;
    Ok(first == a_side && second == d_second)
}
