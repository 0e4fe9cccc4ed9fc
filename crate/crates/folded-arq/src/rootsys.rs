//! Dynkin diagrams of types A and D with their positive roots in coefficient
//! form.
//!
//! Nodes are numbered from 1. `Diagram::d(n)` is the diagram with `n + 1`
//! nodes whose two short legs are `n` and `n + 1`, both attached to `n - 1`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    D,
}

/// A Dynkin diagram: `A_n` has `n` nodes, `D_{n+1}` has `n + 1` nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagram {
    pub kind: Kind,
    /// The rank parameter `n`.
    pub n: usize,
}

impl Diagram {
    pub fn a(n: usize) -> Self {
        assert!(n >= 1, "A_n needs n >= 1");
        Diagram { kind: Kind::A, n }
    }

    /// The diagram `D_{n+1}`.
    pub fn d(n: usize) -> Self {
        assert!(n >= 2, "D_(n+1) needs n >= 2");
        Diagram { kind: Kind::D, n }
    }

    /// Number of nodes.
    pub fn rank(&self) -> usize {
        match self.kind {
            Kind::A => self.n,
            Kind::D => self.n + 1,
        }
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank()
    }

    pub fn is_node(&self, i: usize) -> bool {
        i >= 1 && i <= self.rank()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        if !self.is_node(i) || !self.is_node(j) || i == j {
            return false;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        match self.kind {
            Kind::A => hi - lo == 1,
            Kind::D => {
                let n = self.n;
                (hi <= n && hi - lo == 1) || (lo == n - 1 && hi == n + 1)
            }
        }
    }

    /// Distinct letters that are not joined by an edge commute.
    pub fn commute(&self, i: usize, j: usize) -> bool {
        i != j && !self.adjacent(i, j)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.nodes().filter(|&j| self.adjacent(i, j)).collect()
    }

    /// Edges as `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.nodes() {
            for j in i + 1..=self.rank() {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn num_positive_roots(&self) -> usize {
        match self.kind {
            Kind::A => self.n * (self.n + 1) / 2,
            Kind::D => self.n * (self.n + 1),
        }
    }

    /// Dual Coxeter number: `n + 1` for `A_n`, `2n` for `D_{n+1}`.
    pub fn dual_coxeter(&self) -> usize {
        match self.kind {
            Kind::A => self.n + 1,
            Kind::D => 2 * self.n,
        }
    }

    pub fn name(&self) -> String {
        match self.kind {
            Kind::A => format!("A{}", self.n),
            Kind::D => format!("D{}", self.n + 1),
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A positive root, stored by its coefficients on the simple roots
/// (`coeffs[i - 1]` is the coefficient of the `i`-th simple root).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i32>,
}

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root { coeffs }
    }

    pub fn simple(d: &Diagram, i: usize) -> Self {
        let mut c = vec![0; d.rank()];
        c[i - 1] = 1;
        Root { coeffs: c }
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }

    pub fn coeff(&self, i: usize) -> i32 {
        self.coeffs[i - 1]
    }

    pub fn add(&self, other: &Root) -> Vec<i32> {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()
    }
}

/// Result of a simple reflection applied to a positive root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedRoot {
    Positive(Root),
    /// The negative of the contained positive root.
    Negative(Root),
}

/// `s_i(v)` on an arbitrary coefficient vector.
pub fn reflect_vec(d: &Diagram, i: usize, v: &[i32]) -> Vec<i32> {
    let mut pairing = 2 * v[i - 1];
    for j in d.neighbors(i) {
        pairing -= v[j - 1];
    }
    let mut out = v.to_vec();
    out[i - 1] -= pairing;
    out
}

pub fn is_positive_vec(v: &[i32]) -> bool {
    v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c > 0)
}

pub fn reflect(d: &Diagram, i: usize, r: &Root) -> SignedRoot {
    let v = reflect_vec(d, i, &r.coeffs);
    if is_positive_vec(&v) {
        SignedRoot::Positive(Root::new(v))
    } else {
        SignedRoot::Negative(Root::new(v.into_iter().map(|c| -c).collect()))
    }
}

/// All positive roots, sorted by height and then by coefficients.
pub fn positive_roots(d: &Diagram) -> Vec<Root> {
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for i in d.nodes() {
        let r = Root::simple(d, i).coeffs;
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        for i in d.nodes() {
            let w = reflect_vec(d, i, &v);
            if is_positive_vec(&w) && seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().map(Root::new).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coeffs.cmp(&a.coeffs)));
    roots
}

/// Positive roots with an index for lookups by coefficient vector.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub diagram: Diagram,
    pub roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
}

impl RootSystem {
    pub fn new(d: Diagram) -> Self {
        let roots = positive_roots(&d);
        let index = roots.iter().enumerate().map(|(k, r)| (r.coeffs.clone(), k)).collect();
        RootSystem { diagram: d, roots, index }
    }

    pub fn index_of(&self, v: &[i32]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i32]) -> bool {
        self.index.contains_key(v)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// The epsilon-coordinate name of a positive root: `<a,b>` / `<a,-b>` in
/// type D (meaning `e_a + e_b` / `e_a - e_b` with `a < b`), `[a,b]` in type A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EpsForm {
    D { a: i32, b: i32 },
    A { a: usize, b: usize },
}

impl EpsForm {
    /// The two signed summands of a type D name.
    pub fn summands(&self) -> Option<(i32, i32)> {
        match *self {
            EpsForm::D { a, b } => Some((a, b)),
            EpsForm::A { .. } => None,
        }
    }
}

impl fmt::Display for EpsForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EpsForm::D { a, b } => write!(f, "<{},{}>", a, b),
            EpsForm::A { a, b } => write!(f, "[{},{}]", a, b),
        }
    }
}

impl FromStr for EpsForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::BadRootString(s.to_string());
        let (open, close) = match (t.chars().next(), t.chars().last()) {
            (Some(o), Some(c)) => (o, c),
            _ => return Err(bad()),
        };
        let inner: String = t.chars().skip(1).take(t.chars().count().saturating_sub(2)).collect();
        let parts: Vec<&str> = inner.split(',').collect();
        match (open, close) {
            ('<', '>') | ('⟨', '⟩') => {
                if parts.len() != 2 {
                    return Err(bad());
                }
                let a: i32 = parts[0].parse().map_err(|_| bad())?;
                let b: i32 = parts[1].parse().map_err(|_| bad())?;
                Ok(EpsForm::D { a, b })
            }
            ('[', ']') => {
                let a: usize = parts[0].parse().map_err(|_| bad())?;
                let b: usize = match parts.len() {
                    1 => a,
                    2 => parts[1].parse().map_err(|_| bad())?,
                    _ => return Err(bad()),
                };
                Ok(EpsForm::A { a, b })
            }
            _ => Err(bad()),
        }
    }
}

/// Epsilon coordinates of a coefficient vector of `D_{n+1}` (length `n + 1`).
fn d_epsilon(n: usize, c: &[i32]) -> Vec<i32> {
    let mut e = vec![0; n + 1];
    for k in 1..=n {
        e[k - 1] += c[k - 1];
        e[k] -= c[k - 1];
    }
    e[n - 1] += c[n];
    e[n] += c[n];
    e
}

pub fn eps_form(d: &Diagram, r: &Root) -> Result<EpsForm> {
    let c = &r.coeffs;
    let not_root = || Error::NotARoot(c.clone());
    if c.len() != d.rank() || !is_positive_vec(c) {
        return Err(not_root());
    }
    match d.kind {
        Kind::A => {
            let support: Vec<usize> = (1..=d.n).filter(|&i| c[i - 1] != 0).collect();
            let (a, b) = (support[0], *support.last().unwrap());
            if (a..=b).all(|i| c[i - 1] == 1) && support.len() == b - a + 1 {
                Ok(EpsForm::A { a, b })
            } else {
                Err(not_root())
            }
        }
        Kind::D => {
            let e = d_epsilon(d.n, c);
            let nz: Vec<usize> = (0..e.len()).filter(|&k| e[k] != 0).collect();
            if nz.len() != 2 || e[nz[0]] != 1 || e[nz[1]].abs() != 1 {
                return Err(not_root());
            }
            let a = nz[0] as i32 + 1;
            let b = (nz[1] as i32 + 1) * e[nz[1]];
            Ok(EpsForm::D { a, b })
        }
    }
}

pub fn root_from_eps(d: &Diagram, e: &EpsForm) -> Result<Root> {
    let bad = || Error::BadRootString(e.to_string());
    match (d.kind, *e) {
        (Kind::A, EpsForm::A { a, b }) => {
            if a < 1 || a > b || b > d.n {
                return Err(bad());
            }
            let mut c = vec![0; d.n];
            for i in a..=b {
                c[i - 1] = 1;
            }
            Ok(Root::new(c))
        }
        (Kind::D, EpsForm::D { a, b }) => {
            let n = d.n as i32;
            if a < 1 || a >= b.abs() || b.abs() > n + 1 {
                return Err(bad());
            }
            let mut eps = vec![0i32; d.n + 1];
            eps[(a - 1) as usize] = 1;
            eps[(b.abs() - 1) as usize] = b.signum();
            // invert d_epsilon: partial sums for nodes below n, then solve the fork
            let mut c = vec![0i32; d.n + 1];
            let mut s = 0;
            for k in 1..d.n {
                s += eps[k - 1];
                c[k - 1] = s;
            }
            let twice = eps[d.n - 1] - eps[d.n] + s;
            if twice % 2 != 0 {
                return Err(bad());
            }
            c[d.n - 1] = twice / 2;
            c[d.n] = eps[d.n] + c[d.n - 1];
            let r = Root::new(c);
            if is_positive_vec(&r.coeffs) && d_epsilon(d.n, &r.coeffs) == eps {
                Ok(r)
            } else {
                Err(bad())
            }
        }
        _ => Err(bad()),
    }
}

/// Parse a root name for the given diagram.
pub fn parse_root(d: &Diagram, s: &str) -> Result<Root> {
    root_from_eps(d, &s.parse()?)
}

/// Display name of a root (falls back to the coefficient vector).
pub fn root_name(d: &Diagram, r: &Root) -> String {
    eps_form(d, r).map(|e| e.to_string()).unwrap_or_else(|_| format!("{:?}", r.coeffs))
}

/// Largest coefficient.
pub fn multiplicity(r: &Root) -> i32 {
    r.coeffs.iter().copied().max().unwrap_or(0)
}

/// Largest coefficient sum over an orbit of the automorphism.
pub fn folded_multiplicity(r: &Root, a: &Automorphism) -> i32 {
    a.orbits().iter().map(|o| o.iter().map(|&i| r.coeff(i)).sum::<i32>()).max().unwrap_or(0)
}

/// A permutation of the nodes preserving adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Automorphism {
    pub diagram: Diagram,
    /// `perm[i - 1]` is the image of node `i`.
    pub perm: Vec<usize>,
    pub order: usize,
}

impl Automorphism {
    pub fn from_perm(d: Diagram, perm: Vec<usize>) -> Result<Self> {
        if perm.len() != d.rank() {
            return Err(Error::Invalid("permutation length mismatch".into()));
        }
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != d.nodes().collect::<Vec<_>>() {
            return Err(Error::Invalid("not a permutation of the nodes".into()));
        }
        for (i, j) in d.edges() {
            if !d.adjacent(perm[i - 1], perm[j - 1]) {
                return Err(Error::Invalid("permutation does not preserve adjacency".into()));
            }
        }
        let mut order = 1;
        let mut cur = perm.clone();
        while cur.iter().enumerate().any(|(k, &v)| v != k + 1) {
            cur = cur.iter().map(|&v| perm[v - 1]).collect();
            order += 1;
        }
        Ok(Automorphism { diagram: d, perm, order })
    }

    pub fn identity(d: Diagram) -> Self {
        Automorphism { diagram: d, perm: d.nodes().collect(), order: 1 }
    }

    /// The involution of `D_{n+1}` exchanging the legs `n` and `n + 1`.
    pub fn d_fold(n: usize) -> Self {
        let d = Diagram::d(n);
        let mut perm: Vec<usize> = d.nodes().collect();
        perm.swap(n - 1, n);
        Automorphism { diagram: d, perm, order: 2 }
    }

    /// The order three automorphism of `D_4` fixing 2 and cycling the legs,
    /// `1 -> 3 -> 4 -> 1`, or the opposite cycle when `reverse` is set.
    pub fn triality(reverse: bool) -> Self {
        let d = Diagram::d(3);
        let perm = if reverse { vec![4, 2, 1, 3] } else { vec![3, 2, 4, 1] };
        Automorphism { diagram: d, perm, order: 3 }
    }

    pub fn apply_node(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    /// Image of a node under the `k`-th power.
    pub fn apply_node_pow(&self, i: usize, k: usize) -> usize {
        (0..k % self.order).fold(i, |x, _| self.apply_node(x))
    }

    pub fn pow(&self, k: usize) -> Self {
        let perm = self.diagram.nodes().map(|i| self.apply_node_pow(i, k)).collect();
        Automorphism::from_perm(self.diagram, perm).expect("powers of automorphisms are automorphisms")
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        let mut c = vec![0; r.coeffs.len()];
        for i in self.diagram.nodes() {
            c[self.apply_node(i) - 1] = r.coeff(i);
        }
        Root::new(c)
    }

    /// Orbits, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.diagram.rank() + 1];
        let mut out = Vec::new();
        for i in self.diagram.nodes() {
            if seen[i] {
                continue;
            }
            let mut orbit = vec![i];
            seen[i] = true;
            let mut j = self.apply_node(i);
            while j != i {
                seen[j] = true;
                orbit.push(j);
                j = self.apply_node(j);
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Position of the orbit containing `i` in `orbits()`.
    pub fn orbit_index(&self, i: usize) -> usize {
        self.orbits().iter().position(|o| o.contains(&i)).expect("node in some orbit")
    }
}

/// A reduced word of the longest element, built greedily by appending any
/// letter that increases length.
pub fn longest_word(d: &Diagram) -> Vec<usize> {
    let mut word: Vec<usize> = Vec::new();
    loop {
        let next = d.nodes().find(|&i| {
            let mut v = Root::simple(d, i).coeffs;
            for &j in word.iter().rev() {
                v = reflect_vec(d, j, &v);
            }
            is_positive_vec(&v)
        });
        match next {
            Some(i) => word.push(i),
            None => return word,
        }
    }
}

/// The involution `i -> i*` with `w0(alpha_i) = -alpha_{i*}`, found by acting
/// with a reduced word of `w0` on each simple root. `star[i - 1]` is `i*`.
pub fn star_involution(d: &Diagram) -> Vec<usize> {
    let w0 = longest_word(d);
    d.nodes()
        .map(|i| {
            let mut v = Root::simple(d, i).coeffs;
            for &j in w0.iter().rev() {
                v = reflect_vec(d, j, &v);
            }
            let pos: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
            assert!(pos.len() == 1 && v[pos[0]] == -1, "w0 sends simple roots to negative simple roots");
            pos[0] + 1
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for n in 2..=7 {
            assert_eq!(positive_roots(&Diagram::d(n)).len(), n * (n + 1));
        }
        for n in 1..=7 {
            assert_eq!(positive_roots(&Diagram::a(n)).len(), n * (n + 1) / 2);
        }
        assert_eq!(positive_roots(&Diagram::a(1)), vec![Root::new(vec![1])]);
    }

    #[test]
    fn d4_has_three_roots_with_a_two() {
        let roots = positive_roots(&Diagram::d(3));
        assert_eq!(roots.len(), 12);
        assert_eq!(roots.iter().filter(|r| r.coeffs.contains(&2)).count(), 1);
    }

    #[test]
    fn reflections() {
        let a2 = Diagram::a(2);
        assert_eq!(reflect(&a2, 1, &Root::simple(&a2, 1)), SignedRoot::Negative(Root::simple(&a2, 1)));
        assert_eq!(reflect(&a2, 2, &Root::simple(&a2, 1)), SignedRoot::Positive(Root::new(vec![1, 1])));
        let d5 = Diagram::d(4);
        let r = parse_root(&d5, "<1,5>").unwrap();
        let s = reflect(&d5, 4, &r);
        assert_eq!(s, SignedRoot::Positive(parse_root(&d5, "<1,4>").unwrap()));
    }

    #[test]
    fn eps_forms() {
        let d5 = Diagram::d(4);
        assert_eq!(eps_form(&d5, &Root::simple(&d5, 1)).unwrap().to_string(), "<1,-2>");
        assert_eq!(eps_form(&d5, &Root::new(vec![1, 2, 2, 1, 1])).unwrap().to_string(), "<1,2>");
        assert_eq!(eps_form(&d5, &Root::simple(&d5, 5)).unwrap().to_string(), "<4,5>");
        assert_eq!(eps_form(&d5, &Root::simple(&d5, 4)).unwrap().to_string(), "<4,-5>");
        let a4 = Diagram::a(4);
        assert_eq!(eps_form(&a4, &Root::new(vec![0, 1, 1, 0])).unwrap().to_string(), "[2,3]");
        assert!(eps_form(&d5, &Root::new(vec![1, 0, 1, 0, 0])).is_err());
        for n in 2..=6 {
            let d = Diagram::d(n);
            let mut names = HashSet::new();
            for r in positive_roots(&d) {
                let e = eps_form(&d, &r).unwrap();
                assert_eq!(root_from_eps(&d, &e).unwrap(), r);
                assert_eq!(e.to_string().parse::<EpsForm>().unwrap(), e);
                names.insert(e);
            }
            assert_eq!(names.len(), n * (n + 1));
        }
    }

    #[test]
    fn eps_expansion_matches_sums() {
        // <a,-b> = sum_{a}^{b-1} alpha_i ; <a,b> (b <= n) adds 2 * sum_{b}^{n-1} and alpha_n + alpha_{n+1}
        let n = 5;
        let d = Diagram::d(n);
        for a in 1..=n {
            for b in a + 1..=n + 1 {
                let mut c = vec![0; n + 1];
                for i in a..b {
                    c[i - 1] += 1;
                }
                let name = format!("<{},-{}>", a, b);
                assert_eq!(parse_root(&d, &name).unwrap().coeffs, c, "{}", name);
            }
            for b in a + 1..=n {
                let mut c = vec![0; n + 1];
                for i in a..b {
                    c[i - 1] += 1;
                }
                for j in b..n {
                    c[j - 1] += 2;
                }
                c[n - 1] += 1;
                c[n] += 1;
                let name = format!("<{},{}>", a, b);
                assert_eq!(parse_root(&d, &name).unwrap().coeffs, c, "{}", name);
            }
            let mut c = vec![0; n + 1];
            for i in a..=n + 1 {
                c[i - 1] += 1;
            }
            c[n - 1] -= 1;
            let name = format!("<{},{}>", a, n + 1);
            assert_eq!(parse_root(&d, &name).unwrap().coeffs, c, "{}", name);
        }
    }

    #[test]
    fn multiplicities() {
        let n = 4;
        let d = Diagram::d(n);
        let fold = Automorphism::d_fold(n);
        for a in 1..n {
            let r = parse_root(&d, &format!("<{},{}>", a, n)).unwrap();
            assert_eq!((multiplicity(&r), folded_multiplicity(&r, &fold)), (1, 2));
        }
        let r = parse_root(&d, "<1,2>").unwrap();
        assert_eq!((multiplicity(&r), folded_multiplicity(&r, &fold)), (2, 2));
        for i in d.nodes() {
            let s = Root::simple(&d, i);
            assert_eq!((multiplicity(&s), folded_multiplicity(&s, &fold)), (1, 1));
        }
    }

    #[test]
    fn stars() {
        assert_eq!(star_involution(&Diagram::a(4)), vec![4, 3, 2, 1]);
        assert_eq!(star_involution(&Diagram::d(4)), vec![1, 2, 3, 5, 4]);
        assert_eq!(star_involution(&Diagram::d(3)), vec![1, 2, 3, 4]);
        assert_eq!(star_involution(&Diagram::d(2)), vec![1, 3, 2]);
        assert_eq!(longest_word(&Diagram::d(4)).len(), 20);
    }

    #[test]
    fn orbits_and_automorphisms() {
        assert_eq!(Automorphism::d_fold(4).orbits(), vec![vec![1], vec![2], vec![3], vec![4, 5]]);
        assert_eq!(Automorphism::triality(false).orbits(), vec![vec![1, 3, 4], vec![2]]);
        assert_eq!(Automorphism::identity(Diagram::a(3)).orbits().len(), 3);
        let t = Automorphism::triality(false);
        assert_eq!(t.pow(2), Automorphism::triality(true));
        assert!(Automorphism::from_perm(Diagram::d(3), vec![3, 2, 4, 1]).is_ok());
        assert!(Automorphism::from_perm(Diagram::d(3), vec![2, 1, 3, 4]).is_err());
    }
}
