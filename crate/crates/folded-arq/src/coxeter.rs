//! Twisted Coxeter elements of `D_{n+1}` and of `D_4` under triality, with the
//! Dynkin quivers and commutation classes they correspond to.

use crate::error::{Error, Result};
use crate::rootsys::{Automorphism, Diagram, Kind};
use crate::words::{foata, r_cluster_point, root_sequence, CommClass, Word};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// An ordinary Dynkin quiver: one arrow `(source, target)` per edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinQuiver {
    pub diagram: Diagram,
    pub arrows: Vec<(usize, usize)>,
}

impl DynkinQuiver {
    pub fn new(diagram: Diagram, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = arrows.iter().map(|&(s, t)| (s.min(t), s.max(t))).collect();
        edges.sort_unstable();
        if edges != diagram.edges() {
            return Err(Error::Invalid("arrows must orient each edge exactly once".into()));
        }
        let mut arrows = arrows;
        arrows.sort_by_key(|&(s, t)| (s.min(t), s.max(t)));
        Ok(DynkinQuiver { diagram, arrows })
    }

    /// All `2^{edges}` orientations.
    pub fn all(diagram: Diagram) -> Vec<DynkinQuiver> {
        let edges = diagram.edges();
        (0..1usize << edges.len())
            .map(|mask| {
                let arrows = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (a, b) } else { (b, a) })
                    .collect();
                DynkinQuiver { diagram, arrows }
            })
            .collect()
    }

    /// The quiver whose sink sequence is the given Coxeter word: an arrow
    /// points to whichever endpoint occurs first.
    pub fn from_coxeter_word(diagram: Diagram, word: &[usize]) -> Result<Self> {
        let mut sorted = word.to_vec();
        sorted.sort_unstable();
        if sorted != diagram.nodes().collect::<Vec<_>>() {
            return Err(Error::Invalid("a Coxeter word uses every node once".into()));
        }
        let pos = |i: usize| word.iter().position(|&x| x == i).unwrap();
        let arrows = diagram.edges().into_iter().map(|(a, b)| if pos(a) < pos(b) { (b, a) } else { (a, b) }).collect();
        Ok(DynkinQuiver { diagram, arrows })
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != i)
    }

    pub fn sinks(&self) -> BTreeSet<usize> {
        self.diagram.nodes().filter(|&i| self.is_sink(i)).collect()
    }

    pub fn sources(&self) -> BTreeSet<usize> {
        self.diagram.nodes().filter(|&i| self.is_source(i)).collect()
    }

    /// Reverse all arrows at `i` when it is a sink or a source.
    pub fn reflect(&self, i: usize) -> DynkinQuiver {
        if !self.is_sink(i) && !self.is_source(i) {
            return self.clone();
        }
        let arrows = self.arrows.iter().map(|&(s, t)| if s == i || t == i { (t, s) } else { (s, t) }).collect();
        DynkinQuiver { diagram: self.diagram, arrows }
    }

    pub fn reversed(&self) -> DynkinQuiver {
        DynkinQuiver { diagram: self.diagram, arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect() }
    }

    /// A Coxeter word adapted to the quiver.
    pub fn coxeter_word(&self) -> Vec<usize> {
        let mut q = self.clone();
        let mut word = Vec::new();
        let mut left: BTreeSet<usize> = self.diagram.nodes().collect();
        while let Some(&i) = left.iter().find(|&&i| q.is_sink(i)) {
            word.push(i);
            left.remove(&i);
            q = q.reflect(i);
        }
        word
    }

    pub fn is_adapted(&self, word: &[usize]) -> bool {
        let mut q = self.clone();
        for &i in word {
            if !q.diagram.is_node(i) || !q.is_sink(i) {
                return false;
            }
            q = q.reflect(i);
        }
        true
    }

    /// The class of reduced words of the longest element adapted to the quiver:
    /// the longest reduced prefix-closed subword of `c c c ...` for the
    /// adapted Coxeter word `c`.
    pub fn adapted_class(&self) -> CommClass {
        let d = self.diagram;
        let n_roots = d.num_positive_roots();
        let c = self.coxeter_word();
        let mut word: Vec<usize> = Vec::with_capacity(n_roots);
        let mut skipped = BTreeSet::new();
        for &i in c.iter().cycle() {
            if word.len() == n_roots {
                break;
            }
            if skipped.contains(&i) {
                continue;
            }
            let mut v = crate::rootsys::Root::simple(&d, i).coeffs;
            for &j in word.iter().rev() {
                v = crate::rootsys::reflect_vec(&d, j, &v);
            }
            if crate::rootsys::is_positive_vec(&v) {
                word.push(i);
            } else {
                skipped.insert(i);
            }
        }
        debug_assert!(self.is_adapted(&word));
        root_sequence(&d, &word).expect("adapted words are reduced");
        CommClass::from_reduced(d, &word)
    }

    /// Arrows pointing toward `i`, and arrows leaving `i`.
    pub fn in_out(&self, i: usize) -> (usize, usize) {
        let a = self.arrows.iter().filter(|&&(_, t)| t == i).count();
        let b = self.arrows.iter().filter(|&&(s, _)| s == i).count();
        (a, b)
    }
}

impl fmt::Display for DynkinQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arrows.iter().map(|(s, t)| format!("{}->{}", s, t)).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A twisted Coxeter element `w sigma`, with `w` given by a word using one
/// letter from each orbit of `sigma`, held in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedCoxeter {
    pub sigma: Automorphism,
    pub body: Vec<usize>,
}

impl TwistedCoxeter {
    pub fn new(sigma: Automorphism, body: Vec<usize>) -> Result<Self> {
        let d = sigma.diagram;
        if let Some(&bad) = body.iter().find(|&&i| !d.is_node(i)) {
            return Err(Error::BadLetter(bad));
        }
        let orbits: Vec<usize> = body.iter().map(|&i| sigma.orbit_index(i)).sorted().collect();
        if orbits != (0..sigma.orbits().len()).collect::<Vec<_>>() {
            return Err(Error::Invalid("a twisted Coxeter body uses one letter from each orbit".into()));
        }
        let body = foata(&d, &body);
        Ok(TwistedCoxeter { sigma, body })
    }

    pub fn diagram(&self) -> Diagram {
        self.sigma.diagram
    }

    /// The word obtained by concatenating the `sigma^k`-images of the body,
    /// one block per `k`, `|positive roots| / |body|` blocks in all.
    pub fn seed_word(&self) -> Vec<usize> {
        let blocks = self.diagram().num_positive_roots() / self.body.len();
        (0..blocks).flat_map(|k| self.body.iter().map(move |&i| self.sigma.apply_node_pow(i, k))).collect()
    }
}

impl fmt::Display for TwistedCoxeter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", crate::words::join_letters(&self.body))?;
        match self.sigma.order {
            1 => {}
            3 if self.sigma != Automorphism::triality(false) => f.write_str("v^2")?,
            _ => f.write_str("v")?,
        }
        Ok(())
    }
}

/// Every twisted Coxeter element for `sigma`, up to commutation of the body.
pub fn enumerate_twisted_coxeter(sigma: &Automorphism) -> Vec<TwistedCoxeter> {
    let d = sigma.diagram;
    let orbits = sigma.orbits();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for choice in orbits.iter().map(|o| o.iter().copied()).multi_cartesian_product() {
        let k = choice.len();
        for perm in choice.iter().copied().permutations(k) {
            let body = foata(&d, &perm);
            if seen.insert(body.clone()) {
                out.push(TwistedCoxeter { sigma: sigma.clone(), body });
            }
        }
    }
    out.sort_by(|a, b| a.body.cmp(&b.body));
    out
}

/// The Coxeter word of `A_n` obtained by replacing `n + 1` with `n`.
pub fn project_to_a(t: &TwistedCoxeter) -> Vec<usize> {
    let n = t.diagram().n;
    let body: Vec<usize> = t.body.iter().map(|&i| if i == n + 1 { n } else { i }).collect();
    foata(&Diagram::a(n), &body)
}

pub fn class_from_twisted_coxeter(t: &TwistedCoxeter) -> Result<CommClass> {
    let w = t.seed_word();
    root_sequence(&t.diagram(), &w)?;
    Ok(CommClass::from_reduced(t.diagram(), &w))
}

/// Inverse of `class_from_twisted_coxeter`, failing on classes that do not
/// come from a twisted Coxeter element of `sigma`.
pub fn twisted_coxeter_from_class(c: &CommClass, sigma: &Automorphism) -> Result<TwistedCoxeter> {
    if c.diagram != sigma.diagram {
        return Err(Error::NotTwistedAdapted);
    }
    for t in enumerate_twisted_coxeter(sigma) {
        if let Ok(tc) = class_from_twisted_coxeter(&t) {
            if &tc == c {
                return Ok(t);
            }
        }
    }
    Err(Error::NotTwistedAdapted)
}

/// All classes coming from twisted Coxeter elements of `D_{n+1}`, paired
/// with their elements and sorted by body.
pub fn twisted_adapted_classes(n: usize) -> Vec<(TwistedCoxeter, CommClass)> {
    enumerate_twisted_coxeter(&Automorphism::d_fold(n))
        .into_iter()
        .map(|t| {
            let c = class_from_twisted_coxeter(&t).expect("twisted seeds are reduced");
            (t, c)
        })
        .collect()
}

/// A twisted Dynkin quiver of `D_{n+1}`: an orientation of the path
/// `1 - 2 - ... - (n-1) - fused`, where the fused node stands for both `n`
/// and `n + 1`, together with the active letter of the fused node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistedQuiver {
    pub n: usize,
    /// `toward_higher[i - 1]` is set when the edge `(i, i + 1)` points to `i + 1`;
    /// the last edge ends at the fused node.
    pub toward_higher: Vec<bool>,
    /// `n` or `n + 1`.
    pub marker: usize,
}

#[derive(Serialize, Deserialize)]
struct TwistedQuiverJson {
    orientation: Vec<(String, String, String)>,
    marker: String,
}

impl Serialize for TwistedQuiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let orientation = self
            .toward_higher
            .iter()
            .enumerate()
            .map(|(k, &up)| (format!("{}", k + 1), format!("{}", k + 2), if up { "→" } else { "←" }.to_string()))
            .collect();
        let marker = if self.marker == self.n { "n" } else { "n+1" }.to_string();
        TwistedQuiverJson { orientation, marker }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwistedQuiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = TwistedQuiverJson::deserialize(d)?;
        let n = j.orientation.len() + 1;
        let toward_higher = j
            .orientation
            .iter()
            .map(|(_, _, a)| match a.as_str() {
                "→" | "->" => Ok(true),
                "←" | "<-" => Ok(false),
                other => Err(D::Error::custom(format!("bad arrow `{}`", other))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let marker = match j.marker.as_str() {
            "n" => n,
            "n+1" => n + 1,
            other => return Err(D::Error::custom(format!("bad marker `{}`", other))),
        };
        Ok(TwistedQuiver { n, toward_higher, marker })
    }
}

impl TwistedQuiver {
    fn fused(&self, i: usize) -> usize {
        i.min(self.n)
    }

    /// Sinks per the twisted rules: the inactive fused letter is never a sink.
    pub fn is_sink(&self, i: usize) -> bool {
        let n = self.n;
        if i == n || i == n + 1 {
            return i == self.marker && self.toward_higher[n - 2];
        }
        let left_ok = i == 1 || self.toward_higher[i - 2];
        let right_ok = !self.toward_higher[i - 1];
        left_ok && right_ok
    }

    pub fn is_source(&self, i: usize) -> bool {
        let n = self.n;
        if i == n || i == n + 1 {
            return i == self.marker && !self.toward_higher[n - 2];
        }
        let left_ok = i == 1 || !self.toward_higher[i - 2];
        let right_ok = self.toward_higher[i - 1];
        left_ok && right_ok
    }

    pub fn sinks(&self) -> BTreeSet<usize> {
        (1..=self.n + 1).filter(|&i| self.is_sink(i)).collect()
    }

    pub fn sources(&self) -> BTreeSet<usize> {
        (1..=self.n + 1).filter(|&i| self.is_source(i)).collect()
    }

    pub fn reflect(&self, i: usize) -> TwistedQuiver {
        let n = self.n;
        let mut q = self.clone();
        if i == n || i == n + 1 {
            if i == self.marker {
                q.marker = if i == n { n + 1 } else { n };
                q.toward_higher[n - 2] = !q.toward_higher[n - 2];
            }
            return q;
        }
        if self.is_sink(i) || self.is_source(i) {
            if i >= 2 {
                q.toward_higher[i - 2] = !q.toward_higher[i - 2];
            }
            q.toward_higher[i - 1] = !q.toward_higher[i - 1];
        }
        q
    }

    /// All `2^n` twisted Dynkin quivers.
    pub fn all(n: usize) -> Vec<TwistedQuiver> {
        let mut out = Vec::new();
        for marker in [n, n + 1] {
            for mask in 0..1usize << (n - 1) {
                let toward_higher = (0..n - 1).map(|k| mask >> k & 1 == 1).collect();
                out.push(TwistedQuiver { n, toward_higher, marker });
            }
        }
        out
    }

    pub fn is_adapted(&self, word: &[usize]) -> bool {
        let mut q = self.clone();
        for &i in word {
            if !q.is_sink(i) {
                return false;
            }
            q = q.reflect(i);
        }
        true
    }

    /// The `A_n` quiver obtained by forgetting the marker.
    pub fn underlying_a(&self) -> DynkinQuiver {
        let arrows = self.toward_higher.iter().enumerate().map(|(k, &up)| if up { (k + 1, k + 2) } else { (k + 2, k + 1) }).collect();
        DynkinQuiver { diagram: Diagram::a(self.n), arrows }
    }

    fn fused_name(&self) -> String {
        let sym = if self.marker == self.n { "⊙" } else { "⊗" };
        format!("{}{}", sym, self.marker)
    }
}

impl fmt::Display for TwistedQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &up) in self.toward_higher.iter().enumerate() {
            write!(f, "{} {} ", k + 1, if up { "→" } else { "←" })?;
        }
        let _ = self.fused(self.n);
        f.write_str(&self.fused_name())
    }
}

pub fn qarrow_from_twisted_coxeter(t: &TwistedCoxeter) -> Result<TwistedQuiver> {
    let d = t.diagram();
    if d.kind != Kind::D || t.sigma.order != 2 {
        return Err(Error::IncompatibleAutomorphism);
    }
    let n = d.n;
    let folded: Vec<usize> = t.body.iter().map(|&i| i.min(n)).collect();
    let pos = |i: usize| folded.iter().position(|&x| x == i).unwrap();
    let toward_higher = (1..n).map(|i| pos(i + 1) < pos(i)).collect();
    let marker = if t.body.contains(&n) { n } else { n + 1 };
    Ok(TwistedQuiver { n, toward_higher, marker })
}

pub fn twisted_coxeter_from_qarrow(q: &TwistedQuiver) -> TwistedCoxeter {
    let mut cur = q.clone();
    let mut body = Vec::with_capacity(q.n);
    let mut left: BTreeSet<usize> = (1..=q.n).collect();
    while let Some(&i) = left.iter().find(|&&i| cur.is_sink(if i == q.n { cur.marker } else { i })) {
        let letter = if i == q.n { cur.marker } else { i };
        body.push(letter);
        left.remove(&i);
        cur = cur.reflect(letter);
    }
    TwistedCoxeter::new(Automorphism::d_fold(q.n), body).expect("sink sequences use each orbit once")
}

/// Whether `word` is adapted to `q`, given as a `Word`.
pub fn is_adapted(w: &Word, q: &TwistedQuiver) -> bool {
    q.is_adapted(&w.letters)
}

/// The quiver of a triply twisted Coxeter element of `D_4`: the orbit node
/// `{1, 3, 4}` with its active letter, joined to 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TripleQuiver {
    pub active: usize,
    /// Set when the arrow points from the orbit node to 2.
    pub toward_two: bool,
}

impl TripleQuiver {
    pub fn is_sink(&self, i: usize) -> bool {
        if i == 2 {
            self.toward_two
        } else {
            i == self.active && !self.toward_two
        }
    }

    /// Reflect at a sink; the orbit node moves its active letter by `step`.
    pub fn reflect(&self, i: usize, step: &Automorphism) -> TripleQuiver {
        if !self.is_sink(i) {
            return self.clone();
        }
        let active = if i == 2 { self.active } else { step.apply_node(self.active) };
        TripleQuiver { active, toward_two: !self.toward_two }
    }
}

impl fmt::Display for TripleQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⊙{} {} 2", self.active, if self.toward_two { "→" } else { "←" })
    }
}

#[derive(Clone, Debug)]
pub struct TripleEntry {
    pub class: CommClass,
    pub element: TwistedCoxeter,
    pub quiver: TripleQuiver,
}

/// The cluster point of `prod_k (2 1)^{k sigma}` for `sigma = v^power`,
/// with each class paired to its element and quiver.
pub fn triply_twisted_classes(power: usize, reverse: bool) -> Result<Vec<TripleEntry>> {
    if power != 1 && power != 2 {
        return Err(Error::OutOfRange(format!("power {} (expected 1 or 2)", power)));
    }
    let base = Automorphism::triality(reverse);
    let sigma = base.pow(power);
    let seed = TwistedCoxeter::new(sigma.clone(), vec![2, 1])?;
    let cluster = r_cluster_point(&class_from_twisted_coxeter(&seed)?);
    let mut out = Vec::new();
    for c in cluster.classes {
        let element = twisted_coxeter_from_class(&c, &sigma)?;
        let quiver = triple_quiver_of(&element);
        out.push(TripleEntry { class: c, element, quiver });
    }
    Ok(out)
}

pub fn triple_quiver_of(t: &TwistedCoxeter) -> TripleQuiver {
    let active = *t.body.iter().find(|&&i| i != 2).expect("body has an orbit letter");
    TripleQuiver { active, toward_two: t.body[0] == 2 }
}

/// Read a triple quiver back into its element.
pub fn triple_element_of(q: &TripleQuiver, sigma: &Automorphism) -> TwistedCoxeter {
    let body = if q.toward_two { vec![2, q.active] } else { vec![q.active, 2] };
    TwistedCoxeter { sigma: sigma.clone(), body }
}

/// Checks on the two cluster points of `D_4` folded by triality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub power: usize,
    pub classes: usize,
    /// Number of cluster points of `D_4` with composition `(6, 6)`.
    pub foldable_clusters: usize,
    /// The clusters of both powers are distinct and are exactly the
    /// foldable ones.
    pub clusters_match: bool,
    pub compositions: BTreeSet<Vec<usize>>,
    /// Classes, elements, quivers and AR-quivers are in bijection.
    pub bijections: bool,
    /// Every class word is adapted to its quiver.
    pub adapted: bool,
    /// Reflecting a quiver at a sink matches the reflection functor.
    pub reflections: bool,
    /// Reversing the 3-cycle gives the cluster of the other power.
    pub direction_independent: bool,
}

impl TripleReport {
    pub fn holds(&self) -> bool {
        self.classes == 6
            && self.foldable_clusters == 2
            && self.clusters_match
            && self.compositions == [vec![6, 6]].into()
            && self.bijections
            && self.adapted
            && self.reflections
            && self.direction_independent
    }
}

fn adapted_to_triple(word: &[usize], q: &TripleQuiver, step: &Automorphism) -> bool {
    let mut q = q.clone();
    for &i in word {
        if !q.is_sink(i) {
            return false;
        }
        q = q.reflect(i, step);
    }
    true
}

pub fn triple_report(power: usize) -> Result<TripleReport> {
    let d = Diagram::d(3);
    let sigma = Automorphism::triality(false).pow(power);
    let entries = triply_twisted_classes(power, false)?;
    let clusters = crate::words::all_cluster_points(&d);
    let mut foldable: Vec<BTreeSet<CommClass>> = Vec::new();
    for cp in &clusters {
        let mut all = true;
        for c in &cp.classes {
            all &= c.is_foldable(&sigma)?;
        }
        if all {
            foldable.push(cp.classes.iter().cloned().collect());
        }
    }
    let compositions = entries.iter().map(|e| e.class.cox_composition(&sigma)).collect::<Result<_>>()?;
    let count = |xs: Vec<String>| xs.into_iter().collect::<BTreeSet<_>>().len();
    let arq: BTreeSet<_> = entries.iter().map(|e| crate::quiver::build_comb_arquiver(&e.class).root_arrows()).collect();
    let bijections = count(entries.iter().map(|e| e.class.to_string()).collect()) == entries.len()
        && count(entries.iter().map(|e| e.element.to_string()).collect()) == entries.len()
        && count(entries.iter().map(|e| e.quiver.to_string()).collect()) == entries.len()
        && arq.len() == entries.len()
        && entries.iter().all(|e| triple_element_of(&e.quiver, &sigma) == e.element);
    let adapted = entries.iter().all(|e| adapted_to_triple(&e.class.canonical, &e.quiver, &sigma));
    let mut reflections = true;
    for e in &entries {
        for i in e.class.sinks() {
            let r = e.class.reflect_right(i);
            let q = e.quiver.reflect(i, &sigma);
            reflections &= entries.iter().any(|x| x.class == r && x.quiver == q);
        }
    }
    let classes_of = |power, reverse| -> Result<BTreeSet<CommClass>> {
        Ok(triply_twisted_classes(power, reverse)?.into_iter().map(|e| e.class).collect())
    };
    let direction_independent = classes_of(1, true)? == classes_of(2, false)? && classes_of(2, true)? == classes_of(1, false)?;
    let (mine, other) = (classes_of(power, false)?, classes_of(3 - power, false)?);
    let clusters_match = mine != other && foldable.contains(&mine) && foldable.contains(&other);
    Ok(TripleReport {
        power,
        classes: entries.len(),
        foldable_clusters: foldable.len(),
        clusters_match,
        compositions,
        bijections,
        adapted,
        reflections,
        direction_independent,
    })
}
