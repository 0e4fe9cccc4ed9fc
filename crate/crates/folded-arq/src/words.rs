//! Reduced words and their commutation classes, kept in Cartier-Foata normal
//! form and studied through heaps.

use crate::error::{Error, Result};
use crate::rootsys::{is_positive_vec, reflect_vec, star_involution, Automorphism, Diagram, Root};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::ControlFlow;

/// Default cap on the number of linear extensions enumerated at once.
pub const DEFAULT_MAX_EXTENSIONS: u64 = 2_000_000;

/// The linear-extension cap, read from `ARQ_MAX_EXTENSIONS` when set.
pub fn max_extensions() -> u64 {
    std::env::var("ARQ_MAX_EXTENSIONS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_MAX_EXTENSIONS)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    #[serde(skip, default = "default_diagram")]
    pub diagram: Diagram,
    pub letters: Vec<usize>,
}

fn default_diagram() -> Diagram {
    Diagram::a(1)
}

impl Word {
    pub fn new(diagram: Diagram, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| !diagram.is_node(i)) {
            return Err(Error::BadLetter(bad));
        }
        Ok(Word { diagram, letters })
    }

    /// Parse space or comma separated node indices.
    pub fn parse(diagram: Diagram, s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        Word::new(diagram, letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_letters(&self.letters))
    }
}

pub fn parse_letters(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Invalid(format!("bad letter `{}`", t))))
        .collect()
}

pub fn join_letters(letters: &[usize]) -> String {
    letters.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

/// The roots `beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`. Fails with the
/// 1-based index of the first letter whose root is not new and positive.
pub fn root_sequence(d: &Diagram, letters: &[usize]) -> Result<Vec<Root>> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(letters.len());
    for (k, &i) in letters.iter().enumerate() {
        if !d.is_node(i) {
            return Err(Error::BadLetter(i));
        }
        let mut v = Root::simple(d, i).coeffs;
        for &j in letters[..k].iter().rev() {
            v = reflect_vec(d, j, &v);
        }
        if !is_positive_vec(&v) || !seen.insert(v.clone()) {
            return Err(Error::NotReduced(k + 1));
        }
        out.push(Root::new(v));
    }
    Ok(out)
}

pub fn is_reduced(d: &Diagram, letters: &[usize]) -> bool {
    root_sequence(d, letters).is_ok()
}

/// Foata normal form: letters grouped by heap depth, each layer ascending.
pub fn foata(d: &Diagram, letters: &[usize]) -> Vec<usize> {
    let mut depth = vec![0usize; letters.len()];
    for k in 0..letters.len() {
        depth[k] = 1 + (0..k)
            .filter(|&j| !d.commute(letters[j], letters[k]))
            .map(|j| depth[j])
            .max()
            .unwrap_or(0);
    }
    let mut pos: Vec<usize> = (0..letters.len()).collect();
    pos.sort_by_key(|&k| (depth[k], letters[k], k));
    pos.into_iter().map(|k| letters[k]).collect()
}

/// A commutation class of a reduced word, held by its normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommClass {
    pub diagram: Diagram,
    pub canonical: Vec<usize>,
}

#[derive(Serialize)]
struct ClassJson<'a> {
    canonical: &'a [usize],
    length: usize,
}

impl Serialize for CommClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassJson { canonical: &self.canonical, length: self.canonical.len() }.serialize(s)
    }
}

impl CommClass {
    /// Class of a word already known to be reduced.
    pub fn from_reduced(d: Diagram, letters: &[usize]) -> Self {
        CommClass { diagram: d, canonical: foata(&d, letters) }
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn word(&self) -> Word {
        Word { diagram: self.diagram, letters: self.canonical.clone() }
    }

    pub fn roots(&self) -> Vec<Root> {
        root_sequence(&self.diagram, &self.canonical).expect("class words are reduced")
    }

    pub fn contains(&self, letters: &[usize]) -> bool {
        letters.len() == self.canonical.len() && foata(&self.diagram, letters) == self.canonical
    }

    pub fn heap(&self) -> Heap {
        Heap::new(&self.diagram, &self.canonical)
    }

    /// Letters that can start a word of the class.
    pub fn sinks(&self) -> BTreeSet<usize> {
        let h = self.heap();
        (0..h.len()).filter(|&k| h.pred[k] == 0).map(|k| self.canonical[k]).collect()
    }

    /// Letters that can end a word of the class.
    pub fn sources(&self) -> BTreeSet<usize> {
        let h = self.heap();
        (0..h.len()).filter(|&k| h.succ[k] == 0).map(|k| self.canonical[k]).collect()
    }

    /// Move the sink `i` from the front to the back as `i*`; identity when
    /// `i` is not a sink.
    pub fn reflect_right(&self, i: usize) -> CommClass {
        if !self.sinks().contains(&i) {
            return self.clone();
        }
        let star = star_involution(&self.diagram);
        let at = self.canonical.iter().position(|&x| x == i).expect("sink occurs");
        let mut w = self.canonical.clone();
        w.remove(at);
        w.push(star[i - 1]);
        CommClass::from_reduced(self.diagram, &w)
    }

    /// Move the source `i` from the back to the front as `i*`; identity when
    /// `i` is not a source.
    pub fn reflect_left(&self, i: usize) -> CommClass {
        if !self.sources().contains(&i) {
            return self.clone();
        }
        let star = star_involution(&self.diagram);
        let at = self.canonical.iter().rposition(|&x| x == i).expect("source occurs");
        let mut w = self.canonical.clone();
        w.remove(at);
        w.insert(0, star[i - 1]);
        CommClass::from_reduced(self.diagram, &w)
    }

    /// Letter counts per orbit of `a`, in the order of `a.orbits()`.
    pub fn cox_composition(&self, a: &Automorphism) -> Result<Vec<usize>> {
        let star = star_involution(&self.diagram);
        let orbits = a.orbits();
        for i in self.diagram.nodes() {
            if a.orbit_index(i) != a.orbit_index(star[i - 1]) {
                return Err(Error::IncompatibleAutomorphism);
            }
        }
        let mut counts = vec![0; orbits.len()];
        for &i in &self.canonical {
            counts[a.orbit_index(i)] += 1;
        }
        Ok(counts)
    }

    pub fn is_foldable(&self, a: &Automorphism) -> Result<bool> {
        let c = self.cox_composition(a)?;
        Ok(c.windows(2).all(|w| w[0] == w[1]))
    }
}

impl fmt::Display for CommClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join_letters(&self.canonical))
    }
}

pub fn canonical_form(w: &Word) -> Result<CommClass> {
    root_sequence(&w.diagram, &w.letters)?;
    Ok(CommClass::from_reduced(w.diagram, &w.letters))
}

pub fn comm_equivalent(a: &Word, b: &Word) -> Result<bool> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// The heap of a word: position `j` lies below `k` when `j < k` and a chain of
/// non-commuting letters joins them.
#[derive(Clone, Debug)]
pub struct Heap {
    pub letters: Vec<usize>,
    /// `pred[k]` has bit `j` set when position `j` is strictly below `k`.
    pub pred: Vec<u128>,
    pub succ: Vec<u128>,
}

impl Heap {
    pub fn new(d: &Diagram, letters: &[usize]) -> Self {
        let n = letters.len();
        assert!(n <= 128, "heaps are limited to 128 positions");
        let mut pred = vec![0u128; n];
        for k in 0..n {
            for j in 0..k {
                if !d.commute(letters[j], letters[k]) {
                    pred[k] |= pred[j] | (1u128 << j);
                }
            }
        }
        let mut succ = vec![0u128; n];
        for k in 0..n {
            for j in 0..n {
                if pred[k] >> j & 1 == 1 {
                    succ[j] |= 1u128 << k;
                }
            }
        }
        Heap { letters: letters.to_vec(), pred, succ }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn below(&self, j: usize, k: usize) -> bool {
        self.pred[k] >> j & 1 == 1
    }

    pub fn comparable(&self, j: usize, k: usize) -> bool {
        j == k || self.below(j, k) || self.below(k, j)
    }

    fn full(&self) -> u128 {
        if self.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.len()) - 1
        }
    }

    /// Number of linear extensions, by memoized recursion over down-sets.
    pub fn count_extensions(&self) -> u128 {
        fn go(h: &Heap, done: u128, memo: &mut HashMap<u128, u128>) -> u128 {
            if done == h.full() {
                return 1;
            }
            if let Some(&v) = memo.get(&done) {
                return v;
            }
            let mut total = 0u128;
            for k in 0..h.len() {
                if done >> k & 1 == 0 && h.pred[k] & !done == 0 {
                    total += go(h, done | 1u128 << k, memo);
                }
            }
            memo.insert(done, total);
            total
        }
        go(self, 0, &mut HashMap::new())
    }

    /// Visit every linear extension (as a sequence of positions) until the
    /// visitor breaks.
    pub fn for_each_extension<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        fn go<F: FnMut(&[usize]) -> ControlFlow<()>>(
            h: &Heap,
            done: u128,
            order: &mut Vec<usize>,
            visit: &mut F,
        ) -> ControlFlow<()> {
            if order.len() == h.len() {
                return visit(order);
            }
            for k in 0..h.len() {
                if done >> k & 1 == 0 && h.pred[k] & !done == 0 {
                    order.push(k);
                    go(h, done | 1u128 << k, order, visit)?;
                    order.pop();
                }
            }
            ControlFlow::Continue(())
        }
        go(self, 0, &mut Vec::with_capacity(self.len()), &mut visit)
    }

    /// All linear extensions, refusing when there are more than `bound`.
    pub fn extensions(&self, bound: u64) -> Result<Vec<Vec<usize>>> {
        let count = self.count_extensions();
        if count > bound as u128 {
            return Err(Error::ExtensionBound { bound, seen: count.min(u64::MAX as u128) as u64 });
        }
        let mut out = Vec::with_capacity(count as usize);
        let _ = self.for_each_extension(|o| {
            out.push(o.to_vec());
            ControlFlow::Continue(())
        });
        Ok(out)
    }
}

/// All words of a class, within the configured extension bound.
pub fn enumerate_words(c: &CommClass) -> Result<Vec<Vec<usize>>> {
    let h = c.heap();
    Ok(h
        .extensions(max_extensions())?
        .into_iter()
        .map(|o| o.into_iter().map(|k| h.letters[k]).collect())
        .collect())
}

/// The closure of a class under all reflection functors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterPoint {
    pub classes: Vec<CommClass>,
}

impl ClusterPoint {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, c: &CommClass) -> bool {
        self.classes.binary_search(c).is_ok()
    }
}

pub fn r_cluster_point(c: &CommClass) -> ClusterPoint {
    let mut seen: HashSet<CommClass> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(c.clone());
    queue.push_back(c.clone());
    while let Some(cur) = queue.pop_front() {
        let mut next = Vec::new();
        for i in cur.sinks() {
            next.push(cur.reflect_right(i));
        }
        for i in cur.sources() {
            next.push(cur.reflect_left(i));
        }
        for nc in next {
            if seen.insert(nc.clone()) {
                queue.push_back(nc);
            }
        }
    }
    let mut classes: Vec<CommClass> = seen.into_iter().collect();
    classes.sort();
    ClusterPoint { classes }
}

/// Every commutation class of reduced words for the longest element.
pub fn longest_element_classes(d: &Diagram) -> Vec<CommClass> {
    let target = d.num_positive_roots();
    let mut level: BTreeSet<Vec<usize>> = [Vec::new()].into();
    for _ in 0..target {
        let mut next = BTreeSet::new();
        for w in &level {
            for i in d.nodes() {
                let mut x = w.clone();
                x.push(i);
                if root_sequence(d, &x).is_ok() {
                    next.insert(foata(d, &x));
                }
            }
        }
        level = next;
    }
    let mut out: Vec<CommClass> = level.into_iter().map(|w| CommClass::from_reduced(*d, &w)).collect();
    out.sort();
    out
}

/// The partition of the classes of the longest element into cluster points.
pub fn all_cluster_points(d: &Diagram) -> Vec<ClusterPoint> {
    let mut left: BTreeSet<CommClass> = longest_element_classes(d).into_iter().collect();
    let mut out = Vec::new();
    while let Some(c) = left.pop_first() {
        let cp = r_cluster_point(&c);
        for x in &cp.classes {
            left.remove(x);
        }
        out.push(cp);
    }
    out
}
