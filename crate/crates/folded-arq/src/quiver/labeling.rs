use super::{build_gamma_q, FoldedARQuiver};
use crate::coxeter::{project_to_a, DynkinQuiver};
use crate::error::{Error, Result};
use crate::rootsys::{eps_form, root_from_eps, Diagram, EpsForm, Root};
use std::collections::{BTreeSet, HashMap};

/// Root labels keyed by folded coordinate.
pub type Labeling = HashMap<(usize, i32), Root>;

/// Label the folded coordinates by gluing the AR-quiver of the underlying
/// type `A_n` quiver on top of its upside-down copy.
///
/// The upper copy keeps the height function of the folded quiver. The lower
/// copy moves `(i, p)` to `(n + 1 - i, p - n - 1)`. Labels `[a, b]` then turn
/// into `<a, -b-1>` outside the central strip and into `<a, b+1>` inside it,
/// while the labels `[i, n]` become `<i, +-(n+1)>` with opposite signs in the
/// two copies.
pub fn label_by_gluing(f: &FoldedARQuiver) -> Result<Labeling> {
    Ok(gluing_correspondence(f)?.into_iter().map(|g| (g.coord, g.label)).collect())
}

/// Which copy of the type `A_n` quiver a glued vertex comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GluedCopy {
    Upper,
    Lower,
}

/// One vertex of the gluing: its folded coordinate and label, and the type
/// `A_n` root it was copied from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedVertex {
    pub copy: GluedCopy,
    pub source: Root,
    pub coord: (usize, i32),
    pub label: Root,
}

pub fn gluing_correspondence(f: &FoldedARQuiver) -> Result<Vec<GluedVertex>> {
    let n = f.n;
    let d = f.diagram();
    let contains_n = f.element.body.contains(&n);
    let qa = DynkinQuiver::from_coxeter_word(Diagram::a(n), &project_to_a(&f.element))?;
    let upper = build_gamma_q(&qa, &f.height());
    let lower_shift = -(n as i32 + 1);
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for v in &upper.vertices {
        let (a, b) = match eps_form(&upper.diagram, &v.root)? {
            EpsForm::A { a, b } => (a as i32, b as i32),
            EpsForm::D { .. } => unreachable!("type A labels"),
        };
        let i = v.residue;
        let p = v.tick.expect("gamma quivers carry ticks");
        let n1 = n as i32 + 1;
        let upper_label = if b == n as i32 {
            EpsForm::D { a, b: if contains_n { -n1 } else { n1 } }
        } else if p > i as i32 {
            EpsForm::D { a, b: -(b + 1) }
        } else {
            EpsForm::D { a, b: b + 1 }
        };
        let (li, lp) = (n + 1 - i, p + lower_shift);
        let lower_label = if b == n as i32 {
            EpsForm::D { a, b: if contains_n { n1 } else { -n1 } }
        } else if lp < -(li as i32) {
            EpsForm::D { a, b: -(b + 1) }
        } else {
            EpsForm::D { a, b: b + 1 }
        };
        for (copy, coord, e) in [(GluedCopy::Upper, (i, p), upper_label), (GluedCopy::Lower, (li, lp), lower_label)] {
            if !seen.insert(coord) {
                return Err(Error::Invalid(format!("gluing places two labels at {:?}", coord)));
            }
            out.push(GluedVertex { copy, source: v.root.clone(), coord, label: root_from_eps(&d, &e)? });
        }
    }
    let support: BTreeSet<(usize, i32)> = f.coordinates().into_iter().collect();
    if seen != support {
        return Err(Error::Invalid("glued copies do not cover the folded coordinates".into()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Coordinates with `tick + orbit` constant modulo `2(n + 1)`.
    North,
    /// Coordinates with `tick - orbit` constant modulo `2(n + 1)`.
    South,
}

/// The extended sectional family of index `m`, split into connected pieces
/// ordered from the highest ticks down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionalFamily {
    pub kind: FamilyKind,
    pub m: usize,
    pub pieces: Vec<Vec<(usize, i32)>>,
}

impl SectionalFamily {
    pub fn vertices(&self) -> impl Iterator<Item = &(usize, i32)> {
        self.pieces.iter().flatten()
    }

    pub fn is_connected(&self) -> bool {
        self.pieces.len() <= 1
    }
}

/// A snake: the two extended families of one index together with the summand
/// they share and the signs it takes on each piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snake {
    pub m: usize,
    pub north: SectionalFamily,
    pub south: SectionalFamily,
    pub summand: i32,
    pub signed: Vec<((usize, i32), i32)>,
}

impl Snake {
    /// Vertices carrying `+summand`.
    pub fn positive_swing(&self) -> Vec<(usize, i32)> {
        self.signed.iter().filter(|(_, s)| *s > 0).map(|(c, _)| *c).collect()
    }

    /// Vertices carrying `-summand`.
    pub fn negative_swing(&self) -> Vec<(usize, i32)> {
        self.signed.iter().filter(|(_, s)| *s < 0).map(|(c, _)| *c).collect()
    }
}

fn family(f: &FoldedARQuiver, kind: FamilyKind, m: usize) -> SectionalFamily {
    let n = f.n as i32;
    let key = |(i, t): (usize, i32)| {
        let c = match kind {
            FamilyKind::North => t + i as i32,
            FamilyKind::South => t - i as i32,
        };
        c.div_euclid(2)
    };
    let mut by_line: std::collections::BTreeMap<i32, Vec<(usize, i32)>> = Default::default();
    for c in f.coordinates() {
        let line = key(c);
        if line.rem_euclid(n + 1) as usize == m {
            by_line.entry(line).or_default().push(c);
        }
    }
    let mut pieces: Vec<Vec<(usize, i32)>> = Vec::new();
    for (_, mut line) in by_line.into_iter().rev() {
        line.sort_unstable();
        let mut current: Vec<(usize, i32)> = Vec::new();
        for c in line {
            if let Some(&(pi, _)) = current.last() {
                if c.0 != pi + 1 {
                    pieces.push(std::mem::take(&mut current));
                }
            }
            current.push(c);
        }
        if !current.is_empty() {
            pieces.push(current);
        }
    }
    SectionalFamily { kind, m, pieces }
}

/// Every snake of the folded quiver with its summand, read off from the shape
/// of the coordinates alone.
pub fn snakes_and_swings(f: &FoldedARQuiver) -> Result<Vec<Snake>> {
    let n = f.n;
    let contains_n = f.element.body.contains(&n);
    let mut out = Vec::new();
    for m in 0..=n {
        let north = family(f, FamilyKind::North, m);
        let south = family(f, FamilyKind::South, m);
        let mut signed = Vec::new();
        let mut mark = |fam: &SectionalFamily, piece_signs: &[i32]| {
            for (piece, &s) in fam.pieces.iter().zip(piece_signs.iter().cycle()) {
                signed.extend(piece.iter().map(|&c| (c, s)));
            }
        };
        let summand;
        if m == 0 {
            summand = n as i32 + 1;
            let (sn, ss) = if contains_n { (1, -1) } else { (-1, 1) };
            mark(&north, &[sn]);
            mark(&south, &[ss]);
        } else {
            match (north.pieces.len(), south.pieces.len()) {
                (1, 1) => {
                    summand = 1;
                    mark(&north, &[1]);
                    mark(&south, &[1]);
                }
                (2, 1) => {
                    summand = n as i32 - (north.pieces[0].len() as i32 - 1);
                    mark(&north, &[1, -1]);
                    mark(&south, &[1]);
                }
                (1, 2) => {
                    summand = south.pieces[0].len() as i32 + 1;
                    mark(&north, &[1]);
                    mark(&south, &[-1, 1]);
                }
                shape => return Err(Error::Invalid(format!("unexpected sectional shape {:?} at m = {}", shape, m))),
            }
        }
        out.push(Snake { m, north, south, summand, signed });
    }
    Ok(out)
}

/// Label every coordinate by the two signed summands of the snakes through it.
pub fn label_by_snakes(f: &FoldedARQuiver) -> Result<Labeling> {
    let d = f.diagram();
    let mut summands: HashMap<(usize, i32), Vec<i32>> = HashMap::new();
    for s in snakes_and_swings(f)? {
        for (c, sign) in &s.signed {
            summands.entry(*c).or_default().push(sign * s.summand);
        }
    }
    let mut labels = Labeling::new();
    for (c, mut pair) in summands {
        pair.sort_by_key(|x| x.abs());
        if pair.len() != 2 || pair[0] <= 0 || pair[0] == pair[1].abs() {
            return Err(Error::Invalid(format!("summands {:?} at {:?} do not name a root", pair, c)));
        }
        labels.insert(c, root_from_eps(&d, &EpsForm::D { a: pair[0], b: pair[1] })?);
    }
    Ok(labels)
}
