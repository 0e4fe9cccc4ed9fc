//! The `arq` command line, a thin layer over the library. Reports are JSON
//! lines.

use crate::coxeter::{
    class_from_twisted_coxeter, enumerate_twisted_coxeter, qarrow_from_twisted_coxeter, triple_report,
    twisted_coxeter_from_class, twisted_coxeter_from_qarrow, DynkinQuiver, TwistedCoxeter,
};
use crate::denom::{
    c_factor_split_holds, denominator_a, denominator_c, denominator_d, folded_polys_from_table, identity_c_from_table,
    verify_identity_ad, verify_identity_c_with, DistanceTable, FactorPoly, FoldedExponent, Method,
};
use crate::distance::{pair_geometry, SeqContext, SeqM};
use crate::dorey::{dorey_branch, module_of, sweep, SpectralPoint};
use crate::error::{Error, Result};
use crate::quiver::{
    all_folded, check_additive, folded_from_element, folded_from_json, folded_to_json, label_by_gluing,
    label_by_snakes, local_identities, to_dot, to_text, FoldedARQuiver, FoldedJson, SiteShape,
};
use crate::rootsys::{folded_multiplicity, parse_root, root_name, Automorphism, Diagram, Root};
use crate::words::{enumerate_words, join_letters, parse_letters, CommClass};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rayon::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "arq", version, about = "Twisted Coxeter elements and folded AR-quivers of type D")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Labels,
    Additive,
    Gdist,
    Rds,
    Soc,
    Denom,
    Dorey,
    #[value(name = "appendixA", alias = "appendix-a")]
    Triality,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GdistMethod {
    Brute,
    Closed,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DenomType {
    A,
    C,
    D,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every twisted adapted class with its element and quiver, or with
    /// `--words` every reduced word of one class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// A class whose words to list, capped by `ARQ_MAX_EXTENSIONS`.
        #[arg(long)]
        words: Option<String>,
    },
    /// Build the folded AR-quiver of a class.
    Build {
        #[arg(long)]
        n: usize,
        /// Body of the twisted Coxeter element, or a full reduced word.
        #[arg(long = "twisted-coxeter", alias = "class")]
        class: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a folded AR-quiver given by a class or a saved `.quiver.json`.
    Render {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "twisted-coxeter", alias = "class")]
        class: Option<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        tick_offset: i32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over a range of ranks.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// A rank or a range such as `3..5`.
        #[arg(long, default_value = "3..4")]
        n: String,
        #[arg(long, value_enum, default_value = "both")]
        method: GdistMethod,
        /// Pairs checked per class by the search once a class has more.
        #[arg(long, default_value_t = 200)]
        sample: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance of a pair of roots.
    Gdist {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: String,
        /// Two roots such as `"<1,-4> <2,3>"`.
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value = "both")]
        method: GdistMethod,
    },
    /// Denominator formulas and their readings from quivers.
    Denom {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: DenomType,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Test three spectral points against the Dorey condition.
    Dorey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: Option<String>,
        /// `"i:x j:y k:z"` for `V(i)_x`, `V(j)_y` and the target `V(k)_z`.
        #[arg(long)]
        triple: String,
    },
}

/// Parse `"4"` or `"3..5"`.
pub fn parse_rank_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Invalid(format!("bad rank range `{}`", s));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a < 2 || b < a {
        return Err(bad());
    }
    Ok(a..=b)
}

/// A class given either by the body of its twisted Coxeter element or by a
/// reduced word of the longest element.
pub fn parse_class(n: usize, spec: &str) -> Result<TwistedCoxeter> {
    let letters = parse_letters(spec)?;
    let fold = Automorphism::d_fold(n);
    if letters.len() == n {
        TwistedCoxeter::new(fold, letters)
    } else {
        let d = Diagram::d(n);
        crate::words::root_sequence(&d, &letters)?;
        twisted_coxeter_from_class(&CommClass::from_reduced(d, &letters), &fold)
    }
}

/// Split `"<1,-4> <2,3>"` into its roots.
pub fn parse_roots(d: &Diagram, s: &str) -> Result<Vec<Root>> {
    s.split('>')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| parse_root(d, &format!("{}>", p.trim_start_matches(',').trim())))
        .collect()
}

fn seq_json(ctx: &SeqContext, d: &Diagram, m: &SeqM) -> Value {
    let roots: Vec<String> = m
        .mult
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat(root_name(d, ctx.root(k))).take(c as usize))
        .collect();
    json!(roots)
}

fn poly_json(p: &FactorPoly) -> Value {
    json!({ "factors": p.factors, "text": p.to_string() })
}

struct Sink {
    out: Box<dyn Write>,
}

impl Sink {
    fn open(path: &Option<PathBuf>) -> Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(std::fs::File::create(p).map_err(|e| Error::Invalid(e.to_string()))?),
            None => Box::new(std::io::stdout()),
        };
        Ok(Sink { out })
    }

    fn line(&mut self, v: &Value) -> Result<()> {
        self.text(&format!("{}\n", v))
    }

    fn text(&mut self, s: &str) -> Result<()> {
        match self.out.write_all(s.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
            r => r.map_err(|e| Error::Invalid(e.to_string())),
        }
    }
}

/// Run one command and return the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Enumerate { n, format, words: Some(class) } => enumerate_class_words(n, &class, format),
        Command::Enumerate { n, format, words: None } => enumerate(n, format),
        Command::Build { n, class, format, out } => {
            let f = folded_from_element(&parse_class(n, &class)?)?;
            emit_quiver(&f, format, 0, &out)
        }
        Command::Render { input, n, class, format, tick_offset, out } => {
            let f = match (input, n, class) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| Error::Invalid(e.to_string()))?;
                    let j: FoldedJson = serde_json::from_str(&text).map_err(|e| Error::Invalid(e.to_string()))?;
                    folded_from_json(&j)?
                }
                (None, Some(n), Some(c)) => folded_from_element(&parse_class(n, &c)?)?,
                _ => return Err(Error::Invalid("render needs --input or both --n and --twisted-coxeter".into())),
            };
            emit_quiver(&f, format, tick_offset, &out)
        }
        Command::Verify { suite, n, method, sample, seed, out } => {
            let mut sink = Sink::open(&out)?;
            verify(suite, parse_rank_range(&n)?, method, sample, seed, &mut sink)
        }
        Command::Gdist { n, class, pair, method } => gdist(n, &class, &pair, method),
        Command::Denom { kind, n, k, l, verify } => denom(kind, n, k, l, verify),
        Command::Dorey { n, class, triple } => dorey(n, class.as_deref(), &triple),
    }
}

fn enumerate(n: usize, format: Format) -> Result<i32> {
    let mut sink = Sink::open(&None)?;
    let fold = Automorphism::d_fold(n);
    let elements = enumerate_twisted_coxeter(&fold);
    let mut ok = elements.len() == 1 << n;
    for t in &elements {
        let c = class_from_twisted_coxeter(t)?;
        let q = qarrow_from_twisted_coxeter(t)?;
        let round_trip = twisted_coxeter_from_class(&c, &fold)? == *t && twisted_coxeter_from_qarrow(&q) == *t;
        ok &= round_trip;
        match format {
            Format::Text => sink.text(&format!("{}\t{}\t{}\t{}\n", t, c, q, round_trip))?,
            _ => sink.line(&json!({
                "body": t.body,
                "element": t.to_string(),
                "class": c,
                "quiver": q,
                "round_trip": round_trip,
            }))?,
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn enumerate_class_words(n: usize, class: &str, format: Format) -> Result<i32> {
    let c = class_from_twisted_coxeter(&parse_class(n, class)?)?;
    let mut sink = Sink::open(&None)?;
    for w in enumerate_words(&c)? {
        match format {
            Format::Text => sink.text(&format!("{}\n", join_letters(&w)))?,
            _ => sink.line(&json!({ "word": w }))?,
        }
    }
    Ok(0)
}

fn emit_quiver(f: &FoldedARQuiver, format: Format, tick_offset: i32, out: &Option<PathBuf>) -> Result<i32> {
    let mut sink = Sink::open(out)?;
    match format {
        Format::Json => sink.line(&serde_json::to_value(folded_to_json(f)).map_err(|e| Error::Invalid(e.to_string()))?)?,
        Format::Dot => sink.text(&to_dot(f, tick_offset))?,
        Format::Text => sink.text(&to_text(f, tick_offset))?,
    }
    Ok(0)
}

fn gdist(n: usize, class: &str, pair: &str, method: GdistMethod) -> Result<i32> {
    let f = folded_from_element(&parse_class(n, class)?)?;
    let d = f.diagram();
    let roots = parse_roots(&d, pair)?;
    let [a, b] = roots.as_slice() else {
        return Err(Error::Invalid(format!("expected two roots, got {}", roots.len())));
    };
    let mut report = json!({ "class": f.element.to_string(), "pair": [root_name(&d, a), root_name(&d, b)] });
    let mut values = Vec::new();
    if method != GdistMethod::Closed {
        let ctx = SeqContext::new(&f.class);
        let g = ctx.gdist_pair(a, b)?;
        let chain: Vec<Value> = if ctx.roots_comparable(a, b) {
            ctx.gdist_chain(&ctx.pair(a, b)?).iter().map(|m| seq_json(&ctx, &d, m)).collect()
        } else {
            Vec::new()
        };
        report["brute"] = json!({ "gdist": g, "chain": chain });
        values.push(g);
    }
    if method != GdistMethod::Brute {
        let geom = pair_geometry(&f, a, b)?;
        let g = geom.as_ref().map(|x| x.gdist(n)).unwrap_or(0);
        report["closed"] = json!({ "gdist": g, "geometry": geom });
        values.push(g);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    report["agree"] = json!(agree);
    Sink::open(&None)?.line(&report)?;
    Ok(if agree { 0 } else { 1 })
}

fn denom(kind: DenomType, n: usize, k: Option<usize>, l: Option<usize>, verify: bool) -> Result<i32> {
    let mut sink = Sink::open(&None)?;
    let top = match kind {
        DenomType::A | DenomType::C => n,
        DenomType::D => n + 1,
    };
    let ks: Vec<usize> = k.map(|k| vec![k]).unwrap_or_else(|| (1..=top).collect());
    let ls: Vec<usize> = l.map(|l| vec![l]).unwrap_or_else(|| (1..=top).collect());
    for &k in &ks {
        for &l in &ls {
            let p = match kind {
                DenomType::A => denominator_a(n, k, l)?,
                DenomType::C => denominator_c(n, k, l)?,
                DenomType::D => denominator_d(n, k, l)?,
            };
            let mut line = poly_json(&p);
            line["type"] = json!(format!("{:?}", kind));
            line["n"] = json!(n);
            line["k"] = json!(k);
            line["l"] = json!(l);
            sink.line(&line)?;
        }
    }
    if !verify {
        return Ok(0);
    }
    let mut ok = true;
    match kind {
        DenomType::C => {
            let method = if n <= 4 { Method::Search } else { Method::Closed };
            for f in all_folded(n) {
                let r = verify_identity_c_with(&f, FoldedExponent::Ceil, method)?;
                ok &= r.all_hold();
                sink.line(&json!({ "verify": f.element.to_string(), "holds": r.all_hold(), "first_failure": r.first_failure() }))?;
            }
        }
        DenomType::A | DenomType::D => {
            let d = if kind == DenomType::A { Diagram::a(n) } else { Diagram::d(n) };
            for q in DynkinQuiver::all(d) {
                let r = verify_identity_ad(&q)?;
                ok &= r.all_hold();
                sink.line(&json!({ "verify": q.to_string(), "correction": r.correction, "holds": r.all_hold(), "first_failure": r.first_failure() }))?;
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn dorey(n: usize, class: Option<&str>, triple: &str) -> Result<i32> {
    let points: Vec<SpectralPoint> = triple.split_whitespace().map(str::parse).collect::<Result<_>>()?;
    let [left, right, target] = points.as_slice() else {
        return Err(Error::Invalid("expected three points i:x j:y k:z".into()));
    };
    let branch = dorey_branch(n, *left, *right, *target);
    let mut report = json!({ "n": n, "triple": triple, "verdict": branch.is_some(), "branch": branch });
    if let Some(spec) = class {
        let f = folded_from_element(&parse_class(n, spec)?)?;
        let d = f.diagram();
        let mut found = Value::Null;
        'shift: for t in -4 * (n as i32 + 1)..=4 * (n as i32 + 1) {
            let at = |p: &SpectralPoint| f.root_at(p.orbit, p.exp + t).cloned();
            if let (Some(a), Some(b), Some(c)) = (at(left), at(right), at(target)) {
                if a.add(&b) == c.coeffs {
                    let minimal = crate::distance::is_minimal_pair(&f, &a, &b)?;
                    found = json!({
                        "shift": t,
                        "alpha": root_name(&d, &a),
                        "beta": root_name(&d, &b),
                        "gamma": root_name(&d, &c),
                        "minimal_pair": minimal,
                        "modules": [module_of(&f, &a)?.to_string(), module_of(&f, &b)?.to_string(), module_of(&f, &c)?.to_string()],
                    });
                    break 'shift;
                }
            }
        }
        report["class"] = json!(f.element.to_string());
        report["realized"] = found;
    }
    Sink::open(&None)?.line(&report)?;
    Ok(0)
}

struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn verify(
    suite: Suite,
    ranks: RangeInclusive<usize>,
    method: GdistMethod,
    sample: usize,
    seed: u64,
    sink: &mut Sink,
) -> Result<i32> {
    let suites: Vec<Suite> = if suite == Suite::All {
        vec![Suite::Labels, Suite::Additive, Suite::Gdist, Suite::Rds, Suite::Soc, Suite::Denom, Suite::Dorey, Suite::Triality]
    } else {
        vec![suite]
    };
    let mut all_ok = true;
    for s in suites {
        let ranks: Vec<usize> = if s == Suite::Triality { vec![3] } else { ranks.clone().collect() };
        for n in ranks {
            let t = run_suite(s, n, method, sample, seed)?;
            let pass = t.failures.is_empty();
            all_ok &= pass;
            let examples: Vec<&String> = t.failures.iter().take(20).collect();
            sink.line(&json!({
                "suite": suite_name(s),
                "n": n,
                "checked": t.checked,
                "failed": t.failures.len(),
                "pass": pass,
                "examples": examples,
            }))?;
        }
    }
    sink.line(&json!({ "summary": true, "pass": all_ok }))?;
    Ok(if all_ok { 0 } else { 1 })
}

fn run_suite(s: Suite, n: usize, method: GdistMethod, sample: usize, seed: u64) -> Result<Tally> {
    match s {
        Suite::Labels | Suite::Additive | Suite::Gdist | Suite::Rds | Suite::Soc => {
            let quivers = all_folded(n);
            let tallies: Vec<Tally> = quivers
                .par_iter()
                .enumerate()
                .map(|(k, f)| class_checks(s, f, method, sample, seed.wrapping_add(k as u64)))
                .collect::<Result<_>>()?;
            Ok(tallies.into_iter().fold(Tally::new(), Tally::merge))
        }
        Suite::Denom => denom_checks(n),
        Suite::Dorey => {
            let mut t = Tally::new();
            let s = sweep(n, n <= 4)?;
            t.checked += s.classes;
            for _ in 0..s.counterexamples {
                t.failures.push("counterexample".into());
            }
            for m in &s.missing_solutions {
                t.failures.push(format!("unrealized {:?}", m));
            }
            Ok(t)
        }
        Suite::Triality => {
            let mut t = Tally::new();
            for power in [1, 2] {
                let r = triple_report(power)?;
                t.check(r.holds(), || format!("{:?}", r));
            }
            Ok(t)
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn class_checks(s: Suite, f: &FoldedARQuiver, method: GdistMethod, sample: usize, seed: u64) -> Result<Tally> {
    let mut t = Tally::new();
    let n = f.n;
    match s {
        Suite::Labels => {
            let labels = f.labels();
            t.check(label_by_gluing(f)? == labels, || format!("gluing {}", f.element));
            t.check(label_by_snakes(f)? == labels, || format!("snakes {}", f.element));
        }
        Suite::Additive => {
            for site in &check_additive(f, SiteShape::Mesh).sites {
                t.check(site.holds, || format!("{} site ({}, {})", f.element, site.orbit, site.tick));
            }
            for id in local_identities(f) {
                t.check(id.holds, || format!("{} {:?}", f.element, id.shape));
            }
        }
        Suite::Gdist => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let roots: Vec<Root> = f.vertices.iter().map(|v| v.root.clone()).collect();
            let mut pairs: Vec<(usize, usize)> =
                (0..roots.len()).flat_map(|a| (a + 1..roots.len()).map(move |b| (a, b))).collect();
            if method != GdistMethod::Closed && pairs.len() > sample {
                pairs.shuffle(&mut rng);
                pairs.truncate(sample);
            }
            let ctx = (method != GdistMethod::Closed).then(|| SeqContext::new(&f.class));
            for (a, b) in pairs {
                let (x, y) = (&roots[a], &roots[b]);
                let closed = pair_geometry(f, x, y)?.map(|g| g.gdist(n)).unwrap_or(0);
                let ok = match &ctx {
                    Some(ctx) => {
                        let brute = ctx.gdist_pair(x, y)?;
                        brute <= 2 && (method == GdistMethod::Brute || brute == closed)
                    }
                    None => closed <= 2,
                };
                t.check(ok, || format!("{} pair {:?} {:?}", f.element, x.coeffs, y.coeffs));
            }
        }
        Suite::Rds => {
            let fold = Automorphism::d_fold(n);
            let ctx = SeqContext::new(&f.class);
            for v in f.vertices.iter().filter(|v| !v.root.is_simple()) {
                let ok = ctx.rds(&v.root)? as i32 == folded_multiplicity(&v.root, &fold);
                t.check(ok, || format!("{} root {:?}", f.element, v.root.coeffs));
            }
        }
        Suite::Soc => {
            let ctx = SeqContext::new(&f.class);
            for a in 0..ctx.len() {
                for b in a + 1..ctx.len() {
                    let p = ctx.pair(ctx.root(a), ctx.root(b))?;
                    let ok = match ctx.soc(&p) {
                        None => false,
                        Some(s) if ctx.gdist(&p) == 2 => {
                            let all = ctx.sequences_of_weight(&ctx.weight(&p));
                            all.iter().filter(|m| ctx.less(&s, m) && ctx.less(m, &p)).count() == 1
                        }
                        Some(_) => true,
                    };
                    t.check(ok, || format!("{} pair {} {}", f.element, a, b));
                }
            }
        }
        _ => unreachable!("not a per-class suite"),
    }
    Ok(t)
}

fn denom_checks(n: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let method = if n <= 4 { Method::Search } else { Method::Closed };
    let mut first = None;
    for f in &all_folded(n) {
        let table = DistanceTable::folded(f, method)?;
        let r = identity_c_from_table(&table, n, FoldedExponent::Ceil)?;
        for c in &r.checks {
            t.check(c.holds, || format!("{} ({}, {})", f.element, c.k, c.l));
        }
        let polys = folded_polys_from_table(&table, n, FoldedExponent::Ceil);
        let same = *first.get_or_insert_with(|| polys.clone()) == polys;
        t.check(same, || format!("{} differs from the first class", f.element));
    }
    for k in 1..=n {
        for l in 1..=n {
            t.check(c_factor_split_holds(n, k, l)?, || format!("split ({}, {})", k, l));
        }
    }
    Ok(t)
}
