use folded_arq::coxeter::{
    class_from_twisted_coxeter, enumerate_twisted_coxeter, qarrow_from_twisted_coxeter, triple_report,
    twisted_adapted_classes, twisted_coxeter_from_class, twisted_coxeter_from_qarrow, DynkinQuiver, TwistedCoxeter,
    TwistedQuiver,
};
use folded_arq::denom::{
    c_factor_split_holds, distance_polys, folded_polys_from_table, identity_c_from_table,
    verify_identity_ad, verify_identity_c_with, DistanceTable, FoldedExponent, Method,
};
use folded_arq::distance::{gdist_closed, SeqContext};
use folded_arq::dorey::sweep;
use folded_arq::quiver::{
    all_folded, check_additive, coordinate_laws, fold, folded_from_element, label_by_gluing, label_by_snakes,
    local_identities, reflect_folded, reflect_twisted, FoldedARQuiver, SiteShape,
};
use folded_arq::rootsys::{folded_multiplicity, parse_root, positive_roots, Automorphism, Diagram, Root};
use folded_arq::words::{is_reduced, r_cluster_point, CommClass};
use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_roots(f: &FoldedARQuiver) -> Vec<Root> {
    f.vertices.iter().map(|v| v.root.clone()).collect()
}

fn cardinalities() -> Outcome {
    for n in 3..=6 {
        let fold = Automorphism::d_fold(n);
        let d = Diagram::d(n);
        ensure(positive_roots(&d).len() == n * (n + 1), || format!("positive roots of D{}", n + 1))?;
        let elements = enumerate_twisted_coxeter(&fold);
        let classes = r_cluster_point(&class_from_twisted_coxeter(&elements[0]).map_err(|e| e.to_string())?);
        let quivers = TwistedQuiver::all(n);
        let expect = 1 << n;
        ensure(elements.len() == expect && classes.len() == expect && quivers.len() == expect, || {
            format!("n={}: {} elements, {} classes, {} quivers", n, elements.len(), classes.len(), quivers.len())
        })?;
        let a = Diagram::a(n);
        let qa = DynkinQuiver::all(a.clone());
        let cluster = r_cluster_point(&qa[0].adapted_class());
        ensure(qa.len() == 1 << (n - 1) && cluster.len() == 1 << (n - 1), || format!("A{} adapted cluster", n))?;
    }
    Ok("n = 3..6, 2^n classes each".into())
}

fn reducedness() -> Outcome {
    let mut words = 0;
    for n in 3..=6 {
        let fold = Automorphism::d_fold(n);
        let image: BTreeSet<CommClass> = twisted_adapted_classes(n).into_iter().map(|(_, c)| c).collect();
        for t in enumerate_twisted_coxeter(&fold) {
            let w = t.seed_word();
            ensure(w.len() == n * (n + 1) && is_reduced(&t.diagram(), &w), || format!("{} is not reduced", t))?;
            words += 1;
        }
        let mut body: Vec<usize> = (1..n).collect();
        body.push(n + 1);
        let t = TwistedCoxeter::new(fold, body).map_err(|e| e.to_string())?;
        let c = class_from_twisted_coxeter(&t).map_err(|e| e.to_string())?;
        ensure(is_reduced(&t.diagram(), &t.seed_word()) && image.contains(&c), || format!("{} not in the image", t))?;
    }
    Ok(format!("{} words reduced", words))
}

fn labeling_agreement() -> Outcome {
    let mut classes = 0;
    for n in 3..=6 {
        for f in all_folded(n) {
            let direct = f.labels();
            let gluing = label_by_gluing(&f).map_err(|e| e.to_string())?;
            let snakes = label_by_snakes(&f).map_err(|e| e.to_string())?;
            ensure(direct == gluing && direct == snakes, || format!("labels differ for {}", f.element))?;
            classes += 1;
        }
    }
    Ok(format!("{} classes", classes))
}

fn coordinate_law_check() -> Outcome {
    let mut classes = 0;
    for n in 3..=6 {
        for f in all_folded(n) {
            let laws = coordinate_laws(&f).map_err(|e| e.to_string())?;
            ensure(laws.all_hold(), || format!("{}: {:?}", f.element, laws))?;
            classes += 1;
        }
    }
    Ok(format!("{} classes", classes))
}

fn worked_examples() -> Outcome {
    let fold = Automorphism::d_fold(4);
    let f = folded_from_element(&TwistedCoxeter::new(fold.clone(), vec![2, 1, 3, 5]).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let d = f.diagram();
    let r = |s: &str| parse_root(&d, s).expect("root literal");
    let sum = |xs: &[&str]| xs.iter().fold(vec![0; 5], |acc, s| acc.iter().zip(&r(s).coeffs).map(|(a, b)| a + b).collect::<Vec<i32>>());
    for (lhs, rhs) in [
        (["<2,4>", "<3,5>"], vec!["<4,5>", "<2,3>"]),
        (["<2,-5>", "<4,5>"], vec!["<2,4>"]),
        (["<1,3>", "<2,5>"], vec!["<3,5>", "<1,2>"]),
    ] {
        ensure(sum(&lhs) == sum(&rhs), || format!("{:?} != {:?}", lhs, rhs))?;
        let pair: BTreeSet<Root> = lhs.iter().map(|s| r(s)).collect();
        let found = check_additive(&f, SiteShape::Mesh).sites.iter().any(|s| {
            s.holds && [s.alpha.clone(), s.beta.clone()].into_iter().collect::<BTreeSet<_>>() == pair
        }) || local_identities(&f).iter().any(|x| {
            x.holds && [x.alpha.clone(), x.beta.clone()].into_iter().collect::<BTreeSet<_>>() == pair
        });
        ensure(found, || format!("{:?} is not an additive site", lhs))?;
    }
    let g = folded_from_element(&TwistedCoxeter::new(fold, vec![5, 3, 2, 1]).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let ctx = SeqContext::new(&g.class);
    let pairs = [("<1,-4>", "<2,3>"), ("<2,-5>", "<3,5>"), ("<2,-4>", "<3,5>"), ("<2,-4>", "<1,3>"), ("<2,-4>", "<1,4>")];
    let mut values = Vec::new();
    for (a, b) in pairs {
        let brute = ctx.gdist_pair(&r(a), &r(b)).map_err(|e| e.to_string())?;
        let closed = gdist_closed(&g, &r(a), &r(b)).map_err(|e| e.to_string())?;
        ensure(brute == closed, || format!("{} {}: search {} closed {}", a, b, brute, closed))?;
        values.push(brute);
    }
    ensure(values == [2, 2, 1, 1, 1], || format!("distances {:?}", values))?;
    Ok("3 identities, distances (2,2,1,1,1)".into())
}

fn additive_property() -> Outcome {
    let (mut sites, mut shapes) = (0, 0);
    for n in 3..=6 {
        for f in all_folded(n) {
            let r = check_additive(&f, SiteShape::Mesh);
            ensure(r.all_hold(), || format!("{}: site failure", f.element))?;
            let ids = local_identities(&f);
            ensure(ids.iter().all(|x| x.holds), || format!("{}: local shape failure", f.element))?;
            sites += r.sites.len();
            shapes += ids.len();
        }
    }
    Ok(format!("{} sites, {} local shapes", sites, shapes))
}

fn gdist_equivalence() -> Outcome {
    let mut pairs = 0;
    for n in [3, 4] {
        for f in all_folded(n) {
            let ctx = SeqContext::new(&f.class);
            let roots = all_roots(&f);
            for (x, a) in roots.iter().enumerate() {
                for b in &roots[x + 1..] {
                    let brute = ctx.gdist_pair(a, b).map_err(|e| e.to_string())?;
                    let closed = gdist_closed(&f, a, b).map_err(|e| e.to_string())?;
                    ensure(brute == closed, || format!("{} {:?} {:?}: {} vs {}", f.element, a.coeffs, b.coeffs, brute, closed))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{} pairs (every pair of D4 and D5)", pairs))
}

fn radius_law() -> Outcome {
    let mut roots = 0;
    for n in 3..=6 {
        let fold = Automorphism::d_fold(n);
        for f in all_folded(n) {
            let ctx = SeqContext::new(&f.class);
            for v in f.vertices.iter().filter(|v| !v.root.is_simple()) {
                let rds = ctx.rds(&v.root).map_err(|e| e.to_string())?;
                let m = folded_multiplicity(&v.root, &fold);
                ensure(rds as i32 == m && (1..=2).contains(&m), || format!("{} {:?}: rds {} vs {}", f.element, v.root.coeffs, rds, m))?;
                roots += 1;
            }
            let list = all_roots(&f);
            for (x, a) in list.iter().enumerate() {
                for b in &list[x + 1..] {
                    let g = if n <= 4 { ctx.gdist_pair(a, b) } else { gdist_closed(&f, a, b) }.map_err(|e| e.to_string())?;
                    ensure(g <= 2, || format!("{} gdist {}", f.element, g))?;
                }
            }
        }
    }
    Ok(format!("{} non-simple roots", roots))
}

fn socle() -> Outcome {
    let mut pairs = 0;
    for f in all_folded(3) {
        let ctx = SeqContext::new(&f.class);
        for a in 0..ctx.len() {
            for b in a + 1..ctx.len() {
                let p = ctx.pair(ctx.root(a), ctx.root(b)).map_err(|e| e.to_string())?;
                let weight = ctx.weight(&p);
                let all = ctx.sequences_of_weight(&weight);
                let simple_below: Vec<_> = all.iter().filter(|m| ctx.is_simple(m) && (**m == p || ctx.less(m, &p))).collect();
                ensure(simple_below.len() == 1 && ctx.soc(&p).as_ref() == Some(simple_below[0]), || {
                    format!("{}: {} simple sequences below a pair", f.element, simple_below.len())
                })?;
                if ctx.gdist(&p) == 2 {
                    let s = simple_below[0];
                    let between = all.iter().filter(|m| ctx.less(s, m) && ctx.less(m, &p)).count();
                    ensure(between == 1, || format!("{}: {} intermediate sequences", f.element, between))?;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{} pairs", pairs))
}

fn position_invariance() -> Outcome {
    let mut across: HashMap<(usize, usize, i32), u32> = HashMap::new();
    let mut pairs = 0;
    for n in 3..=5 {
        for f in all_folded(n) {
            let ctx = SeqContext::new(&f.class);
            let mut within: HashMap<(usize, usize, i32), u32> = HashMap::new();
            let roots = all_roots(&f);
            for (x, a) in roots.iter().enumerate() {
                for b in &roots[x + 1..] {
                    let (ca, cb) = (f.coord(a).expect("vertex"), f.coord(b).expect("vertex"));
                    let (lo, hi) = if (ca.1, ca.0) < (cb.1, cb.0) { (ca, cb) } else { (cb, ca) };
                    let key = (lo.0, hi.0, hi.1 - lo.1);
                    let g = ctx.gdist_pair(a, b).map_err(|e| e.to_string())?;
                    ensure(*within.entry(key).or_insert(g) == g, || format!("{}: key {:?} within the class", f.element, key))?;
                    let n_key = (n * 100 + key.0, key.1, key.2);
                    ensure(*across.entry(n_key).or_insert(g) == g, || format!("{}: key {:?} across classes", f.element, key))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{} pairs grouped", pairs))
}

fn polynomial_identities() -> Outcome {
    for d in [Diagram::a(4), Diagram::d(3)] {
        let quivers = DynkinQuiver::all(d.clone());
        let first = distance_polys(&quivers[0]).map_err(|e| e.to_string())?;
        for q in &quivers {
            let r = verify_identity_ad(q).map_err(|e| e.to_string())?;
            ensure(r.all_hold(), || format!("{} {}: {:?}", d.name(), q, r.first_failure()))?;
            ensure(distance_polys(q).map_err(|e| e.to_string())? == first, || format!("{} depends on {}", d.name(), q))?;
        }
    }
    let mut checks = 0;
    for n in 3..=6 {
        let method = if n <= 5 { Method::Search } else { Method::Closed };
        let quivers = all_folded(n);
        let mut first = None;
        for f in &quivers {
            let table = DistanceTable::folded(f, method).map_err(|e| e.to_string())?;
            if n == 5 {
                let closed = DistanceTable::from_folded_closed(f).map_err(|e| e.to_string())?;
                ensure(table == closed, || format!("{}: closed table differs", f.element))?;
            }
            let polys = folded_polys_from_table(&table, n, FoldedExponent::Ceil);
            ensure(*first.get_or_insert_with(|| polys.clone()) == polys, || format!("{} changes the folded polynomials", f.element))?;
            let r = identity_c_from_table(&table, n, FoldedExponent::Ceil).map_err(|e| e.to_string())?;
            ensure(r.all_hold(), || format!("{}: {:?}", f.element, r.first_failure()))?;
            checks += r.checks.len();
        }
        for k in 1..=n {
            for l in 1..=n {
                ensure(c_factor_split_holds(n, k, l).map_err(|e| e.to_string())?, || format!("split n={} ({}, {})", n, k, l))?;
            }
        }
    }
    let f = &all_folded(3)[0];
    let floor = verify_identity_c_with(f, FoldedExponent::Floor, Method::Search).map_err(|e| e.to_string())?;
    Ok(format!(
        "{} (k,l) checks with rounded-up halves; rounded-down halves hold: {}",
        checks,
        floor.all_hold()
    ))
}

fn dorey_equivalence() -> Outcome {
    let mut classes = 0;
    for n in 3..=5 {
        let s = sweep(n, true).map_err(|e| e.to_string())?;
        ensure(s.holds(), || format!("n={}: {} counterexamples, missing {:?}", n, s.counterexamples, s.missing_solutions))?;
        classes += s.classes;
    }
    Ok(format!("{} classes, every additive triple", classes))
}

fn reflection_coherence() -> Outcome {
    let mut steps = 0;
    for n in 3..=5 {
        let sigma = Automorphism::d_fold(n);
        for t in enumerate_twisted_coxeter(&sigma) {
            let q = qarrow_from_twisted_coxeter(&t).map_err(|e| e.to_string())?;
            let c = class_from_twisted_coxeter(&t).map_err(|e| e.to_string())?;
            let f = folded_from_element(&t).map_err(|e| e.to_string())?;
            let x = folded_arq::quiver::coordinates_twisted(&c).map_err(|e| e.to_string())?;
            for i in q.sinks() {
                let reflected = class_from_twisted_coxeter(&twisted_coxeter_from_qarrow(&q.reflect(i))).map_err(|e| e.to_string())?;
                ensure(reflected == c.reflect_right(i), || format!("{} at {}", t, i))?;
                let unfolded = fold(&reflect_twisted(&x, i).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                let direct = reflect_folded(&f, i).map_err(|e| e.to_string())?;
                let key = |g: &FoldedARQuiver| {
                    let mut v: Vec<_> = g.vertices.iter().map(|v| (v.root.clone(), v.orbit, v.tick)).collect();
                    v.sort();
                    v
                };
                ensure(key(&unfolded) == key(&direct), || format!("{} at {}: folded reflections differ", t, i))?;
                steps += 1;
            }
        }
    }
    let t = TwistedCoxeter::new(Automorphism::d_fold(4), vec![1, 2, 5, 3]).map_err(|e| e.to_string())?;
    let q = qarrow_from_twisted_coxeter(&t).map_err(|e| e.to_string())?;
    ensure(q.marker == 5 && q.sinks().contains(&5), || "5 is not a sink of the marked quiver".into())?;
    let q4 = q.reflect(5);
    let t4 = twisted_coxeter_from_qarrow(&q4);
    ensure(q4.marker == 4 && t4.body == vec![1, 2, 3, 4], || format!("r5 gives {}", t4))?;
    let f = folded_from_element(&t).map_err(|e| e.to_string())?;
    let moved = reflect_folded(&f, 5).map_err(|e| e.to_string())?;
    let rebuilt = folded_from_element(&t4).map_err(|e| e.to_string())?;
    let shift: BTreeSet<i32> = moved
        .vertices
        .iter()
        .map(|v| {
            let (o, p) = rebuilt.coord(&v.root).expect("same roots");
            if o == v.orbit { p - v.tick } else { i32::MAX }
        })
        .collect();
    ensure(shift.len() == 1 && !shift.contains(&i32::MAX), || format!("r5 step differs from the rebuild: {:?}", shift))?;
    ensure(twisted_coxeter_from_class(&moved.class, &Automorphism::d_fold(4)).map_err(|e| e.to_string())? == t4, || {
        "r5 class".into()
    })?;
    Ok(format!("{} sink reflections, r5 step reproduced", steps))
}

fn triality_clusters() -> Outcome {
    for power in [1, 2] {
        let r = triple_report(power).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("{:?}", r))?;
    }
    Ok("both powers: one (6,6) cluster of 6 classes each".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("cardinalities", cardinalities),
        ("reducedness", reducedness),
        ("labeling agreement", labeling_agreement),
        ("coordinate laws", coordinate_law_check),
        ("worked examples", worked_examples),
        ("additive property", additive_property),
        ("distance closed form vs search", gdist_equivalence),
        ("radius law", radius_law),
        ("socle uniqueness", socle),
        ("class and position invariance", position_invariance),
        ("polynomial identities", polynomial_identities),
        ("spectral condition vs minimal pairs", dorey_equivalence),
        ("reflection coherence", reflection_coherence),
        ("triality clusters", triality_clusters),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {} ({}; {:.1}s)", k + 1, name, detail, secs),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({}; {:.1}s)", k + 1, name, why, secs);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
