//! Minimal pairs of a folded AR-quiver read as spectral parameters of
//! fundamental modules, and the condition they satisfy.

use folded_arq::coxeter::TwistedCoxeter;
use folded_arq::distance::is_minimal_pair;
use folded_arq::dorey::{dorey_branch, module_of, sweep};
use folded_arq::quiver::folded_from_element;
use folded_arq::rootsys::{root_name, Automorphism, Root};

fn main() -> folded_arq::Result<()> {
    let n = 4;
    let f = folded_from_element(&TwistedCoxeter::new(Automorphism::d_fold(n), vec![2, 1, 3, 5])?)?;
    let d = f.diagram();
    let roots: Vec<Root> = f.vertices.iter().map(|v| v.root.clone()).collect();
    for (x, a) in roots.iter().enumerate() {
        for b in &roots[x + 1..] {
            let c = Root::new(a.add(b));
            if f.coord(&c).is_none() || !is_minimal_pair(&f, a, b)? {
                continue;
            }
            let (pa, pb, pc) = (module_of(&f, a)?, module_of(&f, b)?, module_of(&f, &c)?);
            let branch = dorey_branch(n, pa, pb, pc).or_else(|| dorey_branch(n, pb, pa, pc));
            println!(
                "{} + {} = {}   V({}) V({}) -> V({})  {:?}",
                root_name(&d, a),
                root_name(&d, b),
                root_name(&d, &c),
                pa,
                pb,
                pc,
                branch
            );
        }
    }
    let s = sweep(n, false)?;
    println!("\nall {} classes: {} counterexamples, unrealized shapes {:?}", s.classes, s.counterexamples, s.missing_solutions);
    Ok(())
}
