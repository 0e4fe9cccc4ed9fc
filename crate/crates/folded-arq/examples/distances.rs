//! Generalized distances of pairs of roots: exhaustive search over sequences
//! with the bi-lexicographic order, against the reading from coordinates.

use folded_arq::coxeter::TwistedCoxeter;
use folded_arq::distance::{gdist_closed, is_minimal_pair, pair_geometry, SeqContext};
use folded_arq::quiver::folded_from_element;
use folded_arq::rootsys::{parse_root, root_name, Automorphism};

fn main() -> folded_arq::Result<()> {
    let f = folded_from_element(&TwistedCoxeter::new(Automorphism::d_fold(4), vec![5, 3, 2, 1])?)?;
    let d = f.diagram();
    let ctx = SeqContext::new(&f.class);
    for (a, b) in [("<1,-4>", "<2,3>"), ("<2,-5>", "<3,5>"), ("<2,-4>", "<3,5>"), ("<2,-4>", "<1,3>"), ("<2,-4>", "<1,4>")] {
        let (a, b) = (parse_root(&d, a)?, parse_root(&d, b)?);
        let p = ctx.pair(&a, &b)?;
        let chain: Vec<String> = ctx
            .gdist_chain(&p)
            .iter()
            .map(|m| m.support().iter().map(|&k| root_name(&d, ctx.root(k))).collect::<Vec<_>>().join(" "))
            .collect();
        println!(
            "{} {}: search {} closed {}  kind {:?}  chain [{}]",
            root_name(&d, &a),
            root_name(&d, &b),
            ctx.gdist(&p),
            gdist_closed(&f, &a, &b)?,
            pair_geometry(&f, &a, &b)?.map(|g| g.kind),
            chain.join(" > ")
        );
        if let Some(s) = ctx.soc(&p) {
            let names: Vec<String> = s.support().iter().map(|&k| root_name(&d, ctx.root(k))).collect();
            println!("    socle {}", names.join(" "));
        }
    }
    println!();
    for v in f.vertices.iter().filter(|v| !v.root.is_simple()).take(8) {
        println!("radius of {} is {}", root_name(&d, &v.root), ctx.rds(&v.root)?);
    }
    let (a, b) = (parse_root(&d, "<4,5>")?, parse_root(&d, "<1,-5>")?);
    println!("\n{} + {} minimal: {}", root_name(&d, &a), root_name(&d, &b), is_minimal_pair(&f, &a, &b)?);
    Ok(())
}
