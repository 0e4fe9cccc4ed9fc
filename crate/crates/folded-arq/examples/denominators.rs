//! Denominator formulas as factor lists, and their reading from distances in
//! AR-quivers: ordinary quivers for types A and D, folded ones for type C.

use folded_arq::coxeter::DynkinQuiver;
use folded_arq::denom::{
    denominator_c, folded_distance_polys_with, verify_identity_ad, verify_identity_c_with, FoldedExponent, Method,
};
use folded_arq::quiver::all_folded;
use folded_arq::rootsys::Diagram;

fn main() -> folded_arq::Result<()> {
    let n = 3;
    for k in 1..=n {
        for l in k..=n {
            println!("d_{{{},{}}}(z) = {}", k, l, denominator_c(n, k, l)?);
        }
    }

    for d in [Diagram::a(4), Diagram::d(3)] {
        let holds = DynkinQuiver::all(d.clone())
            .iter()
            .map(verify_identity_ad)
            .collect::<folded_arq::Result<Vec<_>>>()?
            .iter()
            .all(|r| r.all_hold());
        println!("{}: every quiver reproduces the denominators: {}", d, holds);
    }

    let f = &all_folded(n)[0];
    println!("\nfolded distance polynomials of {}:", f.element);
    for ((k, l), p) in folded_distance_polys_with(f, FoldedExponent::Ceil, Method::Search)? {
        println!("  ({}, {}) {}", k, l, p);
    }
    for rule in [FoldedExponent::Ceil, FoldedExponent::Floor] {
        let r = verify_identity_c_with(f, rule, Method::Search)?;
        match r.first_failure() {
            None => println!("{:?}: all {} identities hold", rule, r.checks.len()),
            Some(c) => println!("{:?}: ({}, {}) expected {} got {}", rule, c.k, c.l, c.expected, c.computed),
        }
    }
    Ok(())
}
