//! Labeling a folded AR-quiver by gluing two type `A_n` AR-quivers and by
//! following snakes, checked against the root sequence.

use folded_arq::coxeter::TwistedCoxeter;
use folded_arq::quiver::{
    coordinate_laws, folded_from_element, gluing_correspondence, label_by_gluing, label_by_snakes, snakes_and_swings,
};
use folded_arq::rootsys::{root_name, Automorphism};

fn main() -> folded_arq::Result<()> {
    let f = folded_from_element(&TwistedCoxeter::new(Automorphism::d_fold(4), vec![2, 1, 3, 5])?)?;
    let d = f.diagram();
    let direct = f.labels();
    println!("gluing agrees: {}", label_by_gluing(&f)? == direct);
    println!("snakes agree:  {}", label_by_snakes(&f)? == direct);

    println!("\ngluing, upper and lower copies:");
    let mut glued = gluing_correspondence(&f)?;
    glued.sort_by_key(|g| (g.coord.0, -g.coord.1));
    for g in glued {
        println!("  {:?} {:?}  [A-root {:?}] -> {}", g.coord, g.copy, g.source.coeffs, root_name(&d, &g.label));
    }

    println!("\nsnakes:");
    for s in snakes_and_swings(&f)? {
        println!("  m = {}  summand {:+}  +swing {:?}  -swing {:?}", s.m, s.summand, s.positive_swing(), s.negative_swing());
    }
    println!("\n{:?}", coordinate_laws(&f)?);
    Ok(())
}
