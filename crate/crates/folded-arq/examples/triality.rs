//! Twisting `D_4` by the triality automorphism and its square: the cluster
//! points of composition `(6, 6)` and their quivers.

use folded_arq::coxeter::{triple_report, triply_twisted_classes};

fn main() -> folded_arq::Result<()> {
    for power in [1, 2] {
        println!("power {}", power);
        for e in triply_twisted_classes(power, false)? {
            println!("  {}  {}", e.element, e.class);
        }
        println!("  {:?}", triple_report(power)?);
    }
    Ok(())
}
