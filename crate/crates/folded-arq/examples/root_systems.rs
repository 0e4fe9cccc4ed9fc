//! Positive roots of `D_5` with their folded multiplicities.

use folded_arq::rootsys::{folded_multiplicity, positive_roots, root_name, Automorphism, Diagram};

fn main() -> folded_arq::Result<()> {
    let n = 4;
    let d = Diagram::d(n);
    let fold = Automorphism::d_fold(n);
    let roots = positive_roots(&d);
    println!("{} has {} positive roots; the fold swaps nodes {} and {}", d, roots.len(), n, n + 1);
    for r in &roots {
        println!(
            "{:>8}  {:?}  height {}  folded multiplicity {}",
            root_name(&d, r),
            r.coeffs,
            r.height(),
            folded_multiplicity(r, &fold)
        );
    }
    Ok(())
}
