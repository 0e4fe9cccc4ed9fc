//! Every twisted Coxeter element of `D_{n+1}` next to its twisted Dynkin
//! quiver and reduced word.

use folded_arq::coxeter::{
    class_from_twisted_coxeter, enumerate_twisted_coxeter, qarrow_from_twisted_coxeter, twisted_coxeter_from_class,
    twisted_coxeter_from_qarrow,
};
use folded_arq::rootsys::Automorphism;
use folded_arq::words::{is_reduced, join_letters};

fn main() -> folded_arq::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let fold = Automorphism::d_fold(n);
    let elements = enumerate_twisted_coxeter(&fold);
    println!("D{}: {} twisted Coxeter elements", n + 1, elements.len());
    for t in &elements {
        let seed = t.seed_word();
        let class = class_from_twisted_coxeter(t)?;
        let quiver = qarrow_from_twisted_coxeter(t)?;
        assert!(is_reduced(&t.diagram(), &seed));
        assert_eq!(twisted_coxeter_from_class(&class, &fold)?, *t);
        assert_eq!(twisted_coxeter_from_qarrow(&quiver), *t);
        println!("{:<14} {:<12} {}", t.to_string(), quiver.to_string(), join_letters(&seed));
    }
    Ok(())
}
