//! Reflection functors at a sink, applied to a twisted Dynkin quiver and to
//! its folded AR-quiver.

use folded_arq::coxeter::{qarrow_from_twisted_coxeter, twisted_coxeter_from_qarrow, TwistedCoxeter};
use folded_arq::quiver::{folded_from_element, reflect_folded, to_text};
use folded_arq::rootsys::Automorphism;

fn main() -> folded_arq::Result<()> {
    let t = TwistedCoxeter::new(Automorphism::d_fold(4), vec![1, 2, 5, 3])?;
    let q = qarrow_from_twisted_coxeter(&t)?;
    let f = folded_from_element(&t)?;
    println!("{}  quiver {}  sinks {:?}", t, q, q.sinks());
    print!("{}", to_text(&f, 0));
    for i in q.sinks() {
        let qi = q.reflect(i);
        let g = reflect_folded(&f, i)?;
        println!("\nreflect at {}: quiver {}  element {}", i, qi, twisted_coxeter_from_qarrow(&qi));
        assert_eq!(g.element, twisted_coxeter_from_qarrow(&qi));
        print!("{}", to_text(&g, 0));
    }
    Ok(())
}
