//! The additive identities of a folded AR-quiver: each root plus its
//! translate equals the sum of the roots between them.

use folded_arq::coxeter::TwistedCoxeter;
use folded_arq::quiver::{check_additive, folded_from_element, local_identities, SiteShape};
use folded_arq::rootsys::{root_name, Automorphism};

fn main() -> folded_arq::Result<()> {
    let f = folded_from_element(&TwistedCoxeter::new(Automorphism::d_fold(4), vec![2, 1, 3, 5])?)?;
    let d = f.diagram();
    let names = |rs: &[folded_arq::rootsys::Root]| rs.iter().map(|r| root_name(&d, r)).collect::<Vec<_>>().join(" + ");
    for site in check_additive(&f, SiteShape::Mesh).sites {
        println!(
            "({}, {:>2})  {} + {} = {}  {}",
            site.orbit,
            site.tick,
            root_name(&d, &site.alpha),
            root_name(&d, &site.beta),
            names(&site.between),
            if site.holds { "ok" } else { "FAILS" }
        );
    }
    for id in local_identities(&f) {
        let splits: Vec<String> = id.splittings.iter().map(|s| names(s)).collect();
        println!("{:?}: {} + {} = {}", id.shape, root_name(&d, &id.alpha), root_name(&d, &id.beta), splits.join(" = "));
    }
    Ok(())
}
